"""
Tests for the Semidual Duality package.
"""

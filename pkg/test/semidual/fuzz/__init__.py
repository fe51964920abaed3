"""
Tests for the Semidual Fuzz package.
"""

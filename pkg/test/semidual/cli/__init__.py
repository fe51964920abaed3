"""
Tests for the Semidual CLI package.
"""

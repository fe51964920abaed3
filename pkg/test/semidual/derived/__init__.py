"""
Tests for the Semidual Derived package.
"""

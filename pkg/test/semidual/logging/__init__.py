"""
Tests for the Semidual Logging package.
"""

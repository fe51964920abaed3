"""
Tests for the Semidual Ring package.
"""

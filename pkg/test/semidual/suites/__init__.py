"""
Tests for the Semidual Suites package.
"""

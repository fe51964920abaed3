"""
Tests for the Semidual Basechange package.
"""

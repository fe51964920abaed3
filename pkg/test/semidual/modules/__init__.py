"""
Tests for the Semidual Modules package.
"""

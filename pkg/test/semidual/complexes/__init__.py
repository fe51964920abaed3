"""
Tests for the Semidual Complexes package.
"""

"""
Tests Package
Unit and property tests plus the suite evaluation script.
"""

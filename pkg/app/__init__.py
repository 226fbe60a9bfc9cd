"""
Wronskian Jacobi Verifier - Main Application Package
Exact generalized Wronskians and certification of their Jacobi identities.
"""

__version__ = "1.0.0"

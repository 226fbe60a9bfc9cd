"""
Expression Parser Package
Text <-> Polynomial for CLI inputs and fixture files.
"""

from .lexer import ExprToken, tokenize
from .expr_parser import parse_polynomial, render, variable_names

__all__ = ["ExprToken", "tokenize", "parse_polynomial", "render", "variable_names"]

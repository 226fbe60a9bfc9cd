"""
Fixture Files
One polynomial expression per line; '#' starts a comment, blank lines
are skipped.
"""

from pathlib import Path
from typing import List, Union

from app.modules.algebra.polynomial import Polynomial
from app.modules.errors import ParseError
from app.modules.parser.expr_parser import parse_polynomial


def load_polynomial_fixture(path: Union[str, Path], dimension: int) -> List[Polynomial]:
    """
    Raises:
        ParseError: `expected` carries "(<file>:<line>)"
    """
    polynomials = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            text = line.split("#", 1)[0]
            if not text.strip():
                continue
            try:
                polynomials.append(parse_polynomial(text, dimension))
            except ParseError as e:
                raise ParseError(e.position, f"{e.expected} ({path}:{line_number})", e.found) from None
    return polynomials

"""
Polynomial Expression Parser
Recursive-descent parser turning human-written expressions into canonical
Polynomial values, plus the canonical renderer it round-trips with.

Grammar (low to high precedence):
    sum      := signed (('+' | '-') signed)*
    signed   := ['-'] term
    term     := factor ('*' factor)*
    factor   := base ('^' integer)?
    base     := rational | variable | '(' sum ')'
    rational := integer ('/' positive-integer)?

Each term of a sum may carry one unary minus, so "x + -y" reads as
"x - y" while "--x" and "x + --y" are rejected. Multiplication is always
explicit.
"""

import logging
from fractions import Fraction
from typing import Dict, List

from app.config import MAX_EXPONENT, MAX_PAREN_DEPTH
from app.modules.algebra.polynomial import Polynomial, leading_key
from app.modules.errors import ParseError
from app.modules.parser import lexer
from app.modules.parser.lexer import ExprToken, tokenize

logger = logging.getLogger(__name__)


# =============================================================================
# VARIABLE NAMES
# =============================================================================

LETTER_NAMES = ("x", "y", "z")


def variable_names(dimension: int) -> List[str]:
    """Canonical names: x, y, z when d <= 3, else x1..xd."""
    if dimension <= len(LETTER_NAMES):
        return list(LETTER_NAMES[:dimension])
    return [f"x{i}" for i in range(1, dimension + 1)]


def variable_table(dimension: int) -> Dict[str, int]:
    """Accepted spellings -> axis (1-based)."""
    table = {f"x{i}": i for i in range(1, dimension + 1)}
    if dimension <= len(LETTER_NAMES):
        table.update({name: i for i, name in enumerate(LETTER_NAMES[:dimension], start=1)})
    return table


# =============================================================================
# PARSER
# =============================================================================

class Parser:
    """Single-use parser over one token stream."""

    def __init__(self, tokens: List[ExprToken], dimension: int):
        self._tokens = tokens
        self._index = 0
        self._depth = 0
        self.dimension = dimension
        self.variables = variable_table(dimension)

    @property
    def token(self) -> ExprToken:
        return self._tokens[self._index]

    def advance(self) -> ExprToken:
        token = self.token
        if token.kind != lexer.END:
            self._index += 1
        return token

    def expect(self, kind: str, description: str) -> ExprToken:
        if self.token.kind != kind:
            raise ParseError(self.token.position, description, self.token.describe())
        return self.advance()

    def parse(self) -> Polynomial:
        value = self.sum()
        if self.token.kind != lexer.END:
            raise ParseError(self.token.position, "operator or end of input", self.token.describe())
        return value

    def sum(self) -> Polynomial:
        value = self.signed()
        while self.token.kind in (lexer.PLUS, lexer.MINUS):
            operator = self.advance()
            right = self.signed()
            value = value + right if operator.kind == lexer.PLUS else value - right
        return value

    def signed(self) -> Polynomial:
        if self.token.kind == lexer.MINUS:
            self.advance()
            return -self.term()
        return self.term()

    def term(self) -> Polynomial:
        value = self.factor()
        while self.token.kind == lexer.STAR:
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        value = self.base()
        if self.token.kind == lexer.CARET:
            self.advance()
            exponent = self.token
            if exponent.kind != lexer.INTEGER:
                raise ParseError(exponent.position, "non-negative integer exponent", exponent.describe())
            self.advance()
            power = _to_int(exponent)
            if power > MAX_EXPONENT:
                raise ParseError(exponent.position, f"exponent at most {MAX_EXPONENT}", exponent.describe())
            value = value ** power
        return value

    def base(self) -> Polynomial:
        token = self.token
        if token.kind == lexer.INTEGER:
            return Polynomial.constant(self.dimension, self.rational())
        if token.kind == lexer.VARIABLE:
            axis = self.variables.get(token.lexeme)
            if axis is None:
                expected = ", ".join(variable_names(self.dimension))
                raise ParseError(token.position, f"variable ({expected})", token.describe())
            self.advance()
            return Polynomial.variable(self.dimension, axis)
        if token.kind == lexer.LPAREN:
            self.advance()
            self._depth += 1
            if self._depth > MAX_PAREN_DEPTH:
                raise ParseError(token.position, f"at most {MAX_PAREN_DEPTH} nested parentheses", "deeper nesting")
            value = self.sum()
            self.expect(lexer.RPAREN, "')'")
            self._depth -= 1
            return value
        raise ParseError(token.position, "term", token.describe())

    def rational(self) -> Fraction:
        numerator = _to_int(self.advance())
        if self.token.kind != lexer.SLASH:
            return Fraction(numerator)
        self.advance()
        denominator = self.token
        if denominator.kind != lexer.INTEGER:
            raise ParseError(denominator.position, "positive integer denominator", denominator.describe())
        if _to_int(denominator) == 0:
            raise ParseError(denominator.position, "positive integer denominator", "division by zero")
        self.advance()
        return Fraction(numerator, _to_int(denominator))


def _to_int(token: ExprToken) -> int:
    try:
        return int(token.lexeme)
    except ValueError:
        # oversized literals trip the int-conversion digit limit
        raise ParseError(token.position, "integer literal of reasonable size", token.describe()) from None


def parse_polynomial(source: str, dimension: int) -> Polynomial:
    """
    Parses source into a canonical polynomial in `dimension` variables.

    Raises:
        ParseError: with the offending offset, on any malformed input
        ValueError: dimension < 1
    """
    if dimension < 1:
        raise ValueError("dimension must be at least 1")
    value = Parser(tokenize(source), dimension).parse()
    logger.debug("parsed %r -> %d terms", source, len(value))
    return value


# =============================================================================
# RENDERING
# =============================================================================

def _render_coefficient(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render(p: Polynomial) -> str:
    """
    Canonical text: descending graded-lex terms, explicit '*' and '^',
    e.g. "2*x^2*y - 1/3". The zero polynomial renders as "0".
    """
    if p.is_zero():
        return "0"
    names = variable_names(p.dimension)
    ordered = sorted(p.terms.items(), key=lambda item: leading_key(item[0]), reverse=True)
    pieces: List[str] = []
    for index, (exponents, coeff) in enumerate(ordered):
        factors = []
        for name, power in zip(names, exponents):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        magnitude = abs(coeff)
        if not factors:
            body = _render_coefficient(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_coefficient(magnitude)] + factors)
        if index == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)

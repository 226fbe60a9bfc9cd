"""
Expression Lexer
Splits polynomial source text into positioned tokens.
"""

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import List

from app.modules.errors import ParseError


# Token kinds
INTEGER = "integer"
SLASH = "slash"
VARIABLE = "variable"
PLUS = "plus"
MINUS = "minus"
STAR = "star"
CARET = "caret"
LPAREN = "lparen"
RPAREN = "rparen"
END = "end"

_PUNCTUATION = {
    "/": SLASH,
    "+": PLUS,
    "-": MINUS,
    "*": STAR,
    "^": CARET,
    "(": LPAREN,
    ")": RPAREN,
}

_INTEGER_RE = re.compile(r"[0-9]+")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class ExprToken:
    kind: str
    lexeme: str
    position: int

    def describe(self) -> str:
        if self.kind == END:
            return "end of input"
        return f"{self.kind} {self.lexeme!r}"


def byte_offsets(source: str) -> List[int]:
    """UTF-8 byte offset of every character index, plus one for the end."""
    return list(accumulate((len(char.encode("utf-8")) for char in source), initial=0))


def tokenize(source: str) -> List[ExprToken]:
    """
    Tokenizes source; the list always ends with an END token. Positions
    are UTF-8 byte offsets, so END sits at the encoded length.

    Raises:
        ParseError: on a character no token can start with
    """
    offsets = byte_offsets(source)
    tokens: List[ExprToken] = []
    pos = 0
    length = len(source)
    while pos < length:
        char = source[pos]
        if char.isspace():
            pos += 1
            continue
        if char in _PUNCTUATION:
            tokens.append(ExprToken(_PUNCTUATION[char], char, offsets[pos]))
            pos += 1
            continue
        match = _INTEGER_RE.match(source, pos)
        if match:
            tokens.append(ExprToken(INTEGER, match.group(), offsets[pos]))
            pos = match.end()
            continue
        match = _IDENT_RE.match(source, pos)
        if match:
            tokens.append(ExprToken(VARIABLE, match.group(), offsets[pos]))
            pos = match.end()
            continue
        raise ParseError(offsets[pos], "term", f"character {char!r}")
    tokens.append(ExprToken(END, "", offsets[length]))
    return tokens

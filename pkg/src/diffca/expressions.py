"""Dash-separated expression notation for input rows and patterns.

Grammar::

    expression := term ('-' term)* ('-')?
    term       := digit+

The dash is notational glue between cells, not subtraction: ``"2-0-1-4"``
is the row (2, 0, 1, 4). One trailing dash is tolerated because curated
inputs are sometimes written that way; a leading dash would read as a
negative number and is rejected. Surrounding whitespace and surrounding
``[ ] ( )`` brackets are stripped; anything else outside the grammar is an
error.
"""

from __future__ import annotations

from .engine import MAX_CELL, InputExpression, RowLike, _to_expression

__all__ = [
    "EmptyExpression",
    "EmptyTerm",
    "ExpressionError",
    "InvalidCharacter",
    "ValueOverflow",
    "parse_expression",
    "serialize_expression",
]

_TERM_CHARS = frozenset("0123456789-")
_BRACKETS = "[]()"


class ExpressionError(ValueError):
    """Base class for every parse failure; the message names the cause."""


class EmptyExpression(ExpressionError):
    """Nothing but whitespace/brackets, so there is no term to read."""


class InvalidCharacter(ExpressionError):
    """A character outside digits, '-', and surrounding trim."""


class EmptyTerm(ExpressionError):
    """Adjacent separators or a leading separator left a term empty."""


class ValueOverflow(ExpressionError):
    """A term does not fit the 64-bit cell width."""


def parse_expression(text: str) -> InputExpression:
    """Parse ``text`` into an :class:`InputExpression`.

    Raises exactly one of :class:`EmptyExpression`,
    :class:`InvalidCharacter`, :class:`EmptyTerm` or
    :class:`ValueOverflow` on bad input; any string maps to a result or
    one of those four.
    """
    if not isinstance(text, str):
        raise TypeError(f"expression text is a str, got {type(text).__name__}")
    s = text
    while True:
        trimmed = s.strip().strip(_BRACKETS)
        if trimmed == s:
            break
        s = trimmed
    if not s:
        raise EmptyExpression(f"no terms in {text!r}")
    for pos, ch in enumerate(s):
        if ch not in _TERM_CHARS:
            raise InvalidCharacter(f"{ch!r} at position {pos} in {s!r}")
    parts = s.split("-")
    if parts[-1] == "":
        parts.pop()  # one trailing separator is tolerated
    terms = []
    for part in parts:
        if part == "":
            raise EmptyTerm(f"empty term in {s!r} (leading or doubled '-')")
        value = int(part)
        if value > MAX_CELL:
            raise ValueOverflow(f"term {part} exceeds the cell bound {MAX_CELL}")
        terms.append(value)
    return InputExpression(tuple(terms), text)


def serialize_expression(p: RowLike) -> str:
    """Terms joined by '-', no trailing separator; inverse of parsing."""
    return "-".join(str(v) for v in _to_expression(p).terms)

"""Exact rational scalars: parsing and canonical formatting."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Rat = Fraction

RatLike = Union[Fraction, int, str]

_RATIO = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+)")


def parse_rat(value: RatLike) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be integers, ``"p/q"`` or finite decimals such as ``"1.25"``.
    Floats are rejected: they are binary approximations, pass ``repr(x)``
    instead if decimal semantics are wanted.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if _RATIO.fullmatch(text) or _DECIMAL.fullmatch(text):
            try:
                return Fraction(text)
            except ZeroDivisionError:
                raise ValueError(f"zero denominator: {value!r}") from None
        raise ValueError(f"not a rational literal: {value!r}")
    raise ValueError(f"not a rational: {value!r}")


def format_rat(value: Fraction) -> str:
    """Lowest-terms ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

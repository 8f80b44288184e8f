"""Exact rational parsing and printing on top of :class:`fractions.Fraction`."""

import re
from fractions import Fraction

_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    match = _RATIONAL.match(text)
    if not match:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value):
    """Lowest-terms ``p/q``, or a bare integer when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

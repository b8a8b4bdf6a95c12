"""
Exact rational helpers.

All slopes, stability parameters and Toledo invariants are ``Fraction``s;
floats never enter a computation because walls are detected by exact equality.
"""
import re
from fractions import Fraction

RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def as_rational(value):
    """
    Coerce an ``int``, ``Fraction`` or ``"NUM/DEN"`` string to a ``Fraction``.

    Floats and decimal strings are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot read {value!r} as an exact rational")


def parse_rational(text):
    match = RATIONAL_PATTERN.match(text)
    if not match:
        raise ValueError(f"{text!r} is not of the form NUM or NUM/DEN")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"{text!r} has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    """Lowest-terms ``"num/den"``; ``"num"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def compare(left, right):
    """Return ``'<'``, ``'='`` or ``'>'``."""
    if left < right:
        return '<'
    if left > right:
        return '>'
    return '='

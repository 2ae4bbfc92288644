"""Exact rational parsing and formatting shared by the JSON formats."""

from fractions import Fraction
from numbers import Rational


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, an integer string or a Python int into a Fraction.

    Floats are rejected since they cannot round-trip exactly.
    """
    if isinstance(value, bool):
        raise TypeError(f"not a rational: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError(f"not a rational literal: {value!r}")


def format_rational(x: Fraction) -> str:
    """Lowest-terms ``"p/q"`` string (``"p"`` for integers)."""
    return str(Fraction(x))

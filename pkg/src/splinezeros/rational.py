"""Exact rational scalars.

The scalar type of the whole library is ``fractions.Fraction``: it is
arbitrary precision, always stored in canonical form (positive denominator,
reduced, zero as 0/1), and its equality is structural. The helpers here pin
down the textual contract: "p/q" with the sign on p, or just "p" when q = 1.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

RationalLike = Fraction | int | str


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p". Surrounding whitespace (also around '/') is
    tolerated; a zero denominator is rejected."""
    from .errors import FormatError

    if not isinstance(text, str):
        raise FormatError(f"expected a rational string, got {type(text).__name__}")
    cleaned = text.strip()
    if "/" in cleaned:
        num_part, _, den_part = cleaned.partition("/")
        cleaned = f"{num_part.strip()}/{den_part.strip()}"
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise FormatError(f"zero denominator in rational {text!r}") from None
    except ValueError:
        raise FormatError(f"malformed rational {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Canonical textual form: "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return parse_rational(value)

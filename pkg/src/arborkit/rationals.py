"""Exact values: "p/q" formatting and the INFINITE sentinel.

Every quantity the toolkit reports is either an int, a fractions.Fraction,
or INFINITE. Floats never appear in results.
"""

from __future__ import annotations

from fractions import Fraction


class Infinite:
    """Sentinel strictly above every finite value.

    Kept as a distinct singleton rather than a large integer so that reports
    can compare against it without inventing magnitudes.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinite)

    def __hash__(self) -> int:
        return hash("arborkit.INFINITE")

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinite)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, Infinite)


INFINITE = Infinite()


def is_infinite(value) -> bool:
    return isinstance(value, Infinite)


def ceil_value(value):
    """Ceiling of a Fraction or int; INFINITE passes through."""
    if is_infinite(value):
        return INFINITE
    frac = Fraction(value)
    return -((-frac.numerator) // frac.denominator)


def format_value(value) -> str:
    """Render as "p/q", a bare integer string, or "INFINITE"."""
    if is_infinite(value):
        return "INFINITE"
    if isinstance(value, int):
        return str(value)
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or a bare integer string into an exact Fraction."""
    parts = text.strip().split("/")
    if len(parts) == 1:
        return Fraction(int(parts[0]))
    if len(parts) == 2:
        num, den = int(parts[0]), int(parts[1])
        if den <= 0:
            raise ValueError(f"denominator must be positive in {text!r}")
        return Fraction(num, den)
    raise ValueError(f"not a rational literal: {text!r}")

"""Dyadic rationals (m * 2^e) and dyadic intervals.

Subdivision endpoints are always dyadic, never general rationals: halving an
interval adds exactly one bit to the endpoint representation, so an endpoint
at depth h has bitsize (initial bitsize) + h.
"""

from __future__ import annotations

from fractions import Fraction


def is_dyadic(x) -> bool:
    """True if x is an integer or a Fraction with power-of-two denominator."""
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        d = x.denominator
        return d & (d - 1) == 0
    return False


def dyadic(mantissa: int, exponent: int = 0) -> Fraction:
    """The exact rational mantissa * 2^exponent."""
    if exponent >= 0:
        return Fraction(mantissa << exponent)
    return Fraction(mantissa, 1 << -exponent)


def dyadic_parts(x) -> tuple[int, int]:
    """Decompose a dyadic rational into (mantissa, exponent) with odd mantissa.

    Zero decomposes as (0, 0).
    """
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    if den & (den - 1):
        raise ValueError(f"{x} is not dyadic")
    if num == 0:
        return 0, 0
    e = -(den.bit_length() - 1)
    # normalize: pull factors of two out of the numerator
    shift = (num & -num).bit_length() - 1
    return num >> shift, e + shift


def format_dyadic(x) -> str:
    """Render a dyadic rational as the exact string ``m*2^e``."""
    m, e = dyadic_parts(x)
    return f"{m}*2^{e}"


def parse_dyadic(text: str) -> Fraction:
    """Parse ``m*2^e``, a plain integer, or ``p/q`` with dyadic q."""
    text = text.strip()
    if "*2^" in text:
        m_str, e_str = text.split("*2^")
        return dyadic(int(m_str), int(e_str))
    if "/" in text:
        val = Fraction(text)
        if not is_dyadic(val):
            raise ValueError(f"{text} is not dyadic")
        return val
    return Fraction(int(text))


class DyadicInterval:
    """Closed interval [lo, hi] with dyadic endpoints, lo < hi."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if not (is_dyadic(lo) and is_dyadic(hi)):
            raise ValueError("endpoints must be dyadic rationals")
        if not lo < hi:
            raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicInterval is immutable")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def halves(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        mid = self.midpoint
        return DyadicInterval(self.lo, mid), DyadicInterval(mid, self.hi)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def strictly_contains(self, x) -> bool:
        return self.lo < x < self.hi

    def intersects(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other):
        return (
            isinstance(other, DyadicInterval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"DyadicInterval({format_dyadic(self.lo)}, {format_dyadic(self.hi)})"

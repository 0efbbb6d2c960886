"""Polynomial text files.

Power basis:     ``d; c_0 c_1 ... c_d``  (decimal integers, whitespace-split)
Bernstein basis: ``B; d; b_0 b_1 ... b_d``

Whitespace may include newlines.  Bernstein coefficients on disk are the
denominator-cleared integers; only a common positive factor separates them
from the sampled values, which leaves the root set unchanged.
"""

from __future__ import annotations

from pathlib import Path

from .polynomial import BernsteinPolynomial, IntPolynomial


class PolynomialFormatError(ValueError):
    """Malformed polynomial text."""


def parse_polynomial(text: str):
    """Parse the text format; returns IntPolynomial or BernsteinPolynomial."""
    parts = [p.strip() for p in text.strip().split(";")]
    try:
        if parts and parts[0] == "B":
            if len(parts) != 3:
                raise ValueError("expected 'B; d; b_0 ... b_d'")
            d = int(parts[1])
            coeffs = [int(tok) for tok in parts[2].split()]
            if len(coeffs) != d + 1:
                raise ValueError(f"expected {d + 1} coefficients, got {len(coeffs)}")
            return BernsteinPolynomial(coeffs)
        if len(parts) != 2:
            raise ValueError("expected 'd; c_0 ... c_d'")
        d = int(parts[0])
        coeffs = [int(tok) for tok in parts[1].split()]
        if len(coeffs) != d + 1:
            raise ValueError(f"expected {d + 1} coefficients, got {len(coeffs)}")
        return IntPolynomial(coeffs)
    except ValueError as exc:
        raise PolynomialFormatError(str(exc)) from exc


def read_polynomial(path):
    return parse_polynomial(Path(path).read_text())


def format_polynomial(p) -> str:
    if isinstance(p, BernsteinPolynomial):
        ints = []
        for c in p.coeffs:
            if c.denominator != 1:
                raise ValueError("write cleared integer Bernstein coefficients")
            ints.append(c.numerator)
        return f"B; {p.degree}; " + " ".join(str(c) for c in ints)
    return f"{len(p.coeffs) - 1}; " + " ".join(str(c) for c in p.coeffs)


def write_polynomial(p, path) -> None:
    Path(path).write_text(format_polynomial(p) + "\n")

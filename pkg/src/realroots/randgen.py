"""Seeded, reproducible samplers for the random polynomial families.

Coefficient i is sqrt(v_i) * g_i with independent standard normal g_i; the
five families differ only in the variance vector v.  The normal stream is
pinned exactly: a Philox counter generator keyed by
SeedSequence(master, model code, degree, trial), uniform doubles, and the
trigonometric Box-Muller transform in fixed pair order, so a (seed, path)
pair reproduces the same coefficients on any platform.

Sampled normals are machine doubles; the sqrt(v_i) scaling is applied as an
exact dyadic approximation (53-bit relative accuracy), so coefficients stay
exact rationals even where sqrt(v_i) itself under- or overflows doubles
(Weyl variances 1/i! underflow beyond i ~ 300).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .polynomial import BernsteinPolynomial, IntPolynomial, clear_denominators, dyadic_of_float

KAC = "kac"
SO2 = "so2"
WEYL = "weyl"
BERNSTEIN_STD = "bern-std"
BERNSTEIN_SK = "bern-sk"
MODELS = (KAC, SO2, WEYL, BERNSTEIN_STD, BERNSTEIN_SK)

RNG_ALGORITHM = "philox4x64+box-muller/v1"

_MODEL_CODE = {KAC: 1, SO2: 2, WEYL: 3, BERNSTEIN_STD: 4, BERNSTEIN_SK: 5}


def variance_vector(model: str, d: int) -> list:
    """The coefficient variances v_0..v_d of the family.

    Kac and the standard Bernstein model use unit variance; SO(2) uses the
    binomials C(d, i); Weyl uses 1/i!; the moderate-deviation Bernstein
    model uses 1/S_k = sqrt(pi*k*(d-k)/d) for 0 < k < d with variance 1 at
    the endpoints (S_k is undefined there and the endpoints have
    measure-zero influence on root counts).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if model == KAC or model == BERNSTEIN_STD:
        return [1] * (d + 1)
    if model == SO2:
        return [math.comb(d, i) for i in range(d + 1)]
    if model == WEYL:
        return [Fraction(1, math.factorial(i)) for i in range(d + 1)]
    if model == BERNSTEIN_SK:
        v = [1.0] * (d + 1)
        for k in range(1, d):
            v[k] = math.sqrt(math.pi * k * (d - k) / d)
        return v
    raise ValueError(f"unknown model {model!r}")


def standard_normals(seed: int, model: str, d: int, trial: int, n: int) -> np.ndarray:
    """n standard normal doubles from the pinned deterministic stream."""
    ss = np.random.SeedSequence(
        entropy=(int(seed), _MODEL_CODE.get(model, 0), int(d), int(trial))
    )
    gen = np.random.Generator(np.random.Philox(ss))
    pairs = (n + 1) // 2
    u = gen.random((pairs, 2))
    r = np.sqrt(-2.0 * np.log1p(-u[:, 0]))  # 1-u in (0,1]: log never hits 0
    theta = 2.0 * np.pi * u[:, 1]
    out = np.empty(2 * pairs)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out[:n]


@lru_cache(maxsize=8192)
def _sqrt_dyadic(num: int, den: int) -> Fraction:
    """Dyadic approximation of sqrt(num/den), relative error below 2^-53."""
    if num == 0:
        return Fraction(0)
    # sqrt(num/den) = sqrt(num*den)/den
    big = num * den
    k = max(0, (110 - big.bit_length()) // 2 + 1)
    m = math.isqrt(big << (2 * k))
    while m.bit_length() < 55:
        k += 55
        m = math.isqrt(big << (2 * k))
    return Fraction(m, den << k)


def _scaled_coefficients(g: np.ndarray, variances) -> list[Fraction]:
    out = []
    for gi, vi in zip(g, variances):
        if vi == 1:
            out.append(dyadic_of_float(float(gi)))
            continue
        f = Fraction(vi) if not isinstance(vi, Fraction) else vi
        out.append(dyadic_of_float(float(gi)) * _sqrt_dyadic(f.numerator, f.denominator))
    return out


def sample_polynomial(model: str, d: int, seed: int, trial: int = 0):
    """Draw one random polynomial, deterministically in (model, d, seed, trial).

    Power-basis models return the coefficient list (exact rationals, low
    degree first); the Bernstein models return a BernsteinPolynomial.
    """
    v = variance_vector(model, d)
    g = standard_normals(seed, model, d, trial, d + 1)
    coeffs = _scaled_coefficients(g, v)
    if model in (BERNSTEIN_STD, BERNSTEIN_SK):
        return BernsteinPolynomial(coeffs)
    return coeffs


def exactify(coeffs) -> IntPolynomial:
    """Embed real coefficients exactly and clear denominators.

    Floats are embedded via their exact binary value; the result is an
    integer polynomial with the same root set.
    """
    if isinstance(coeffs, BernsteinPolynomial):
        raise TypeError("convert Bernstein input with bernstein_to_power first")
    return clear_denominators([dyadic_of_float(c) for c in coeffs])

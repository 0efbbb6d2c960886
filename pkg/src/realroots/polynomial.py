"""Exact univariate polynomial arithmetic over the integers and rationals.

Polynomials are dense, with arbitrary-precision integer coefficients stored
low degree first.  Integer content is stripped after every construction so
coefficient bitsizes stay near the subresultant bound throughout remainder
sequences.  All values are immutable after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction

NEG_INF = float("-inf")


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _content(coeffs) -> int:
    g = 0
    for c in coeffs:
        if c:
            g = math.gcd(g, abs(int(c)))
            if g == 1:
                break
    return g


class IntPolynomial:
    """Dense polynomial with integer coefficients, low degree first.

    The zero polynomial has ``degree == float("-inf")``; operations on it are
    total (its derivative is zero, it evaluates to zero).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, normalize: bool = False):
        cs = _strip([int(c) for c in coeffs])
        if normalize and cs:
            g = _content(cs)
            if g > 1:
                cs = tuple(c // g for c in cs)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    # ---- arithmetic -------------------------------------------------------

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    # ---- queries ----------------------------------------------------------

    def evaluate(self, x):
        """Exact value at a rational (or integer) point, by Horner."""
        if not self.coeffs:
            return Fraction(0) if isinstance(x, Fraction) else 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        """Sign of the value at a rational point, in pure integer arithmetic.

        Evaluates q^d * p(n/q) = sum a_i n^i q^(d-i), which has the same sign
        as p(n/q) since q > 0.
        """
        cs = self.coeffs
        if not cs:
            return 0
        if isinstance(x, int):
            n, q = x, 1
        else:
            n, q = x.numerator, x.denominator
        acc = cs[-1]
        if q == 1:
            for c in reversed(cs[:-1]):
                acc = acc * n + c
        else:
            qpow = 1
            for c in reversed(cs[:-1]):
                qpow *= q
                acc = acc * n + c * qpow
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, positive: bool = True) -> int:
        """Sign of p(t) as t -> +inf (or -inf)."""
        if not self.coeffs:
            return 0
        s = (self.leading > 0) - (self.leading < 0)
        if not positive and (len(self.coeffs) - 1) % 2:
            s = -s
        return s

    def bitsize(self) -> int:
        """Maximum coefficient bitsize, including a sign bit."""
        return max((abs(c).bit_length() for c in self.coeffs), default=0) + 1

    # ---- calculus & normal forms ------------------------------------------

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return _content(self.coeffs)

    def primitive(self) -> "IntPolynomial":
        """Divide out the integer content; the sign of the polynomial is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([c // g for c in self.coeffs])

    def shifted(self, a: int) -> "IntPolynomial":
        """p(x + a) by synthetic Horner shift."""
        out = list(self.coeffs)
        n = len(out)
        if a:
            for i in range(n - 1):
                for j in range(n - 2, i - 1, -1):
                    out[j] += a * out[j + 1]
        return IntPolynomial(out)

    def reversed_coeffs(self) -> "IntPolynomial":
        """x^d * p(1/x): the coefficient sequence reversed."""
        return IntPolynomial(list(reversed(self.coeffs)))

    def compose_neg(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(
            [-c if i % 2 else c for i, c in enumerate(self.coeffs)]
        )

    def strip_zero_root(self) -> tuple[int, "IntPolynomial"]:
        """Return (k, q) with p = x^k * q and q(0) != 0."""
        k = 0
        cs = self.coeffs
        while k < len(cs) and not cs[k]:
            k += 1
        return k, IntPolynomial(cs[k:])

    @staticmethod
    def from_roots(roots) -> "IntPolynomial":
        """Product of (q x - p) over rational roots p/q; integer coefficients."""
        poly = IntPolynomial([1])
        for r in roots:
            r = Fraction(r)
            poly = poly * IntPolynomial([-r.numerator, r.denominator])
        return poly


class RationalPolynomial:
    """Thin wrapper for polynomials with Fraction coefficients.

    Only used as a staging representation before denominator clearing.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        object.__setattr__(self, "coeffs", tuple(cs[:n]))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"RationalPolynomial({list(self.coeffs)})"


def dyadic_of_float(x: float) -> Fraction:
    """The exact binary value of a finite machine float, as a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite coefficient {x!r}")
    return Fraction(x)


def clear_denominators(p) -> IntPolynomial:
    """Multiply by the LCM of coefficient denominators, then strip content.

    Accepts a RationalPolynomial or any iterable of Fractions/floats/ints.
    The root set is unchanged.
    """
    if isinstance(p, RationalPolynomial):
        coeffs = p.coeffs
    else:
        coeffs = [dyadic_of_float(c) if not isinstance(c, (int, Fraction)) else Fraction(c) for c in p]
    lcm = 1
    for c in coeffs:
        c = Fraction(c)
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(Fraction(c) * lcm) for c in coeffs]
    return IntPolynomial(ints, normalize=True)


class BernsteinPolynomial:
    """Coefficients b_0..b_d on the degree-d Bernstein basis over [0, 1]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs)
        if not cs:
            raise ValueError("need at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BernsteinPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, z):
        """Exact value of sum b_k C(d,k) z^k (1-z)^(d-k) at a rational z."""
        z = Fraction(z)
        d = self.degree
        one = Fraction(1)
        acc = Fraction(0)
        for k, b in enumerate(self.coeffs):
            acc += b * math.comb(d, k) * z**k * (one - z) ** (d - k)
        return acc

    def __repr__(self):
        return f"BernsteinPolynomial({list(self.coeffs)})"


def bernstein_to_power(b: BernsteinPolynomial) -> IntPolynomial:
    """Transform Bernstein coefficients to a power-basis integer polynomial.

    Under z = y/(y+1) the Bernstein form P(z) satisfies
    (1+y)^d P(y/(y+1)) = sum_k b_k C(d,k) y^k, so the returned polynomial
    (coefficient k proportional to b_k C(d,k), after clearing denominators
    and content) has real roots y in bijection with the real roots z of P:
    z in (0,1) <-> y in (0,inf); z in (1,inf) <-> y in (-inf,-1);
    z in (-inf,0) <-> y in (-1,0).
    """
    d = b.degree
    coeffs = [c * math.comb(d, k) for k, c in enumerate(b.coeffs)]
    return clear_denominators(coeffs)


def power_to_bernstein_scaled(p: IntPolynomial) -> list[int]:
    """Integer multiples of the Bernstein coefficients of p on [0, 1].

    Returns L * b_k where L = lcm(C(d,0), ..., C(d,d)); only the common
    positive factor L separates these from the true Bernstein coefficients,
    so signs, sign variations, and de Casteljau splits are unaffected.

    Uses b_k C(d,k) = [y^k] (1+y)^d p(y/(1+y)), computed by expanding
    sum_j c_j y^j (1+y)^(d-j) in integer arithmetic.
    """
    d = len(p.coeffs) - 1
    if d < 0:
        raise ValueError("zero polynomial has no Bernstein form")
    acc = [0] * (d + 1)
    pw = [1]  # coefficients of (1+y)^i
    for j in range(d, -1, -1):
        c = p.coeffs[j]
        if c:
            for i, w in enumerate(pw):
                acc[j + i] += c * w
        if j:
            pw = [1] + [pw[i] + pw[i + 1] for i in range(len(pw) - 1)] + [1]
    binoms = [math.comb(d, k) for k in range(d + 1)]
    lcm = 1
    for c in binoms:
        lcm = lcm * c // math.gcd(lcm, c)
    return [acc[k] * (lcm // binoms[k]) for k in range(d + 1)]

"""Signed polynomial remainder sequences and exact real-root counting.

The sequence is computed as a subresultant chain (Collins' divisor bookkeeping,
so coefficient growth stays at the subresultant bound instead of the
exponential growth of naive pseudo-remainders) together with a running sign
multiplier, so that every stored element is a positive multiple of the true
negative-remainder (Sturm) sequence element.  Sign variations at a point are
therefore those of the exact Sturm sequence.

Counting uses the half-open convention: count_in(S, a, b) is the number of
real roots in (a, b].  A root at a finite left endpoint raises
EndpointRootError instead of being silently adjusted.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomial import IntPolynomial, clear_denominators

try:
    from gmpy2 import mpz as _mpz, divexact as _divexact
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    _mpz = int

    def _divexact(a, b):
        return a // b

INF = math.inf


class EndpointRootError(ValueError):
    """The polynomial vanishes at a queried interval endpoint."""


def sign_variations(signs) -> int:
    """Number of sign changes in a sequence of {-1, 0, +1}, zeros skipped."""
    count = 0
    prev = 0
    for s in signs:
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def _pseudo_rem(p, q):
    """prem(p, q) = lc(q)^(deg p - deg q + 1) * p  mod  q, on coefficient lists."""
    dp, dq = len(p) - 1, len(q) - 1
    lc = q[-1]
    if dp == dq + 1 and dq >= 1:
        # fused two-round form: r = lc^2 p - lc*c1*x*q - c0*q with
        # c1 = p[dp], c0 = lc*p[dq] - c1*q[dq-1]
        c1 = p[dp]
        c0 = lc * p[dq] - c1 * q[dq - 1]
        lc2 = lc * lc
        lcc1 = lc * c1
        r = [lc2 * p[0] - c0 * q[0]]
        for i in range(1, dq):
            r.append(lc2 * p[i] - lcc1 * q[i - 1] - c0 * q[i])
        while r and not r[-1]:
            r.pop()
        return r
    r = list(p)
    for k in range(dp - dq, -1, -1):
        c = r[dq + k]
        for i in range(dq + k):
            r[i] *= lc
        if c:
            for i in range(dq):
                r[k + i] -= c * q[i]
    del r[dq:]
    while r and not r[-1]:
        r.pop()
    return r


def _chain_with_signs(f, g):
    """Subresultant chain of (f, g) plus per-element Sturm sign multipliers.

    f, g are primitive coefficient lists with deg f > deg g >= 0.  Returns
    (chain, sigmas): chain[i] * sigmas[i] is a positive multiple of the i-th
    element of the negative polynomial remainder sequence of (f, g).
    """
    chain = [f, g]
    sig = [1, 1]
    gg, hh = _mpz(1), _mpz(1)
    while True:
        p, q = chain[-2], chain[-1]
        if len(q) - 1 == 0:
            break
        delta = (len(p) - 1) - (len(q) - 1)
        r = _pseudo_rem(p, q)
        if not r:
            break
        divisor = gg * hh**delta
        if divisor != 1:
            r = [_divexact(c, divisor) for c in r]
        chain.append(r)
        lq = q[-1]
        s = -sig[-2]
        if lq < 0 and (delta + 1) % 2:
            s = -s
        if divisor < 0:
            s = -s
        sig.append(s)
        gg = lq
        hh = gg if delta == 1 else gg**delta // hh ** (delta - 1)
    return chain, sig


class SturmSequence:
    """Sign-normalized remainder sequence of a squarefree polynomial and its
    derivative; supports exact sign-variation queries at rational points."""

    __slots__ = ("_chain", "_sig", "_steps", "_polys")

    def __init__(self, chain, sig, steps):
        object.__setattr__(self, "_chain", chain)
        object.__setattr__(self, "_sig", sig)
        object.__setattr__(self, "_steps", steps)
        object.__setattr__(self, "_polys", None)

    def __setattr__(self, name, value):
        raise AttributeError("SturmSequence is immutable")

    def __len__(self):
        return len(self._chain)

    @property
    def polys(self) -> tuple[IntPolynomial, ...]:
        """The sequence with sign normalization applied."""
        if self._polys is None:
            mats = tuple(
                IntPolynomial([int(c) * s for c in coeffs])
                for coeffs, s in zip(self._chain, self._sig)
            )
            object.__setattr__(self, "_polys", mats)
        return self._polys

    @property
    def poly(self) -> IntPolynomial:
        """The (primitive part of the) squarefree polynomial itself."""
        return self.polys[0]

    def max_bitsize(self) -> int:
        """Largest coefficient bitsize across the sequence."""
        return max(
            max(abs(int(c)).bit_length() for c in coeffs) + 1
            for coeffs in self._chain
        )

    # ---- sign queries -------------------------------------------------

    def signs_at(self, x) -> list[int]:
        if isinstance(x, int):
            num, den = _mpz(x), _mpz(1)
        else:
            num, den = _mpz(x.numerator), _mpz(x.denominator)
        max_deg = len(self._chain[0]) - 1
        dpows = [_mpz(1)] * (max_deg + 1)
        if den != 1:
            for j in range(1, max_deg + 1):
                dpows[j] = dpows[j - 1] * den
        out = []
        for coeffs, s in zip(self._chain, self._sig):
            d = len(coeffs) - 1
            acc = coeffs[-1]
            if den == 1:
                for i in range(d - 1, -1, -1):
                    acc = acc * num + coeffs[i]
            else:
                for i in range(d - 1, -1, -1):
                    acc = acc * num + coeffs[i] * dpows[d - i]
            out.append(s if acc > 0 else (-s if acc < 0 else 0))
        return out

    def signs_at_infinity(self, positive: bool) -> list[int]:
        out = []
        for coeffs, s in zip(self._chain, self._sig):
            lead = coeffs[-1]
            sg = s if lead > 0 else -s
            if not positive and (len(coeffs) - 1) % 2:
                sg = -sg
            out.append(sg)
        return out

    def signs_at_quotient(self, x) -> list[int]:
        """Same as signs_at but via the stored quotient recurrence.

        Evaluates only the first two polynomials directly and advances with
        t[i+1] = (lcpow*t[i-1] - Q(x)*t[i]) / divisor in rational arithmetic.
        Kept as an optional path; the stored-sequence evaluation is the
        default in practice.
        """
        x = Fraction(x)
        t_prev = Fraction(sum(c * x**i for i, c in enumerate(map(int, self._chain[0]))))
        t_cur = Fraction(sum(c * x**i for i, c in enumerate(map(int, self._chain[1]))))
        values = [t_prev, t_cur]
        for lcpow, quot, divisor in self._steps:
            qx = Fraction(sum(c * x**i for i, c in enumerate(quot)))
            t_next = (lcpow * t_prev - qx * t_cur) / divisor
            values.append(t_next)
            t_prev, t_cur = t_cur, t_next
        return [
            s * ((v > 0) - (v < 0)) for v, s in zip(values, self._sig)
        ]


def sturm_sequence(A: IntPolynomial, with_quotients: bool = False) -> SturmSequence:
    """Build the sign-normalized remainder sequence of (A, A').

    A must be squarefree of degree >= 1; a constant or zero input is
    rejected, and a repeated factor is reported as a ValueError (the chain
    then ends with a nonconstant element).
    """
    if A.degree == float("-inf") or A.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    f = [_mpz(c) for c in A.primitive().coeffs]
    g = [_mpz(c) for c in A.derivative().primitive().coeffs]
    if len(f) == 2:  # linear: derivative is a constant, chain is complete
        chain, sig = [f, g], [1, 1]
    else:
        chain, sig = _chain_with_signs(f, g)
    if len(chain[-1]) != 1:
        raise ValueError("polynomial is not squarefree (gcd(A, A') is nonconstant)")
    steps = _quotient_steps(chain) if with_quotients else None
    return SturmSequence(chain, sig, steps)


def _quotient_steps(chain):
    """Per-step (lc^(delta+1), quotient, divisor) data for quotient evaluation."""
    steps = []
    gg, hh = 1, 1
    for i in range(len(chain) - 2):
        p, q = chain[i], chain[i + 1]
        delta = (len(p) - 1) - (len(q) - 1)
        lcpow = int(q[-1]) ** (delta + 1)
        divisor = gg * hh**delta
        # quotient of lcpow*p by q, exact long division over the rationals
        num = [Fraction(int(c) * lcpow) for c in p]
        quot = [Fraction(0)] * (delta + 1)
        for k in range(delta, -1, -1):
            c = num[len(q) - 1 + k] / int(q[-1])
            quot[k] = c
            for j, qc in enumerate(q):
                num[k + j] -= c * int(qc)
        steps.append((lcpow, quot, divisor * 1))
        gg = int(q[-1])
        hh = gg if delta == 1 else gg**delta // hh ** (delta - 1)
    return steps


def variations_at(S: SturmSequence, x) -> int:
    """Sign variations of the sequence evaluated at a rational point."""
    return sign_variations(S.signs_at(x))


def variations_at_infinity(S: SturmSequence, positive: bool = True) -> int:
    """Sign variations of the limit sign vector at +inf or -inf."""
    return sign_variations(S.signs_at_infinity(positive))


def _variations(S: SturmSequence, x) -> int:
    if x == INF:
        return variations_at_infinity(S, True)
    if x == -INF:
        return variations_at_infinity(S, False)
    return variations_at(S, x)


def count_in(S: SturmSequence, a, b) -> int:
    """Exact number of real roots in the half-open interval (a, b].

    a and b may be Fractions/ints or +-math.inf.  Raises EndpointRootError
    when a is finite and A(a) = 0; the caller must perturb the endpoint or
    use the isolator's exact-root detection path instead.
    """
    if not _less(a, b):
        raise ValueError(f"need a < b, got a={a}, b={b}")
    if a != -INF and S.signs_at(a)[0] == 0:
        raise EndpointRootError(f"left endpoint {a} is a root")
    return _variations(S, a) - _variations(S, b)


def count_roots_open(S: SturmSequence, a, b) -> int:
    """Number of real roots in the open interval (a, b); endpoints may be roots."""
    n = _variations(S, a) - _variations(S, b)
    if b != INF and S.signs_at(b)[0] == 0:
        n -= 1
    return n


def _less(a, b) -> bool:
    return a < b


def count_all_real(A) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    if isinstance(A, SturmSequence):
        S = A
    else:
        if A.degree == 0:
            return 0
        S = sturm_sequence(A)
    return count_in(S, -INF, INF)


# ---- gcd / squarefree part ------------------------------------------------


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the rationals, computed by the subresultant chain."""
    if not p:
        return q.primitive()
    if not q:
        return p.primitive()
    a, b = p.primitive(), q.primitive()
    if a.degree < b.degree:
        a, b = b, a
    if b.degree == 0:
        return IntPolynomial([1])
    f = [_mpz(c) for c in a.coeffs]
    g = [_mpz(c) for c in b.coeffs]
    if len(f) == len(g):  # chain needs strictly decreasing degrees
        r = _pseudo_rem(f, g)
        if not r:
            return b
        f, g = g, [c for c in r]
    chain, _ = _chain_with_signs(f, g)
    last = IntPolynomial([int(c) for c in chain[-1]])
    return last.primitive() if last.degree > 0 else IntPolynomial([1])


def _exact_poly_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact quotient num/den over the rationals, returned content-stripped."""
    n = [Fraction(c) for c in num.coeffs]
    d = [Fraction(c) for c in den.coeffs]
    dn, dd = len(n) - 1, len(d) - 1
    quot = [Fraction(0)] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = n[dd + k] / d[dd]
        quot[k] = c
        if c:
            for j in range(dd + 1):
                n[k + j] -= c * d[j]
    if any(n):
        raise ValueError("division is not exact")
    return clear_denominators(quot)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), content-stripped: same root set, no repeated roots."""
    if not p:
        raise ValueError("zero polynomial")
    if p.degree <= 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return _exact_poly_div(p.primitive(), g)

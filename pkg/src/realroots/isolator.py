"""Subdivision-based real-root isolation with pluggable counters.

A stack of (sub)intervals is processed depth-first: pop an interval, count
(or bound) the real roots inside, keep it when the count is 1, split at the
midpoint when more.  Three counters are supported: exact Sturm counts,
Descartes' rule on the Moebius-transformed polynomial, and sign variations of
Bernstein coefficients split by de Casteljau.  If a subdivision midpoint hits
a root exactly, the root is reported separately and both open halves continue
with the root divided out locally.

All subdivision endpoints are dyadic, so an endpoint at depth h costs exactly
h more bits than the initial interval endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .dyadic import DyadicInterval, dyadic_parts
from .polynomial import IntPolynomial, power_to_bernstein_scaled
from .sturm import EndpointRootError, sign_variations, sturm_sequence, poly_gcd

STURM = "sturm"
DESCARTES = "descartes"
BERNSTEIN = "bernstein"
METHODS = (STURM, DESCARTES, BERNSTEIN)

_MAX_DEPTH = 20000  # safety guard; squarefree inputs terminate far earlier


class NonSquarefreeError(ValueError):
    """Input polynomial has a repeated root; take its squarefree part first."""


@dataclass(frozen=True)
class RootInterval:
    """An interval containing exactly one real root of the target polynomial.

    When a subdivision point hit the root exactly, exact_root is set and the
    interval is a small dyadic enclosure of it (semantically of width zero).
    """

    interval: DyadicInterval
    exact_root: Fraction | None = None

    @property
    def position(self) -> Fraction:
        return self.exact_root if self.exact_root is not None else self.interval.midpoint

    @property
    def is_exact(self) -> bool:
        return self.exact_root is not None


@dataclass
class IsolationStats:
    """Instrumentation of one isolation run."""

    tree_nodes: int = 0  # number of pop events = subdivisions performed
    max_depth: int = 0
    counter_calls: int = 0
    root_bound: Fraction = Fraction(0)  # magnitude bound for the searched interval
    gap_lower_bounds: list = field(default_factory=list)  # per-root lower bound on
    # the distance to the nearest other isolated real root; empty for < 2 roots
    sep_bitsize: int | None = None  # ~ -floor(log2 min gap) when gaps are known


def eq1_rhs(stats: IsolationStats, num_roots: int) -> float:
    """Subdivision-count envelope 2r + r*lg(B) - sum_j lg(gap_j).

    Models isolation as r binary searches from the initial interval down to
    the per-root gaps; used only as an empirical envelope for tree sizes.
    """
    if num_roots == 0:
        return 0.0
    b = max(float(stats.root_bound), 2.0)
    total = 2.0 * num_roots + num_roots * math.log2(b)
    for g in stats.gap_lower_bounds:
        total -= math.log2(float(g))
    return total


# ---------------------------------------------------------------------------
# Root magnitude bound
# ---------------------------------------------------------------------------


def _log2_abs(n: int) -> float:
    """log2 |n| for arbitrary-size nonzero integers."""
    n = abs(n)
    bl = n.bit_length()
    if bl <= 900:
        return math.log2(n)
    return (bl - 53) + math.log2(n >> (bl - 53))


def hong_root_bound(A: IntPolynomial, printed_variant: bool = False) -> Fraction:
    """Power-of-two upper bound on the real parts of roots with positive real
    part: the max-min coefficient-ratio bound, rounded up to a power of two.

    For each negative coefficient a_i the relevant quantity is
    min over later positive a_k of |a_i / a_k|^(1/(k-i)); the bound is twice
    the max over i, rounded up so subdivision endpoints stay dyadic.  With no
    negative coefficient (leading coefficient made positive) there are no
    positive real roots and 0 is returned.  printed_variant replaces the
    denominator a_k by the leading coefficient throughout, for comparison.
    """
    if not A:
        raise ValueError("zero polynomial")
    cs = list(A.coeffs)
    if cs[-1] < 0:
        cs = [-c for c in cs]
    d = len(cs) - 1
    negs = [i for i, c in enumerate(cs) if c < 0]
    if not negs:
        return Fraction(0)
    pos = [k for k, c in enumerate(cs) if c > 0]

    def denom_at(k: int) -> int:
        return cs[d] if printed_variant else cs[k]

    # float estimate of t, then exact verification
    est = -math.inf
    for i in negs:
        li = _log2_abs(cs[i])
        best = math.inf
        for k in pos:
            if k > i:
                best = min(best, (li - _log2_abs(denom_at(k))) / (k - i))
        est = max(est, best)
    t = math.floor(est + 1.0)  # candidate exponent: want 2^t >= 2 * 2^est

    def holds(t: int) -> bool:
        for i in negs:
            ai = -cs[i]
            ok = False
            for k in pos:
                if k <= i:
                    continue
                s = (t - 1) * (k - i)
                ak = denom_at(k)
                if (ai <= ak << s) if s >= 0 else (ai << -s <= ak):
                    ok = True
                    break
            if not ok:
                return False
        return True

    while not holds(t):
        t += 1
    while holds(t - 1):  # tighten in case the float estimate overshot
        t -= 1
    return Fraction(2) ** t


def root_magnitude_bounds(A: IntPolynomial) -> tuple[Fraction, Fraction]:
    """(bound on |negative real roots|, bound on positive real roots)."""
    return hong_root_bound(A.compose_neg()), hong_root_bound(A)


# ---------------------------------------------------------------------------
# Squarefreeness test: modular filter with exact fallback
# ---------------------------------------------------------------------------

_SQF_PRIMES = (2147483647, 2147483629, 2147483587)


def _gcd_is_trivial_mod_p(f: list[int], g: list[int], p: int) -> bool:
    """True if gcd(f mod p, g mod p) is constant in GF(p)[x]."""
    a = [c % p for c in f]
    b = [c % p for c in g]
    while b and not b[-1]:
        b.pop()
    while len(b) > 1:
        # a mod b in GF(p)
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            if c:
                off = len(a) - len(b)
                for j in range(len(b) - 1):
                    a[off + j] = (a[off + j] - c * b[j]) % p
            a.pop()
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    return len(b) == 1  # nonzero constant gcd


def is_squarefree(A: IntPolynomial) -> bool:
    """Exact squarefreeness: gcd(A, A') constant.

    A one-sided modular check usually answers immediately (a trivial gcd
    mod p with nondegenerate leading coefficients certifies a trivial gcd
    over Q); the exact subresultant gcd decides the rare remaining cases.
    """
    if not A:
        return False
    if A.degree <= 1:
        return True
    f = list(A.coeffs)
    g = list(A.derivative().coeffs)
    for p in _SQF_PRIMES:
        if f[-1] % p == 0 or g[-1] % p == 0:
            continue
        if _gcd_is_trivial_mod_p(f, g, p):
            return True
    return poly_gcd(A, A.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Local polynomial transforms (Descartes / Bernstein node state)
# ---------------------------------------------------------------------------


def _map_to_unit(p: IntPolynomial, lo: Fraction, width: Fraction) -> list[int]:
    """Integer coefficients of c * p(lo + width*x) for some c > 0.

    Roots of p in (lo, lo+width) correspond to roots of the result in (0, 1).
    """
    mlo, elo = dyadic_parts(lo)
    mw, ew = dyadic_parts(width)
    e = ew if mlo == 0 else min(elo, ew)
    m = mlo << (elo - e) if mlo else 0
    n = mw << (ew - e)
    d = len(p.coeffs) - 1
    # scale the argument by 2^e, clearing denominators when e < 0
    if e >= 0:
        cs = [c << (e * i) for i, c in enumerate(p.coeffs)]
    else:
        cs = [c << (-e * (d - i)) for i, c in enumerate(p.coeffs)]
    # shift by the integer m, then scale the variable by the integer n
    if m:
        for i in range(d):
            for j in range(d - 1, i - 1, -1):
                cs[j] += m * cs[j + 1]
    if n != 1:
        npow = 1
        for i in range(1, d + 1):
            npow *= n
            cs[i] *= npow
    g = 0
    for c in cs:
        if c:
            g = math.gcd(g, abs(c))
            if g == 1:
                break
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _shift_by_one(cs: list[int]) -> list[int]:
    out = list(cs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += out[j + 1]
    return out


def _scale_half(cs: list[int]) -> list[int]:
    """2^d * p(x/2): maps the left half of (0,1) onto (0,1)."""
    d = len(cs) - 1
    return [c << (d - i) for i, c in enumerate(cs)]


def _div_by_x_minus_1(cs: list[int]) -> list[int]:
    """Exact quotient p / (x - 1); requires p(1) = 0."""
    d = len(cs) - 1
    q = [0] * d
    acc = 0
    for i in range(d, 0, -1):
        acc += cs[i]
        q[i - 1] = acc
    return q


def _descartes_count(cs: list[int]) -> int:
    """Descartes bound for roots of p in the open unit interval (0, 1)."""
    rev = _shift_by_one(list(reversed(cs)))
    return sign_variations([(c > 0) - (c < 0) for c in rev])


def count_descartes(A: IntPolynomial, interval: DyadicInterval) -> int:
    """Descartes' bound for the number of real roots of A in the open interval.

    Sign variations of the transformed polynomial mapping the interval onto
    (0, inf): an upper bound with the parity of the true count, exact
    whenever it is 0 or 1.
    """
    cs = _map_to_unit(A, interval.lo, interval.width)
    return _descartes_count(cs)


def bernstein_coefficients(A: IntPolynomial, interval: DyadicInterval) -> list[int]:
    """Positive integer multiples of the Bernstein coefficients of A on the
    interval (common factor only; signs and variations are those of the true
    coefficients)."""
    unit = IntPolynomial(_map_to_unit(A, interval.lo, interval.width))
    return power_to_bernstein_scaled(unit)


def count_bernstein(coeffs: list[int]) -> int:
    """Sign-variation bound from Bernstein coefficients; same contract as
    count_descartes."""
    return sign_variations([(c > 0) - (c < 0) for c in coeffs])


def de_casteljau_split(coeffs: list) -> tuple[list, list, object]:
    """Split Bernstein coefficients at the interval midpoint.

    Returns (left, right, apex) where apex is the (scaled) value at the
    midpoint: apex = 0 if and only if the midpoint is a root.  Both halves
    are scaled by 2^d relative to the input, keeping everything integral.
    """
    d = len(coeffs) - 1
    t = list(coeffs)
    left = [t[0] << d]
    right = [0] * (d + 1)
    right[d] = t[d] << d
    for j in range(1, d + 1):
        for i in range(d - j + 1):
            t[i] = t[i] + t[i + 1]
        left.append(t[0] << (d - j))
        right[d - j] = t[d - j] << (d - j)
    return left, right, t[0]


def _deflate_bernstein(coeffs: list, at_zero: bool) -> list:
    """Divide a Bernstein-form polynomial by z (at_zero) or (1-z); the root
    being removed must sit at the corresponding interval endpoint.  The
    result is again a positive integer multiple of the true coefficients."""
    d = len(coeffs) - 1
    lcm = 1
    for j in range(2, d + 1):
        lcm = lcm * j // math.gcd(lcm, j)
    if at_zero:
        return [coeffs[j + 1] * (lcm // (j + 1)) for j in range(d)]
    return [coeffs[k] * (lcm // (d - k)) for k in range(d)]


# ---------------------------------------------------------------------------
# The subdivision loop
# ---------------------------------------------------------------------------


def isolate(
    A: IntPolynomial,
    interval: DyadicInterval | None = None,
    method: str = STURM,
    separate_output: bool = True,
) -> tuple[list[RootInterval], IsolationStats]:
    """Isolate the real roots of a squarefree polynomial.

    With interval=None the search covers all real roots, over
    [-bound(A(-x)), +bound(A)] with power-of-two magnitude bounds.  The
    returned intervals are pairwise disjoint, each contains exactly one real
    root, and every root in range is either in exactly one interval or
    reported as an exact_root.

    separate_output controls the post-pass that refines intervals until all
    reported roots have positive pairwise gaps (needed for the per-root gap
    statistics); it only ever shrinks the reported intervals.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if not A:
        raise ValueError("zero polynomial")

    nzeros, core = A.strip_zero_root()
    if nzeros >= 2:
        raise NonSquarefreeError("repeated root at 0")

    stats = IsolationStats()
    if interval is None:
        if core.degree >= 1:
            bneg, bpos = root_magnitude_bounds(core)
        else:
            bneg = bpos = Fraction(0)
        stats.root_bound = max(bneg, bpos)
        zero_in_range = nzeros == 1
        if bneg == 0 and bpos == 0:
            interval = None
        else:
            interval = DyadicInterval(-bneg, bpos)
    else:
        if A.sign_at(interval.lo) == 0 or A.sign_at(interval.hi) == 0:
            raise EndpointRootError("polynomial vanishes at an interval endpoint")
        stats.root_bound = max(abs(interval.lo), abs(interval.hi))
        zero_in_range = nzeros == 1 and interval.strictly_contains(0)

    exact_roots: list[Fraction] = []
    raw: list[tuple[Fraction, Fraction]] = []
    if zero_in_range:
        exact_roots.append(Fraction(0))

    if interval is not None and core.degree >= 1:
        if method == STURM:
            _isolate_sturm(core, interval, stats, raw, exact_roots)
        elif method == DESCARTES:
            _require_squarefree(core)
            _isolate_descartes(core, interval, stats, raw, exact_roots)
        else:
            _require_squarefree(core)
            _isolate_bernstein(core, interval, stats, raw, exact_roots)
    elif interval is not None:
        stats.tree_nodes = 1  # root node examined, no nonconstant part to split

    # assembly bisections run on `core`: every raw interval holds exactly one
    # core root, and core does not vanish at 0 (the stripped zero root is one
    # of the point items instead)
    roots = _assemble(core, interval, raw, exact_roots, separate_output, stats)
    return roots, stats


def isolate_all(A: IntPolynomial, method: str = STURM, **kw):
    """Isolate every real root of A (automatic initial interval)."""
    return isolate(A, None, method, **kw)


def _require_squarefree(core: IntPolynomial) -> None:
    if not is_squarefree(core):
        raise NonSquarefreeError("gcd(A, A') is nonconstant")


def _isolate_sturm(core, interval, stats, raw, exact_roots):
    try:
        seq = sturm_sequence(core)
    except ValueError as exc:
        raise NonSquarefreeError(str(exc)) from exc
    memo: dict[Fraction, int] = {}

    def var_at(x: Fraction) -> int:
        v = memo.get(x)
        if v is None:
            v = sign_variations(seq.signs_at(x))
            memo[x] = v
        return v

    hits = set()
    stack = [(interval.lo, interval.hi, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        stats.tree_nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        stats.counter_calls += 1
        n = var_at(lo) - var_at(hi) - (1 if hi in hits else 0)
        if n == 0:
            continue
        if n == 1:
            raw.append((lo, hi))
            continue
        if depth >= _MAX_DEPTH:
            raise RuntimeError("subdivision did not terminate (non-squarefree input?)")
        mid = (lo + hi) / 2
        if core.sign_at(mid) == 0:
            hits.add(mid)
            exact_roots.append(mid)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))


def _isolate_descartes(core, interval, stats, raw, exact_roots):
    p0 = _map_to_unit(core, interval.lo, interval.width)
    stack = [(interval.lo, interval.width, 0, p0)]
    while stack:
        lo, width, depth, cs = stack.pop()
        stats.tree_nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        stats.counter_calls += 1
        n = _descartes_count(cs)
        if n == 0:
            continue
        if n == 1:
            raw.append((lo, lo + width))
            continue
        if depth >= _MAX_DEPTH:
            raise RuntimeError("subdivision did not terminate (non-squarefree input?)")
        half = width / 2
        mid = lo + half
        left = _scale_half(cs)
        right = _shift_by_one(left)
        if right[0] == 0:
            exact_roots.append(mid)
            right = right[1:]
            left = _div_by_x_minus_1(left)
        stack.append((mid, half, depth + 1, right))
        stack.append((lo, half, depth + 1, left))


def _isolate_bernstein(core, interval, stats, raw, exact_roots):
    b0 = power_to_bernstein_scaled(IntPolynomial(_map_to_unit(core, interval.lo, interval.width)))
    stack = [(interval.lo, interval.width, 0, b0)]
    while stack:
        lo, width, depth, bs = stack.pop()
        stats.tree_nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        stats.counter_calls += 1
        n = count_bernstein(bs)
        if n == 0:
            continue
        if n == 1:
            raw.append((lo, lo + width))
            continue
        if depth >= _MAX_DEPTH:
            raise RuntimeError("subdivision did not terminate (non-squarefree input?)")
        half = width / 2
        mid = lo + half
        left, right, apex = de_casteljau_split(bs)
        if apex == 0:
            exact_roots.append(mid)
            left = _deflate_bernstein(left, at_zero=False)
            right = _deflate_bernstein(right, at_zero=True)
        stack.append((mid, half, depth + 1, right))
        stack.append((lo, half, depth + 1, left))


# ---------------------------------------------------------------------------
# Output assembly: separation pass, exact-root enclosures, gap statistics
# ---------------------------------------------------------------------------


def _one_sided_sign(p, x, from_right: bool) -> int:
    """Sign of p just right (or left) of x; x must be at most a simple root."""
    s = p.sign_at(x)
    if s:
        return s
    sd = p.derivative().sign_at(x)
    return sd if from_right else -sd


def _assemble(core, interval, raw, exact_roots, separate_output, stats) -> list[RootInterval]:
    # items: ["i", lo, hi, sign_right_of_lo, sign_left_of_hi] or ["e", r, r]
    items: list = [
        ["i", lo, hi, _one_sided_sign(core, lo, True), _one_sided_sign(core, hi, False)]
        for lo, hi in raw
    ]
    # a reported point that is not a subdivision endpoint (the stripped zero
    # root) can sit strictly inside another root's interval; shrink such
    # intervals first so sorting by endpoints equals sorting by root
    for it in items:
        for r in exact_roots:
            while it[0] == "i" and it[1] < r < it[2]:
                _bisect_item(it, core.sign_at)
    items += [["e", r, r, 0, 0] for r in exact_roots]
    items.sort(key=lambda it: (it[1], it[2]))

    if separate_output and len(items) > 1:
        _separate(items, core.sign_at)

    roots: list[RootInterval] = []
    for idx, it in enumerate(items):
        if it[0] == "i":
            roots.append(RootInterval(DyadicInterval(it[1], it[2])))
        else:
            r = it[1]
            margin = Fraction(1)
            if interval is not None:
                margin = min(margin, r - interval.lo, interval.hi - r)
            if idx > 0:
                margin = min(margin, r - items[idx - 1][2])
            if idx + 1 < len(items):
                margin = min(margin, items[idx + 1][1] - r)
            half = _pow2_at_most(margin / 4) if margin > 0 else Fraction(1, 4)
            roots.append(RootInterval(DyadicInterval(r - half, r + half), exact_root=r))

    if len(items) > 1 and separate_output:
        hulls = [(it[1], it[2]) for it in items]
        gaps = []
        for j, (lo, hi) in enumerate(hulls):
            g = None
            if j > 0:
                g = lo - hulls[j - 1][1]
            if j + 1 < len(hulls):
                g2 = hulls[j + 1][0] - hi
                g = g2 if g is None else min(g, g2)
            gaps.append(g)
        stats.gap_lower_bounds = gaps
        stats.sep_bitsize = max(1, -_floor_log2(min(gaps)))
    return roots


def _pow2_at_most(x: Fraction) -> Fraction:
    """Largest power of two <= x (x > 0)."""
    return Fraction(2) ** _floor_log2(x)


def _floor_log2(x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    if num <= 0:
        raise ValueError("need a positive value")
    e = num.bit_length() - den.bit_length()
    if (num >> e if e >= 0 else num << -e) < den:
        e -= 1
    return e


def _separate(items, sign_at) -> None:
    """Bisect interval items in place until consecutive hulls have positive gaps."""
    for j in range(len(items) - 1):
        left, right = items[j], items[j + 1]
        while left[2] >= right[1]:  # hulls touch or overlap
            if left[0] == "i" and (right[0] == "e" or left[2] - left[1] >= right[2] - right[1]):
                _bisect_item(left, sign_at)
            else:
                _bisect_item(right, sign_at)


def _bisect_item(it, sign_at) -> None:
    """Halve an interval item, keeping its unique interior root inside.

    Endpoint signs are tracked one-sidedly so endpoints that happen to be
    other (already reported) roots of A cause no ambiguity.
    """
    lo, hi = it[1], it[2]
    mid = (lo + hi) / 2
    s_mid = sign_at(mid)
    if s_mid == 0:
        # the interior root is exactly the midpoint; collapse to a point
        it[0], it[1], it[2] = "e", mid, mid
        return
    if s_mid == it[3]:
        it[1], it[3] = mid, s_mid
    else:
        it[2], it[4] = mid, s_mid


# ---------------------------------------------------------------------------
# Refinement and separation measurement
# ---------------------------------------------------------------------------


def refine(A: IntPolynomial, root: RootInterval, eps) -> RootInterval:
    """Shrink an isolating interval to width <= eps by sign bisection.

    Exact roots are returned unchanged (width-zero semantics).  The enclosed
    root never leaves the returned interval.
    """
    if root.is_exact:
        return root
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    lo, hi = root.interval.lo, root.interval.hi
    s_lo = A.sign_at(lo)
    if s_lo == 0 or A.sign_at(hi) == 0 or s_lo * A.sign_at(hi) > 0:
        raise ValueError("interval does not bracket a single sign change of A")
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s_mid = A.sign_at(mid)
        if s_mid == 0:
            half = _pow2_at_most(min(eps / 2, mid - lo, hi - mid))
            return RootInterval(DyadicInterval(mid - half, mid + half), exact_root=mid)
        if s_lo * s_mid < 0:
            hi = mid
        else:
            lo = mid
            s_lo = s_mid
    return RootInterval(DyadicInterval(lo, hi))


def _refined_hulls(A, roots, eps) -> list[list[Fraction]]:
    """Refine isolating intervals to width <= eps and shrink touching
    neighbors until consecutive hulls have positive gaps."""
    refined = [refine(A, r, eps) for r in roots]
    hulls = []
    for r in refined:
        if r.is_exact:
            hulls.append([r.exact_root, r.exact_root])
        else:
            hulls.append([r.interval.lo, r.interval.hi])
    for j in range(len(hulls) - 1):
        while hulls[j][1] >= hulls[j + 1][0]:
            for h in (hulls[j], hulls[j + 1]):
                if h[0] < h[1]:
                    mid = (h[0] + h[1]) / 2
                    s = A.sign_at(mid)
                    if s == 0:
                        h[0] = h[1] = mid
                    elif A.sign_at(h[0]) * s < 0:
                        h[1] = mid
                    else:
                        h[0] = mid
    return hulls


def gap_lower_bounds(A: IntPolynomial, roots: list[RootInterval], eps) -> list[Fraction]:
    """Positive lower bound, per isolated root, on the distance to the
    nearest other isolated real root; roots must be sorted and pairwise
    disjoint (as returned by isolate)."""
    if len(roots) < 2:
        return []
    hulls = _refined_hulls(A, roots, Fraction(eps))
    gaps = []
    for j, (lo, hi) in enumerate(hulls):
        g = None
        if j > 0:
            g = lo - hulls[j - 1][1]
        if j + 1 < len(hulls):
            g2 = hulls[j + 1][0] - hi
            g = g2 if g is None else min(g, g2)
        gaps.append(g)
    return gaps


def min_separation(A: IntPolynomial, eps, method: str = DESCARTES) -> tuple[Fraction, Fraction]:
    """Bracket the minimum distance between consecutive real roots of A.

    Returns (lower, upper) with lower <= Delta <= upper and
    upper - lower <= 2*eps; requires a squarefree A with >= 2 real roots.
    """
    eps = Fraction(eps)
    roots, _ = isolate_all(A, method=method)
    if len(roots) < 2:
        raise ValueError("need at least two real roots to measure separation")
    hulls = _refined_hulls(A, roots, eps / 2)
    lower = min(hulls[j + 1][0] - hulls[j][1] for j in range(len(hulls) - 1))
    upper = min(hulls[j + 1][1] - hulls[j][0] for j in range(len(hulls) - 1))
    return lower, upper

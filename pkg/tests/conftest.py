import random
from fractions import Fraction

import numpy as np
import pytest

from realroots import IntPolynomial, is_squarefree


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run the long Monte Carlo acceptance variants",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_squarefree(rng: random.Random, max_degree=12, coeff_bound=50) -> IntPolynomial:
    """A random squarefree integer polynomial of degree >= 1."""
    while True:
        d = rng.randint(1, max_degree)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(d + 1)]
        p = IntPolynomial(coeffs)
        if p.degree >= 1 and is_squarefree(p):
            return p


def _exact_bracket(p: IntPolynomial, x: float, radius: float):
    """Shrink a float guess to an exact sign-change bracket, or None."""
    a = Fraction(x - radius)
    b = Fraction(x + radius)
    sa, sb = p.sign_at(a), p.sign_at(b)
    if sa == 0 or sb == 0:
        a, b = Fraction(x - 1.1 * radius), Fraction(x + 0.9 * radius)
        sa, sb = p.sign_at(a), p.sign_at(b)
    if sa * sb >= 0:
        return None
    return (a, b)


def oracle_real_roots(p: IntPolynomial):
    """Brute-force real roots of a squarefree polynomial, independent of the
    subdivision code: eigenvalue + dense-grid candidates, each confirmed by
    an exact rational sign change (or an exact rational root).

    Returns a sorted list of disjoint (lo, hi) Fractions, or (r, r) for
    roots hit exactly.
    """
    coeffs = [float(c) for c in p.coeffs]
    deg = len(coeffs) - 1
    if deg < 1:
        return []
    cands = []
    for z in np.roots(list(reversed(coeffs))):
        if abs(z.imag) <= 1e-7 * max(1.0, abs(z)):
            cands.append(float(z.real))
    # dense grid catch-all for anything the eigenvalues misplace
    bound = 1.0 + max(abs(c) for c in coeffs) / abs(coeffs[-1])
    xs = np.linspace(-bound, bound, 4097)
    vals = np.polyval(list(reversed(coeffs)), xs)
    for i in range(len(xs) - 1):
        if vals[i] == 0.0:
            cands.append(float(xs[i]))
        elif vals[i] * vals[i + 1] < 0:
            cands.append(float(0.5 * (xs[i] + xs[i + 1])))
    cands.sort()
    merged = []
    for x in cands:
        if not merged or x - merged[-1] > 1e-9 * max(1.0, abs(x)):
            merged.append(x)
    out = []
    for i, x in enumerate(merged):
        gap = min(
            [abs(x - merged[j]) for j in (i - 1, i + 1) if 0 <= j < len(merged)]
            or [1.0]
        )
        radius = max(min(0.25 * gap, 1e-4 * max(1.0, abs(x))), 1e-12)
        xf = Fraction(x)
        if p.sign_at(xf) == 0:
            out.append((xf, xf))
            continue
        br = _exact_bracket(p, x, radius)
        if br is None:
            for r2 in (radius * 32, radius * 1024):
                br = _exact_bracket(p, x, r2)
                if br is not None:
                    break
        if br is not None:
            # bisect exactly until the bracket is tight
            a, b = br
            sa = p.sign_at(a)
            while b - a > Fraction(1, 1 << 40):
                mid = (a + b) / 2
                sm = p.sign_at(mid)
                if sm == 0:
                    a = b = mid
                    break
                if sa * sm < 0:
                    b = mid
                else:
                    a, sa = mid, sm
            out.append((a, b))
    # drop duplicates from grid+eigenvalue double counting
    dedup = []
    for a, b in out:
        if not dedup or a > dedup[-1][1]:
            dedup.append((a, b))
    return dedup

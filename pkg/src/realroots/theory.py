"""Closed-form root densities, expected-count integrals, separation laws, and
the exact combinatorial identities behind the Bernstein root-count theorem.

Densities come from the Edelman-Kostlan formula for Gaussian coefficient
vectors with diagonal covariance: with f(u) = sum_k v_k u^k and u = t^2,

    rho(t) = (1/pi) * sqrt( f'/f + u f''/f - u (f'/f)^2 )  at u = t^2.

All f evaluations run in log scale (log-sum-exp over the terms) so binomial
variance vectors up to degree 2000 are usable without overflow.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
from scipy import integrate

from .randgen import SO2, WEYL

# rational bracket of pi, for exact inequality checks (|pi - math.pi| < 2^-51)
PI_LO = Fraction(math.pi) - Fraction(1, 10**15)
PI_HI = Fraction(math.pi) + Fraction(1, 10**15)

_CORRELATION_SLOPE = {SO2: math.pi**2 / 4.0, WEYL: 1.0 / (4.0 * math.pi)}


def _log_number(x) -> float:
    """Natural log of a positive int/Fraction/float of any size."""
    if isinstance(x, Fraction):
        return _log_number(x.numerator) - _log_number(x.denominator)
    if isinstance(x, int):
        bl = x.bit_length()
        if bl <= 900:
            return math.log(x)
        return (bl - 64) * math.log(2.0) + math.log(x >> (bl - 64))
    return math.log(x)


def _log_variances(v) -> tuple[np.ndarray, np.ndarray]:
    """(indices k, log v_k) over the nonzero entries; rejects negatives."""
    ks, logs = [], []
    for k, vk in enumerate(v):
        if vk < 0:
            raise ValueError("variances must be non-negative")
        if vk:
            ks.append(k)
            logs.append(_log_number(vk))
    if not ks:
        raise ValueError("variance vector is identically zero")
    return np.array(ks, dtype=float), np.array(logs)


def _density_given_logs(ks: np.ndarray, logs: np.ndarray, t: float) -> float:
    u = t * t
    if u == 0.0:
        # f(0) = v_0, f'(0) = v_1: the log-derivative collapses to v_1/v_0
        if ks[0] != 0:
            raise ValueError("density undefined: f(0) = 0")
        ratio = math.exp(logs[1] - logs[0]) if len(ks) > 1 and ks[1] == 1 else 0.0
        return math.sqrt(ratio) / math.pi
    lu = math.log(u)
    terms = logs + ks * lu
    m = terms.max()
    w = np.exp(terms - m)
    s0 = w.sum()
    # the log-derivative f'/f + u f''/f - u (f'/f)^2 equals Var(K)/u for the
    # index distribution p_k = v_k u^k / f(u); summing squared deviations
    # avoids the catastrophic cancellation of the raw three-term form
    a = float((w * ks).sum() / s0)
    var = float((w * (ks - a) ** 2).sum() / s0)
    return math.sqrt(var / u) / math.pi


def ek_density(v, t: float) -> float:
    """Expected number of real zeros per unit length at t, for Gaussian
    coefficients with variances v on the monomial basis.

    Requires f(t^2) > 0 (with f the variance generating polynomial).
    The density is invariant under positive scaling of v.
    """
    ks, logs = _log_variances(v)
    return _density_given_logs(ks, logs, float(t))


def ek_expected_count(v, lo=-math.inf, hi=math.inf, tol: float = 1e-6, breakpoints=()) -> float:
    """Integral of ek_density over [lo, hi] (endpoints may be infinite).

    Adaptive Gauss-Kronrod quadrature; an unbounded range is mapped to a
    finite one by the substitution t = tan(phi).  Absolute tolerance tol.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    ks, logs = _log_variances(v)

    if math.isinf(lo) or math.isinf(hi):
        a, b = math.atan(lo), math.atan(hi)

        def integrand(phi: float) -> float:
            t = math.tan(phi)
            return _density_given_logs(ks, logs, t) * (1.0 + t * t)

        pts = sorted(math.atan(p) for p in breakpoints if lo < p < hi) or None
    else:
        a, b = lo, hi

        def integrand(t: float) -> float:
            return _density_given_logs(ks, logs, t)

        pts = sorted(p for p in breakpoints if lo < p < hi) or None

    val, err = integrate.quad(
        integrand, a, b, epsabs=tol, epsrel=1e-10, limit=800, points=pts
    )
    if err > 50 * max(tol, 1e-12 * abs(val)):
        raise ArithmeticError(f"quadrature did not converge: estimate {val}, error {err}")
    return val


def weyl_variances(d: int) -> list[Fraction]:
    return [Fraction(1, math.factorial(i)) for i in range(d + 1)]


def weyl_density(t: float, d: int) -> float:
    """Real-root density of degree-d Weyl polynomials:

        rho(t) = (1/pi) sqrt(1 + g(u-d-1) - u g^2),   u = t^2,
        g = t^(2d) / (e^(t^2) Gamma(d+1, t^2)),

    with the incomplete gamma expanded by its exact finite-series identity
    e^(t^2) Gamma(d+1, t^2) = d! * sum_{k<=d} t^(2k)/k!.  The radicand is
    evaluated as the index variance of p_k = (u^k/k!)/sum (an exact
    rearrangement) so the large-|t| cancellation cannot blow up; agrees with
    ek_density on the Weyl variance vector.
    """
    u = t * t
    if u == 0.0:
        return 1.0 / math.pi
    lu = math.log(u)
    terms = np.array([k * lu - math.lgamma(k + 1) for k in range(d + 1)])
    m = terms.max()
    w = np.exp(terms - m)
    s0 = w.sum()
    ks = np.arange(d + 1, dtype=float)
    a = float((w * ks).sum() / s0)
    var = float((w * (ks - a) ** 2).sum() / s0)
    return math.sqrt(var / u) / math.pi


def weyl_expected_count(d: int, tol: float = 1e-6, disc_only: bool = False) -> float:
    """Expected number of real roots of a Weyl polynomial.

    As d grows this approaches (2/pi)sqrt(d); the whole-line count carries a
    slowly growing positive correction from the crossover zone at |t| ~
    sqrt(d), while the count restricted to the disc |t| <= sqrt(d)
    (disc_only=True, the usual convention for this family, which puts only a
    bounded number of zeros outside) sits within a few percent already at
    moderate d.
    """
    sd = math.sqrt(d)
    if disc_only:
        return ek_expected_count(
            weyl_variances(d), -sd, sd, tol=tol, breakpoints=(-0.9 * sd, 0.9 * sd)
        )
    return ek_expected_count(weyl_variances(d), tol=tol, breakpoints=(-sd, sd))


def bernstein_even_variances(d: int) -> list[int]:
    """Variance vector of sum_k a_k sqrt(C(2d,2k)) x^(2k): C(2d,2k) on even
    indices of a degree-2d vector, zero on odd."""
    v = [0] * (2 * d + 1)
    for k in range(d + 1):
        v[2 * k] = math.comb(2 * d, 2 * k)
    return v


def bernstein_root_integral(d: int, tol: float = 1e-6) -> float:
    """Expected number of positive real roots of the even-binomial model:

        I = (sqrt(2d)/pi) * Integral_0^(pi/2)
            sqrt(1 + (2d-1) sin^2(th) cos^(2d-2)(th) - cos^(4d-2)(th))
            / (1 + cos^(2d)(th)) dth

    Satisfies sqrt(2d)/2 - sqrt(8/pi^3) - o(1) <= I <= sqrt(2d)/2 + 1/pi.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    two_d = 2.0 * d

    def integrand(theta: float) -> float:
        c = math.cos(theta)
        s = math.sin(theta)
        if c <= 0.0:
            return 1.0  # theta = pi/2: radicand 1, denominator 1
        lc = math.log(c)
        rad = 1.0 + (two_d - 1.0) * s * s * math.exp((two_d - 2.0) * lc) - math.exp(
            (2.0 * two_d - 2.0) * lc
        )
        return math.sqrt(max(rad, 0.0)) / (1.0 + math.exp(two_d * lc))

    shoulder = 1.0 / math.sqrt(two_d)
    pts = [p for p in (shoulder, 2.0 * shoulder, 4.0 * shoulder) if p < math.pi / 2]
    val, err = integrate.quad(
        integrand, 0.0, math.pi / 2, epsabs=tol, epsrel=1e-10, limit=400, points=pts
    )
    if err > 50 * tol:
        raise ArithmeticError(f"quadrature did not converge: error {err}")
    return math.sqrt(two_d) / math.pi * val


# ---------------------------------------------------------------------------
# Straightened zeros and separation laws
# ---------------------------------------------------------------------------


def straighten(model: str, d: int, alpha):
    """Map a root to its straightened position (the cumulative expected-count
    transform): order preserving; the straightened zeros are asymptotically
    uniform.  SO(2): sqrt(d)*arctan(a)/pi; Weyl: a/pi."""
    if model == SO2:
        return math.sqrt(d) * np.arctan(alpha) / math.pi
    if model == WEYL:
        return np.asarray(alpha) / math.pi if not np.isscalar(alpha) else alpha / math.pi
    raise ValueError(f"no straightening map for model {model!r}")


def _sep_slope(model: str, d: int, corrected: bool) -> float:
    """Coefficient c in Pr[min straightened gap <= l] ~ c l^2.

    corrected=False returns the printed asymptotic displays,
    (pi^2 sqrt(d)/2) for SO(2) and sqrt(d)/(4 pi^2) for Weyl.  Those two are
    mutually inconsistent: after unit-density straightening both families
    converge locally to the same stationary Gaussian process (covariance
    e^(-s^2/2)), whose 2-point correlation slope is pi^2/4 -- the SO(2)
    proposition's value.  Integrating that correlation over the one-sided
    near-diagonal zone of the actual straightened range r gives
    Pr ~ r (pi^2/8) l^2, i.e. (pi^2 sqrt(d)/8) l^2 for SO(2)
    (r = sqrt(d)) and (pi sqrt(d)/4) l^2 for Weyl (r = (2/pi) sqrt(d),
    zeros restricted to the disc |t| <= sqrt(d)).  corrected=True returns
    these; Monte Carlo through the exact isolator confirms them.
    """
    sd = math.sqrt(d)
    if model == SO2:
        return math.pi**2 * sd / 8.0 if corrected else math.pi**2 * sd / 2.0
    if model == WEYL:
        return math.pi * sd / 4.0 if corrected else sd / (4.0 * math.pi**2)
    raise ValueError(f"no separation law for model {model!r}")


def sep_probability(model: str, d: int, l: float, corrected: bool = False) -> float:
    """Asymptotic Pr[min straightened gap <= l], clamped to [0, 1]."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return min(1.0, _sep_slope(model, d, corrected) * l * l)


def sep_quantile(model: str, d: int, prob: float, corrected: bool = False) -> float:
    """The gap threshold l whose asymptotic probability is prob."""
    if not 0 < prob <= 1:
        raise ValueError("prob must be in (0, 1]")
    return math.sqrt(prob / _sep_slope(model, d, corrected))


def correlation_slope(model: str) -> float:
    """Slope of the limiting 2-point correlation of straightened zeros."""
    return _CORRELATION_SLOPE[model]


def expected_sep_lower_bound(model: str, d: int, tau: float, c: float = 1.0) -> float:
    """Lower bound on the expected minimum distance between consecutive real
    roots, from the separation laws with threshold l = 1/(d^c tau).

    SO(2): pi/(d^(c+1/2) tau) - pi^3/(2 d^(3c) tau^3);
    Weyl:  pi/(d^c tau)       - 1/(4 pi d^(3c-1/2) tau^3).
    """
    if c < 1 or tau < 1:
        raise ValueError("need c >= 1 and tau >= 1")
    if model == SO2:
        return math.pi / (d ** (c + 0.5) * tau) - math.pi**3 / (2.0 * d ** (3 * c) * tau**3)
    if model == WEYL:
        return math.pi / (d**c * tau) - 1.0 / (4.0 * math.pi * d ** (3 * c - 0.5) * tau**3)
    raise ValueError(f"no separation bound for model {model!r}")


# ---------------------------------------------------------------------------
# Combinatorial identities and their exact bounds
# ---------------------------------------------------------------------------


def binomial_sum_identity(n: int, k: int, x):
    """Both sides of sum_{j<=n} C(kn, kj) x^(kj) = (1/k) sum_j (x + w^j)^(kn)
    over the k-th roots of unity w^j.

    The left side is always an exact rational; the right side is exact for
    k <= 2 (real algebra) and a complex-arithmetic float for k >= 3.
    """
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    x = Fraction(x)
    lhs = sum(math.comb(k * n, k * j) * x ** (k * j) for j in range(n + 1))
    if k == 1:
        rhs = (x + 1) ** n
    elif k == 2:
        rhs = ((x + 1) ** (2 * n) + (x - 1) ** (2 * n)) / 2
    else:
        acc = 0j
        for j in range(k):
            acc += (complex(x) + cmath.exp(2j * math.pi * j / k)) ** (k * n)
        rhs = acc.real / k
    return lhs, rhs


def stirling_binomial_ratio(n: int, k: int, p: int):
    """Exact C(n,k)^p / C(pn,pk) next to its Stirling approximation
    sqrt(p (n/2pi)^(p-1)) * sqrt((1/(k(n-k)))^(p-1))."""
    if not 0 < k < n or p < 1:
        raise ValueError("need 0 < k < n and p >= 1")
    exact = Fraction(math.comb(n, k) ** p, math.comb(p * n, p * k))
    approx = math.sqrt(p) * (n / (2.0 * math.pi * k * (n - k))) ** ((p - 1) / 2.0)
    return exact, approx


def sk_value(d: int, k: int) -> float:
    """S_k = sqrt(d / (pi k (d-k))), the moderate standard deviation scale."""
    if not 0 < k < d:
        raise ValueError("need 0 < k < d")
    return math.sqrt(d / (math.pi * k * (d - k)))


def sk_sandwich_holds(d: int) -> bool:
    """Exact check of 2/sqrt(pi d) <= S_k <= 1 for all 0 < k < d.

    The lower inequality reduces to 4k(d-k) <= d^2 (pi cancels); the upper
    to d <= pi k(d-k), verified with the rational lower bracket of pi.
    """
    for k in range(1, d):
        if 4 * k * (d - k) > d * d:
            return False
        if PI_LO * k * (d - k) < d:
            return False
    return True


def binomial_ratio_upper_holds(d: int) -> bool:
    """Exact check of C(d,k)^2 <= C(2d,2k) for all 0 < k < d."""
    return all(
        math.comb(d, k) ** 2 <= math.comb(2 * d, 2 * k) for k in range(1, d)
    )


def wallis(n: int) -> tuple[Fraction, int]:
    """W(n) = Integral_0^(pi/2) cos^n, exactly, as (coefficient, pi power).

    W(0) = pi/2, W(1) = 1, and W(n) = (n-1)/n * W(n-2); pi power is 1 for
    even n and 0 for odd n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    q = Fraction(1, 2) if n % 2 == 0 else Fraction(1)
    for m in range(2 + (n % 2), n + 1, 2):
        q *= Fraction(m - 1, m)
    return q, 1 if n % 2 == 0 else 0


def wallis_float(n: int) -> float:
    q, p = wallis(n)
    return float(q) * math.pi**p


def wallis_upper_bound_holds(n: int) -> bool:
    """Exact check of W(n) <= sqrt(pi)/sqrt(2n+1), via squared rational
    comparisons against the pi bracket."""
    q, p = wallis(n)
    if p == 1:  # (q pi)^2 <= pi/(2n+1)  <=>  q^2 pi (2n+1) <= 1
        return q * q * PI_HI * (2 * n + 1) <= 1
    return q * q * (2 * n + 1) <= PI_LO


def wallis_product_identity_holds(n: int) -> bool:
    """Exact check of W(n) W(n-1) = pi/(2n)."""
    qn, pn = wallis(n)
    qm, pm = wallis(n - 1)
    return pn + pm == 1 and qn * qm == Fraction(1, 2 * n)

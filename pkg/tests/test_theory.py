import math
from fractions import Fraction

import pytest

from realroots import (
    bernstein_even_variances,
    bernstein_root_integral,
    binomial_sum_identity,
    correlation_slope,
    ek_density,
    ek_expected_count,
    expected_sep_lower_bound,
    sep_probability,
    sep_quantile,
    sk_sandwich_holds,
    stirling_binomial_ratio,
    straighten,
    variance_vector,
    wallis,
    wallis_float,
    weyl_density,
    weyl_expected_count,
)
from realroots.theory import (
    binomial_ratio_upper_holds,
    wallis_product_identity_holds,
    wallis_upper_bound_holds,
    weyl_variances,
)


def test_density_examples():
    assert ek_density(variance_vector("so2", 25), 0.0) == pytest.approx(5 / math.pi)
    for t in (0.0, 0.7, -2.5):
        d = 25
        assert ek_density(variance_vector("so2", d), t) == pytest.approx(
            math.sqrt(d) / (math.pi * (1 + t * t))
        )
    # Kac d=1: 1/(pi (1+t^2))
    for t in (0.0, 1.0, -3.0):
        assert ek_density([1, 1], t) == pytest.approx(1 / (math.pi * (1 + t * t)))


def test_density_scale_invariant():
    v = variance_vector("so2", 12)
    for t in (0.3, -1.7, 4.0):
        assert ek_density(v, t) == pytest.approx(ek_density([17 * x for x in v], t))


def test_density_rejects_negative_variance():
    with pytest.raises(ValueError):
        ek_density([1, -1, 1], 0.5)


def test_expected_count_so2_exact():
    for d in (4, 25, 100, 400):
        assert abs(ek_expected_count(variance_vector("so2", d)) - math.sqrt(d)) < 1e-6


def test_expected_count_kac_degree_one():
    assert ek_expected_count([1, 1]) == pytest.approx(1.0, abs=1e-6)


def test_expected_count_additive_and_symmetric():
    v = variance_vector("so2", 16)
    ab = ek_expected_count(v, -1.5, 0.25)
    bc = ek_expected_count(v, 0.25, 2.0)
    ac = ek_expected_count(v, -1.5, 2.0)
    assert ab + bc == pytest.approx(ac, abs=1e-9)
    assert ek_expected_count(v, -2.0, -1.0) == pytest.approx(
        ek_expected_count(v, 1.0, 2.0), abs=1e-9
    )


def test_weyl_density_branches():
    # bulk: ~1/pi
    assert weyl_density(3.0, 400) == pytest.approx(1 / math.pi, rel=0.02)
    # far tail: ~ sqrt(d)/(pi t^2); the printed d/(pi t^2) is off by sqrt(d)
    d, t = 100, 100.0
    assert weyl_density(t, d) == pytest.approx(math.sqrt(d) / (math.pi * t * t), rel=0.05)


def test_weyl_density_matches_ek():
    import random

    rng = random.Random(9)
    d = 80
    v = weyl_variances(d)
    for _ in range(50):
        t = rng.uniform(-3 * math.sqrt(d), 3 * math.sqrt(d))
        a, b = weyl_density(t, d), ek_density(v, t)
        assert abs(a - b) <= 1e-8 * max(a, 1e-12)


def test_weyl_density_matches_incomplete_gamma_display():
    # the displayed form 1 + g(u-d-1) - u g^2 with
    # g = t^(2d)/(e^(t^2) Gamma(d+1,t^2)), where it is well conditioned
    import numpy as np

    d = 40
    for t in (0.5, 1.5, 3.0, 5.0):
        u = t * t
        lu = math.log(u)
        terms = np.array([k * lu - math.lgamma(k + 1) for k in range(d + 1)])
        m = terms.max()
        logf = m + math.log(np.exp(terms - m).sum())
        g = math.exp(d * lu - math.lgamma(d + 1) - logf)
        raw = math.sqrt(max(1.0 + g * (u - d - 1.0) - u * g * g, 0.0)) / math.pi
        assert weyl_density(t, d) == pytest.approx(raw, rel=1e-9)


def test_weyl_expected_count_disc():
    for d, tol in ((100, 0.05), (400, 0.05)):
        target = 2 / math.pi * math.sqrt(d)
        assert abs(weyl_expected_count(d, disc_only=True) - target) <= tol * target
    # the whole-line count exceeds the asymptote by a slowly growing term
    assert weyl_expected_count(400) > 2 / math.pi * 20


def test_bernstein_integral_examples():
    val = bernstein_root_integral(200)
    assert 9.49 <= val <= 10.32
    v1 = bernstein_root_integral(1)
    assert 0 < v1 < math.sqrt(2) / 2 + 1 / math.pi
    for d in (5, 50, 320):
        two_i = 2 * bernstein_root_integral(d)
        ek = ek_expected_count(bernstein_even_variances(d))
        assert abs(two_i - ek) < 1e-4


def test_bernstein_integral_sandwich():
    for d in (50, 100, 200, 500, 1000):
        val = 2 * bernstein_root_integral(d)
        lo = math.sqrt(2 * d) - 2 * math.sqrt(8 / math.pi**3) - 0.5
        hi = math.sqrt(2 * d) + 2 / math.pi + 0.5
        assert lo <= val <= hi


def test_straighten_examples():
    assert straighten("so2", 100, 1.0) == pytest.approx(2.5)
    assert float(straighten("so2", 4, 0.0)) == 0.0
    assert straighten("so2", 4, 1e9) == pytest.approx(math.sqrt(4) / 2, rel=1e-6)
    assert straighten("weyl", 9, math.pi) == pytest.approx(1.0)
    # order preserving
    xs = [-3.0, -0.2, 0.0, 1.4, 8.0]
    ys = [float(straighten("so2", 25, x)) for x in xs]
    assert ys == sorted(ys)


def test_sep_probability_examples():
    assert sep_probability("so2", 100, 0.01) == pytest.approx(
        math.pi**2 * 10 * 1e-4 / 2
    )
    assert sep_probability("weyl", 100, 0.01) == pytest.approx(1e-4 * 10 / (4 * math.pi**2))
    assert sep_probability("so2", 100, 0.0) == 0.0
    assert sep_probability("so2", 100, 100.0) == 1.0
    for model in ("so2", "weyl"):
        l = sep_quantile(model, 64, 0.05)
        assert sep_probability(model, 64, l) == pytest.approx(0.05)


def test_correlation_slopes():
    assert correlation_slope("so2") == pytest.approx(math.pi**2 / 4)
    assert correlation_slope("weyl") == pytest.approx(1 / (4 * math.pi))


def test_expected_sep_lower_bound_examples():
    v = expected_sep_lower_bound("so2", 100, 53, 1)
    assert v == pytest.approx(
        math.pi / (100**1.5 * 53) - math.pi**3 / (2 * 100**3 * 53**3)
    )
    assert v == pytest.approx(5.927e-5, rel=1e-3)
    w = expected_sep_lower_bound("weyl", 100, 53, 1)
    assert w == pytest.approx(math.pi / (100 * 53), rel=1e-4)
    # larger c gives a smaller bound
    assert expected_sep_lower_bound("so2", 100, 53, 2) < v
    with pytest.raises(ValueError):
        expected_sep_lower_bound("so2", 100, 53, 0.5)


def test_binomial_sum_identity_examples():
    lhs, rhs = binomial_sum_identity(2, 2, 1)
    assert lhs == rhs == 8
    lhs, rhs = binomial_sum_identity(1, 2, 2)
    assert lhs == rhs == 5
    lhs, rhs = binomial_sum_identity(4, 3, Fraction(3, 2))
    assert abs(float(lhs) - rhs) <= 1e-9 * float(lhs)


def test_binomial_sum_identity_exact_grid():
    xs = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3))
    for n in range(1, 21):
        for k in (1, 2):
            if k > n:
                continue
            for x in xs:
                lhs, rhs = binomial_sum_identity(n, k, x)
                assert lhs == rhs, (n, k, x)


def test_stirling_ratio_examples():
    exact, approx = stirling_binomial_ratio(100, 50, 2)
    assert abs(float(exact) - approx) / approx < 0.02
    exact1, approx1 = stirling_binomial_ratio(17, 5, 1)
    assert exact1 == 1 and approx1 == 1.0


def test_sk_sandwich_exhaustive():
    for d in range(2, 501):
        assert sk_sandwich_holds(d), d
    for d in (2, 10, 100, 500):
        assert binomial_ratio_upper_holds(d)


def test_wallis_examples():
    assert wallis(0) == (Fraction(1, 2), 1)
    assert wallis(1) == (Fraction(1), 0)
    assert wallis(2) == (Fraction(1, 4), 1)
    assert wallis(3) == (Fraction(2, 3), 0)
    assert wallis_float(4) == pytest.approx(3 * math.pi / 16)


def test_wallis_identities_to_2000():
    prev = wallis_float(0)
    for n in range(1, 2001):
        assert wallis_product_identity_holds(n), n
        assert wallis_upper_bound_holds(n), n
        cur = wallis_float(n)
        assert cur < prev
        prev = cur
    assert wallis_float(2000) * math.sqrt(2000) == pytest.approx(
        math.sqrt(math.pi / 2), rel=1e-3
    )

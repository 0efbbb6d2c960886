import math
import random
from fractions import Fraction

import pytest

from realroots import (
    EndpointRootError,
    IntPolynomial,
    count_all_real,
    count_in,
    sign_variations,
    sturm_sequence,
    variations_at,
    variations_at_infinity,
)
from conftest import oracle_real_roots, random_squarefree

INF = math.inf


def test_sign_variations_examples():
    assert sign_variations([1, -1, 1]) == 2
    assert sign_variations([1, 0, -1]) == 1
    assert sign_variations([1, 1, 1]) == 0
    assert sign_variations([]) == 0
    assert sign_variations([0, 0]) == 0


def test_sequence_examples():
    S = sturm_sequence(IntPolynomial([-2, 0, 1]))
    signs = [q.leading for q in S.polys]
    assert len(S.polys) == 3
    assert [s > 0 for s in signs] == [True, True, True]
    assert S.polys[-1].degree == 0

    S1 = sturm_sequence(IntPolynomial([0, 1]))
    assert [q.coeffs for q in S1.polys] == [(0, 1), (1,)]

    # x^3 - x: positive multiples of (x^3-x, 3x^2-1, (2/3)x, 1)
    S3 = sturm_sequence(IntPolynomial([0, -1, 0, 1]))
    assert len(S3.polys) == 4
    assert S3.polys[2].coeffs == (0, 6)  # 9 * (2/3) x
    assert S3.polys[3].leading > 0


def test_sequence_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_sequence(IntPolynomial([]))
    with pytest.raises(ValueError):
        sturm_sequence(IntPolynomial([7]))
    with pytest.raises(ValueError):
        sturm_sequence(IntPolynomial([1, -2, 1]))  # (x-1)^2


def test_variations_examples():
    S = sturm_sequence(IntPolynomial([-2, 0, 1]))
    assert variations_at(S, Fraction(0)) == 1
    assert variations_at(S, Fraction(2)) == 0
    assert variations_at_infinity(S, True) == 0
    assert variations_at_infinity(S, False) == 2

    S1 = sturm_sequence(IntPolynomial([0, 1]))
    assert variations_at(S1, Fraction(-1)) == 1
    assert variations_at_infinity(S1, True) == 0

    S3 = sturm_sequence(IntPolynomial([0, -1, 0, 1]))
    assert variations_at_infinity(S3, False) == 3
    assert variations_at_infinity(S3, True) == 0


def test_count_in_examples():
    assert count_in(sturm_sequence(IntPolynomial([1, 0, 1])), Fraction(-10), Fraction(10)) == 0
    S = sturm_sequence(IntPolynomial([0, -1, 0, 1]))
    assert count_in(S, Fraction(-2), Fraction(1, 2)) == 2  # roots -1, 0
    assert count_in(sturm_sequence(IntPolynomial([-2, 0, 1])), -INF, INF) == 2


def test_count_in_endpoint_root_raises():
    S = sturm_sequence(IntPolynomial([0, -1, 0, 1]))
    with pytest.raises(EndpointRootError):
        count_in(S, Fraction(0), Fraction(2))
    # a root at the right endpoint is included, not an error
    assert count_in(S, Fraction(1, 2), Fraction(1)) == 1


def test_count_all_real_examples():
    assert count_all_real(IntPolynomial([5, 3])) == 1
    assert count_all_real(IntPolynomial([-4, 0, -3, 0, 1])) == 2  # (x^2+1)(x^2-4)
    wilk = IntPolynomial.from_roots(range(1, 11))
    assert count_all_real(wilk) == 10


def test_count_matches_oracle_on_random_intervals():
    rng = random.Random(20)
    pairs_checked = 0
    while pairs_checked < 200:
        p = random_squarefree(rng)
        if p.degree < 1:
            continue
        roots = oracle_real_roots(p)
        S = sturm_sequence(p)
        for _ in range(4):
            a = Fraction(rng.randint(-60, 59), rng.choice([1, 2, 4, 8]))
            b = a + Fraction(rng.randint(1, 40), rng.choice([1, 2, 4]))
            if p.sign_at(a) == 0:
                continue
            expected = sum(1 for lo, hi in roots if a < lo and hi <= b)
            # brackets straddling an endpoint are ambiguous; skip those draws
            if any(lo <= a <= hi or (lo <= b <= hi and lo != hi) for lo, hi in roots):
                continue
            assert count_in(S, a, b) == expected, (p.coeffs, a, b)
            pairs_checked += 1


def test_count_additive():
    rng = random.Random(21)
    for _ in range(40):
        p = random_squarefree(rng, max_degree=9)
        S = sturm_sequence(p)
        a, b, c = sorted(Fraction(rng.randint(-50, 50), rng.choice([1, 2, 4])) for _ in range(3))
        if a == b or b == c:
            continue
        if p.sign_at(a) == 0 or p.sign_at(b) == 0:
            continue
        assert count_in(S, a, c) == count_in(S, a, b) + count_in(S, b, c)


def test_variations_nonincreasing():
    rng = random.Random(22)
    for _ in range(30):
        p = random_squarefree(rng, max_degree=10)
        S = sturm_sequence(p)
        xs = sorted(Fraction(rng.randint(-80, 80), rng.choice([1, 2, 8])) for _ in range(6))
        vs = [variations_at(S, x) for x in xs]
        assert all(v1 >= v2 for v1, v2 in zip(vs, vs[1:]))


def test_sequence_bitsize_subresultant_bound():
    rng = random.Random(23)
    worst = 0.0
    for _ in range(40):
        p = random_squarefree(rng, max_degree=12, coeff_bound=50)
        if p.degree < 2:
            continue
        S = sturm_sequence(p)
        d = p.degree
        tau = p.bitsize()
        ratio = S.max_bitsize() / (d * (tau + math.log2(d)))
        worst = max(worst, ratio)
    assert worst <= 2.0, worst


def test_quotient_evaluation_agrees():
    rng = random.Random(24)
    for _ in range(25):
        p = random_squarefree(rng, max_degree=9, coeff_bound=30)
        if p.degree < 2:
            continue
        S = sturm_sequence(p, with_quotients=True)
        for _ in range(5):
            x = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            assert S.signs_at_quotient(x) == S.signs_at(x)

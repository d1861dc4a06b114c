import cmath
import math
import random
from fractions import Fraction

import pytest

from zhathat import (
    CycloNumber,
    LaurentPoly,
    RationalPhase,
    bernoulli_number,
    bernoulli_poly,
    binomial,
    cyclotomic_polynomial,
    euler_phi,
    parse_phase,
)


def test_binomial_matches_pascal():
    for n in range(12):
        for k in range(-2, n + 3):
            if 0 <= k <= n:
                assert binomial(n, k) == math.comb(n, k)
            else:
                assert binomial(n, k) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def _bernoulli_poly_by_recurrence(k, x):
    # independent oracle: B_0 = 1, sum_{j<k+1} C(k+1,j) B_j(x) = (k+1) x^k
    polys = [Fraction(1)]
    for m in range(1, k + 1):
        acc = (m + 1) * Fraction(x) ** m
        acc -= sum(math.comb(m + 1, j) * polys[j] for j in range(m))
        polys.append(acc / (m + 1))
    return polys[k]


def test_bernoulli_poly_values():
    x = Fraction(1, 2)
    assert bernoulli_poly(2, x) == Fraction(-1, 12)
    assert bernoulli_poly(2, Fraction(0)) == Fraction(1, 6)
    for k in range(9):
        for x in (Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(-1, 5)):
            assert bernoulli_poly(k, x) == _bernoulli_poly_by_recurrence(k, x)


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_rational_phase_reduction_and_arithmetic():
    assert RationalPhase(5, 4) == RationalPhase(1, 4)
    assert RationalPhase(2, 4) == RationalPhase(1, 2)
    assert RationalPhase(-1, 3) == RationalPhase(2, 3)
    p = RationalPhase(1, 3)
    assert p * p == RationalPhase(2, 3)
    assert p**3 == RationalPhase(0, 1)
    assert p.inverse() == RationalPhase(2, 3)
    assert parse_phase("3/6") == RationalPhase(1, 2)
    with pytest.raises(ValueError):
        parse_phase("1/0")


def test_euler_phi_and_cyclotomic_polynomials():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclo_canonical_relations():
    z3 = CycloNumber.from_phase(RationalPhase(1, 3))
    assert z3 * z3 * z3 == CycloNumber.from_rational(1)
    assert z3 + z3 * z3 == CycloNumber.from_rational(-1)
    z4 = CycloNumber.from_phase(RationalPhase(1, 4))
    assert z4 * z4 == CycloNumber.from_rational(-1)
    # cross-order equality: e^{2 pi i /2} as order-2 and order-6 element
    a = CycloNumber.from_phase(RationalPhase(1, 2))
    b = CycloNumber.from_phase(RationalPhase(3, 6))
    assert a == b
    assert a + b == CycloNumber.from_rational(-2)


def test_cyclo_conjugate_and_real_part():
    z5 = CycloNumber.from_phase(RationalPhase(1, 5))
    r = z5.real_part()
    assert r == r.conjugate()
    assert (z5 * z5.conjugate()) == CycloNumber.from_rational(1)
    twice = r + r
    assert twice == z5 + z5.conjugate()


def test_cyclo_to_complex_matches_cmath():
    rng = random.Random(11)
    for _ in range(20):
        order = rng.randrange(1, 30)
        a = rng.randrange(order)
        z = CycloNumber.from_phase(RationalPhase(a, order))
        expected = cmath.exp(2j * cmath.pi * RationalPhase(a, order).a / RationalPhase(a, order).N)
        assert abs(z.to_complex() - expected) < 1e-12


def test_laurent_arithmetic_and_evaluation():
    p = LaurentPoly({1: Fraction(1, 2), -1: Fraction(1, 2)})
    q = LaurentPoly({0: 3})
    assert (p + p).coeffs == {1: Fraction(1), -1: Fraction(1)}
    assert (p * q).coeffs == {1: Fraction(3, 2), -1: Fraction(3, 2)}
    assert p.t_derivative().coeffs == {1: Fraction(1, 2), -1: Fraction(-1, 2)}
    assert p.evaluate_at_one() == 1
    # at t = -1: (1/2)(-1) + (1/2)(-1) = -1
    assert p.evaluate(RationalPhase(1, 2)) == CycloNumber.from_rational(-1)
    # at t = i: (1/2)(i - i) = 0
    assert p.evaluate(RationalPhase(1, 4)).is_zero()


def test_laurent_derivative_kills_constants():
    c = LaurentPoly({0: Fraction(7)})
    assert c.t_derivative().is_zero()

from fractions import Fraction

import pytest

from zhathat import (
    BrieskornData,
    LaurentPoly,
    TripleError,
    alphas,
    chi_fn,
    delta,
    det_int,
    is_negative_definite,
    negative_continued_fraction,
    phi,
    phi_at_one,
    phi_prime,
    plumbing_tree,
    psi,
    validate_triple,
    w_class,
)


def test_validate_triple():
    assert validate_triple(2, 3, 5) == (2, 3, 5)
    for bad in [(3, 2, 5), (2, 2, 5), (2, 4, 6), (1, 2, 3), (2, 3, 9)]:
        with pytest.raises(TripleError):
            validate_triple(*bad)


def test_alphas_and_w():
    a, p = alphas((2, 3, 5))
    assert p == 30
    assert a == (-1, 11, 19, 31)
    assert w_class((2, 3, 5)) == 1
    a, p = alphas((2, 7, 15))
    assert p == 210
    assert a == (61, 89, 121, 149)
    assert w_class((2, 7, 15)) == 361


def test_negative_continued_fraction():
    assert negative_continued_fraction(5, 1) == [5]
    assert negative_continued_fraction(5, 3) == [2, 3]
    assert negative_continued_fraction(7, 5) == [2, 2, 3]
    # reconstruct the fraction to certify the expansion
    def rebuild(cs):
        val = Fraction(cs[-1])
        for c in reversed(cs[:-1]):
            val = c - 1 / val
        return val

    for num, den in [(5, 3), (12, 7), (29, 11), (15, 4)]:
        assert rebuild(negative_continued_fraction(num, den)) == Fraction(num, den)
    with pytest.raises(ValueError):
        negative_continued_fraction(3, 3)


def test_plumbing_tree_235_is_e8():
    graph, leaves, center = plumbing_tree((2, 3, 5))
    assert graph.size == 8
    assert all(w == -2 for w in graph.weights)
    degs = graph.degrees()
    assert degs[center] == 3
    assert sorted(degs) == [1, 1, 1, 2, 2, 2, 2, 3]
    assert leaves == (0, 1, 2)
    assert abs(det_int(graph.matrix())) == 1
    assert is_negative_definite(graph.matrix())


def test_plumbing_tree_other_triples():
    graph, _, center = plumbing_tree((2, 3, 7))
    assert graph.weights[center] == -1
    assert sorted(graph.weights) == [-7, -3, -2, -1]

    graph, leaves, center = plumbing_tree((3, 4, 5))
    assert graph.weights[center] == -1
    assert abs(det_int(graph.matrix())) == 1

    graph, leaves, center = plumbing_tree((2, 7, 15))
    assert graph.size == 6
    assert graph.weights[center] == -1
    assert abs(det_int(graph.matrix())) == 1


def test_delta_values():
    assert delta((2, 3, 5)) == Fraction(-181, 120)
    assert delta((2, 7, 15)) == Fraction(1739, 840)
    bd = BrieskornData.from_triple(2, 3, 5)
    assert bd.prefactor == Fraction(-3, 2)
    bd = BrieskornData.from_triple(2, 7, 15)
    assert bd.prefactor == Fraction(5, 2)


def test_phi_support_and_oddness():
    bd = BrieskornData.from_triple(2, 3, 5)
    assert phi(0, bd).is_zero()
    # support: n = +-alpha_k mod 2p
    supported = [n for n in range(1, 2 * bd.p + 1) if not phi(n, bd).is_zero()]
    assert supported == [1, 11, 19, 29, 31, 41, 49, 59]
    for n in range(1, 4 * bd.p):
        assert phi(-n, bd) == phi(n, bd) * Fraction(-1)


def test_phi_first_values_235():
    bd = BrieskornData.from_triple(2, 3, 5)
    # n=1 is -alpha_1 mod 60; shifted beta = 59, exponent (1+59)/60 = 1
    assert phi(1, bd) == LaurentPoly({1: Fraction(1, 2), -1: Fraction(1, 2)})
    assert phi_at_one(1, bd) == 1
    assert phi_at_one(11, bd) == 1
    assert phi_at_one(31, bd) == -1
    assert phi_at_one(59, bd) == -1


def test_phi_branch_never_ambiguous():
    for b in [(2, 3, 5), (2, 3, 7), (3, 4, 5), (2, 7, 15)]:
        bd = BrieskornData.from_triple(*b)
        for n in range(4 * bd.p):
            phi(n, bd)  # raises on ambiguity


def test_derivative_split_identity():
    # phi'(n;t) = n * psi(n;t) + chi(n;t) as exact Laurent polynomials
    for b in [(2, 3, 5), (2, 3, 7), (2, 7, 15)]:
        bd = BrieskornData.from_triple(*b)
        for n in range(10 * bd.p + 1):
            lhs = phi_prime(n, bd)
            rhs = psi(n, bd) * Fraction(n) + chi_fn(n, bd)
            assert lhs == rhs, (b, n)


def test_psi_chi_periodic_at_roots_of_unity():
    # as Laurent polynomials psi and chi shift exponents by j under
    # n -> n + 2pj, so they are periodic only after evaluation at a root
    # of unity of order j
    from zhathat import RationalPhase

    bd = BrieskornData.from_triple(2, 3, 5)
    for j in (1, 2, 3, 4):
        zeta = RationalPhase(1 % j, j)
        period = 2 * bd.p * j
        for n in range(period):
            assert psi(n + period, bd).evaluate(zeta) == psi(n, bd).evaluate(zeta)
            assert chi_fn(n + period, bd).evaluate(zeta) == chi_fn(n, bd).evaluate(zeta)

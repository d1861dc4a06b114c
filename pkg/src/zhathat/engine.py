"""The two series engines.

``zhathat_lattice`` evaluates the defining lattice sum for any
negative-definite plumbed pair (graph, spin^c representative) by exhaustive
enumeration inside an exact ellipsoid bound.  ``zhathat_closed_form`` uses
the Brieskorn-sphere coefficient functions.  Both produce the same QSeries
for Brieskorn spheres, which is the central cross-validation of the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .brieskorn import BrieskornData, phi, phi_prime
from .cyclotomic import CycloNumber
from .exact import RationalPhase, binomial
from .laurent import LaurentPoly
from .plumbing import PlumbingGraph, inverse_fraction, is_negative_definite
from .qseries import QSeries, QSeriesError


class EngineError(ValueError):
    pass


def fhat(n: int, r: int) -> Fraction:
    """Coefficient on z^{-r} in the (symmetrized) expansion of (z-z^{-1})^{2-n}.

    For n <= 2 this is a finite Laurent polynomial; for n >= 3 the standard
    piecewise binomial formula applies.
    """
    if n < 0:
        raise ValueError("vertex degree must be >= 0")
    if n == 0:
        return {0: Fraction(-2), 2: Fraction(1), -2: Fraction(1)}.get(r, Fraction(0))
    if n == 1:
        return {1: Fraction(-1), -1: Fraction(1)}.get(r, Fraction(0))
    if n == 2:
        return Fraction(1) if r == 0 else Fraction(0)
    if abs(r) < n - 2 or (r - n) % 2 != 0:
        return Fraction(0)
    sgn = 1 if r > 0 else -1
    return Fraction(sgn**n, 2) * binomial((n + abs(r)) // 2 - 2, n - 3)


def _vertex_options(degree: int):
    """Fixed (value, weight) support for degree <= 2 vertices, None if free."""
    if degree == 0:
        return [(-2, Fraction(1)), (0, Fraction(-2)), (2, Fraction(1))]
    if degree == 1:
        return [(-1, Fraction(1)), (1, Fraction(-1))]
    if degree == 2:
        return [(0, Fraction(1))]
    return None


def _theta_k(k, m_matrix) -> int:
    s = len(k)
    u_mu = sum(sum(row) for row in m_matrix)
    num = sum(k) - u_mu
    if num % 2:
        raise EngineError("k does not satisfy the parity constraint")
    return num // 2


def brieskorn_k(bd: BrieskornData) -> tuple:
    """The canonical spin^c representative: k = a + M*u with
    a = (1,1,1,1,0,...) in the (leaves, center, chains) vertex order."""
    m = bd.tree.matrix()
    s = bd.tree.size
    a = [1 if i < 4 else 0 for i in range(s)]
    mu = [sum(row) for row in m]
    return tuple(a[i] + mu[i] for i in range(s))


def parity_spinc(graph: PlumbingGraph) -> tuple:
    """k = a + M*u with a_i = deg_i mod 2 — a valid representative for any
    tree, and the unique spin^c class when the matrix is unimodular."""
    m = graph.matrix()
    degs = graph.degrees()
    mu = [sum(row) for row in m]
    return tuple((d % 2) + mi for d, mi in zip(degs, mu))


def term_exponents(ell, graph: PlumbingGraph, k) -> tuple:
    """Exact (q-exponent, t-exponent) of one lattice term.

    Errors if ell is not in the coset a + 2M Z^s (a = k - M*u).
    """
    m = graph.matrix()
    s = graph.size
    minv = inverse_fraction(m)
    mu = [sum(row) for row in m]
    a = [k[i] - mu[i] for i in range(s)]
    diff = [ell[i] - a[i] for i in range(s)]
    x = [
        sum(minv[i][j] * diff[j] for j in range(s)) / 2 for i in range(s)
    ]
    if any(xi.denominator != 1 for xi in x):
        raise EngineError("lattice vector is not in the spin^c coset")
    q_exp = Fraction(-(3 * s + sum(graph.weights)), 4) - _quad_form(minv, ell)
    t_exp = _theta_k(k, m) + (sum(ell) - sum(a)) // 2
    return q_exp, t_exp


def _quad_form(minv, ell) -> Fraction:
    """ell^T M^{-1} ell / 4 (a negative quantity for negative-definite M)."""
    total = Fraction(0)
    for i, li in enumerate(ell):
        if li:
            row = minv[i]
            total += li * sum(row[j] * lj for j, lj in enumerate(ell) if lj)
    return total / 4


def _isqrt_ceil(f: Fraction) -> int:
    if f < 0:
        return 0
    n = -(-f.numerator // f.denominator)
    return math.isqrt(n) + 1


def zhathat_lattice(
    graph: PlumbingGraph,
    k,
    cutoff: int,
    t: RationalPhase | None = None,
    derivative: bool = False,
) -> QSeries:
    """The lattice-sum series for (graph, [k]) through ``cutoff`` integer
    q-powers above the minimal exponent.

    ``t=None`` keeps Laurent-polynomial coefficients; a RationalPhase
    evaluates them.  ``derivative=True`` applies t*d/dt termwise.
    """
    if cutoff < 0:
        raise EngineError("cutoff must be >= 0")
    m = graph.matrix()
    if not is_negative_definite(m):
        raise EngineError("plumbing matrix is not negative definite")
    s = graph.size
    degs = graph.degrees()
    weights = graph.weights
    minv = inverse_fraction(m)
    mu = [sum(row) for row in m]
    a = [k[i] - mu[i] for i in range(s)]
    for i in range(s):
        if (a[i] - degs[i]) % 2:
            raise EngineError("spin^c representative has wrong parity")
    theta = _theta_k(k, m)
    a_dot_u = sum(a)
    base = Fraction(-(3 * s + sum(weights)), 4)

    fixed = [_vertex_options(d) for d in degs]
    free_idx = [i for i in range(s) if fixed[i] is None]

    def enumerate_terms(bound: Fraction):
        """Yield (quad, weight, t_exp) for all support vectors with
        -ell^T M^{-1} ell / 4 <= bound that lie in the coset."""
        free_ranges = []
        for i in free_idx:
            lim = _isqrt_ceil(4 * bound * (-weights[i]))
            lo = degs[i] - 2
            vals = [
                v
                for v in range(-lim, lim + 1)
                if abs(v) >= lo and (v - degs[i]) % 2 == 0
            ]
            free_ranges.append(vals)
        fixed_choices = [fixed[i] for i in range(s) if fixed[i] is not None]
        fixed_pos = [i for i in range(s) if fixed[i] is not None]
        for fixed_combo in product(*fixed_choices):
            wt_fixed = Fraction(1)
            for _, w in fixed_combo:
                wt_fixed *= w
            ell_base = [0] * s
            for pos, (v, _) in zip(fixed_pos, fixed_combo):
                ell_base[pos] = v
            for free_combo in product(*free_ranges):
                ell = list(ell_base)
                wt = wt_fixed
                for pos, v in zip(free_idx, free_combo):
                    ell[pos] = v
                    wt *= fhat(degs[pos], v)
                if not wt:
                    continue
                quad = -_quad_form(minv, ell)
                if quad > bound:
                    continue
                diff = [ell[i] - a[i] for i in range(s)]
                if any(d % 2 for d in diff):
                    continue
                x = [
                    sum(minv[i][j] * diff[j] for j in range(s)) / 2
                    for i in range(s)
                ]
                if any(xi.denominator != 1 for xi in x):
                    continue
                t_exp = theta + (sum(ell) - a_dot_u) // 2
                yield quad, wt, t_exp

    # locate the minimal exponent first, then enumerate fully
    probe = Fraction(max(4, s))
    qmin = None
    while qmin is None:
        found = [quad for quad, _, _ in enumerate_terms(probe)]
        if found:
            qmin = min(found)
        else:
            probe *= 4
    bound = qmin + cutoff

    symbolic = t is None
    acc: dict = {}
    for quad, wt, t_exp in enumerate_terms(bound):
        offset = quad - qmin
        if offset.denominator != 1:
            raise EngineError("non-integral exponent spread in lattice sum")
        e = int(offset)
        if e > cutoff:
            continue
        if derivative:
            wt = wt * t_exp
            if not wt:
                continue
        if symbolic:
            slot = acc.setdefault(e, {})
            slot[t_exp] = slot.get(t_exp, Fraction(0)) + wt
        else:
            slot = acc.setdefault(e, {})
            r = (t_exp * t.a) % t.N
            slot[r] = slot.get(r, Fraction(0)) + wt

    terms = {}
    for e, slot in acc.items():
        if symbolic:
            terms[e] = LaurentPoly(slot)
        else:
            terms[e] = CycloNumber(t.N, slot)
    return QSeries(base + qmin, terms, cutoff)


def zhathat_closed_form(
    bd: BrieskornData,
    cutoff: int,
    t: RationalPhase | None = None,
    derivative: bool = False,
) -> QSeries:
    """q^Delta * (C - sum_n phi(n;t) q^{n^2/4p}) through ``cutoff`` integer
    powers above the factored prefactor Delta + w/4p."""
    if cutoff < 0:
        raise EngineError("cutoff must be >= 0")
    four_p = 4 * bd.p
    symbolic = t is None

    poly_terms: dict = {}

    def add(e: int, poly: LaurentPoly):
        if poly.is_zero():
            return
        poly_terms[e] = poly_terms.get(e, LaurentPoly.zero()) + poly

    if bd.is_poincare:
        c_poly = LaurentPoly({1: 1, -1: -1} if derivative else {1: 1, -1: 1})
        add(0, c_poly)

    n_max_sq = bd.w + four_p * cutoff
    n = 1
    while n * n <= n_max_sq:
        poly = phi_prime(n, bd) if derivative else phi(n, bd)
        if not poly.is_zero():
            e, rem = divmod(n * n - bd.w, four_p)
            assert rem == 0, "supported n must satisfy n^2 = w mod 4p"
            add(e, -poly)
        n += 1

    if symbolic:
        terms = dict(poly_terms)
    else:
        terms = {e: poly.evaluate(t) for e, poly in poly_terms.items()}
    return QSeries(bd.prefactor, terms, cutoff)


def zhathat_gppv(bd_or_pair, cutoff: int) -> QSeries:
    """The t = 1 specialization (the one-variable GPPV series)."""
    one = RationalPhase(0, 1)
    if isinstance(bd_or_pair, BrieskornData):
        return zhathat_closed_form(bd_or_pair, cutoff, t=one)
    graph, k = bd_or_pair
    return zhathat_lattice(graph, k, cutoff, t=one)


def zhathat_derivative(bd_or_pair, cutoff: int, t: RationalPhase | None = None) -> QSeries:
    """t*d/dt of the series, computed termwise in either engine."""
    if isinstance(bd_or_pair, BrieskornData):
        return zhathat_closed_form(bd_or_pair, cutoff, t=t, derivative=True)
    graph, k = bd_or_pair
    return zhathat_lattice(graph, k, cutoff, t=t, derivative=True)


def normalize(series: QSeries) -> QSeries:
    """Shift the prefactor so stored exponents are integers starting at 0."""
    return series.normalized()

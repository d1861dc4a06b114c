"""Brieskorn-sphere data: plumbing tree, arithmetic constants, and the
closed-form Laurent coefficient functions of the two-variable series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .plumbing import (
    PlumbingGraph,
    det_int,
    is_negative_definite,
    vertex_deleted_h,
)


class TripleError(ValueError):
    """Invalid Brieskorn triple."""


def validate_triple(b1: int, b2: int, b3: int) -> tuple:
    """Accept exactly the ordered, pairwise coprime triples with b1 > 1."""
    b = (int(b1), int(b2), int(b3))
    if not (1 < b[0] < b[1] < b[2]):
        raise TripleError(f"need 1 < b1 < b2 < b3, got {b}")
    for i in range(3):
        for j in range(i + 1, 3):
            if math.gcd(b[i], b[j]) != 1:
                raise TripleError(f"gcd({b[i]}, {b[j]}) != 1")
    return b


def alphas(b: tuple) -> tuple:
    """The four signed combinations of pairwise products, and p = b1*b2*b3."""
    b1, b2, b3 = b
    p = b1 * b2 * b3
    a1 = p - b1 * b2 - b1 * b3 - b2 * b3
    a2 = p + b1 * b2 - b1 * b3 - b2 * b3
    a3 = p - b1 * b2 + b1 * b3 - b2 * b3
    a4 = p + b1 * b2 + b1 * b3 - b2 * b3
    return (a1, a2, a3, a4), p


def w_class(b: tuple) -> int:
    """Common residue of all alpha_k^2 mod 4p; checks the four agree."""
    alpha, p = alphas(b)
    residues = {a * a % (4 * p) for a in alpha}
    if len(residues) != 1:
        raise AssertionError(f"alpha_k^2 classes disagree mod 4p for {b}: {residues}")
    return residues.pop()


def negative_continued_fraction(num: int, den: int) -> list:
    """Expansion num/den = c1 - 1/(c2 - 1/(...)) with all c_i >= 2."""
    if not (0 < den < num):
        raise ValueError("need 0 < den < num")
    out = []
    while den:
        c = -(-num // den)  # ceil
        out.append(c)
        num, den = den, c * den - num
    return out


def plumbing_tree(b: tuple) -> tuple:
    """Star-shaped plumbing tree for the triple, with the vertex order
    (leaf1, leaf2, leaf3, center, interior chain vertices).

    Leg data: for each i, omega_i is the residue with
    (p/b_i)*omega_i = -1 mod b_i, the leg weights come from the negative
    continued fraction of b_i/omega_i, and the central weight makes the
    total rational Euler number -1/p.  The construction is certified by
    its postconditions: star shape, negative definite, |det| = 1.

    Returns (graph, leaf_indices, center_index).
    """
    b1, b2, b3 = b
    p = b1 * b2 * b3
    omegas = []
    for bi in b:
        q = p // bi
        omega = (-pow(q, -1, bi)) % bi
        if omega == 0:
            raise TripleError(f"degenerate leg for b_i={bi}")
        omegas.append(omega)
    total = sum(omega * (p // bi) for omega, bi in zip(omegas, b))
    if (-1 - total) % p != 0:
        raise AssertionError("central weight is not integral")
    center_weight = (-1 - total) // p

    legs = [negative_continued_fraction(bi, omega) for bi, omega in zip(b, omegas)]
    # order: leaves (outermost leg vertices) first, then center, then the
    # interior leg vertices from the center outward, leg by leg
    s = 3 + 1 + sum(len(leg) - 1 for leg in legs)
    weights = [0] * s
    edges = []
    center = 3
    weights[center] = center_weight
    next_idx = 4
    leaf_indices = []
    for leg_no, leg in enumerate(legs):
        # leg weights from center outward are -c1, -c2, ..., -ck (leaf)
        chain = [-c for c in leg]
        prev = center
        for depth, wgt in enumerate(chain):
            last = depth == len(chain) - 1
            if last:
                idx = leg_no
            else:
                idx = next_idx
                next_idx += 1
            weights[idx] = wgt
            edges.append((prev, idx))
            prev = idx
        leaf_indices.append(leg_no)

    graph = PlumbingGraph(weights, edges)
    matrix = graph.matrix()
    degs = graph.degrees()
    if degs[center] != 3 or sorted(degs).count(1) != 3:
        raise AssertionError("tree is not a three-leg star")
    if abs(det_int(matrix)) != 1:
        raise AssertionError(f"plumbing tree for {b} is not unimodular")
    if not is_negative_definite(matrix):
        raise AssertionError(f"plumbing tree for {b} is not negative definite")
    return graph, tuple(leaf_indices), center


def _delta(b: tuple) -> Fraction:
    graph, leaves, _center = plumbing_tree(b)
    matrix = graph.matrix()
    b1, b2, b3 = b
    h_sum = sum(vertex_deleted_h(matrix, i) for i in leaves)
    return Fraction(1, 4) * (
        Fraction(h_sum)
        - 3 * graph.size
        - sum(graph.weights)
        - Fraction(b2 * b3, b1)
        - Fraction(b1 * b3, b2)
        - Fraction(b1 * b2, b3)
    )


@dataclass(frozen=True)
class BrieskornData:
    """All derived constants for one Brieskorn triple."""

    b: tuple
    p: int
    alpha: tuple
    delta: Fraction
    w: int
    tree: PlumbingGraph
    leaf_indices: tuple
    center_index: int

    @classmethod
    def from_triple(cls, b1: int, b2: int, b3: int) -> "BrieskornData":
        return _brieskorn_data(validate_triple(b1, b2, b3))

    @property
    def is_poincare(self) -> bool:
        return self.b == (2, 3, 5)

    @property
    def prefactor(self) -> Fraction:
        """Exponent of the factored-out rational power of q: delta + w/4p."""
        return self.delta + Fraction(self.w, 4 * self.p)


@lru_cache(maxsize=None)
def _brieskorn_data(b: tuple) -> BrieskornData:
    alpha, p = alphas(b)
    tree, leaves, center = plumbing_tree(b)
    return BrieskornData(
        b=b,
        p=p,
        alpha=alpha,
        delta=_delta(b),
        w=w_class(b),
        tree=tree,
        leaf_indices=leaves,
        center_index=center,
    )


def delta(b: tuple) -> Fraction:
    return _brieskorn_data(validate_triple(*b)).delta


# -- the coefficient functions ----------------------------------------------


def _match_branch(n: int, bd: BrieskornData):
    """Which residue class n falls in: (k, sign) with n = sign*alpha_k mod 2p,
    or None.  Errors if two classes match (cannot happen for coprime data).
    """
    two_p = 2 * bd.p
    hits = []
    for k, a in enumerate(bd.alpha, start=1):
        if (n - a) % two_p == 0:
            hits.append((k, +1))
        if (n + a) % two_p == 0:
            hits.append((k, -1))
    if not hits:
        return None
    if len(hits) > 1:
        raise AssertionError(f"ambiguous residue branch for n={n}, b={bd.b}: {hits}")
    return hits[0]


def _shifted_alpha(bd: BrieskornData, k: int) -> int:
    if k == 1:
        return bd.alpha[0] + 2 * bd.p
    if k == 4:
        return bd.alpha[3] - 2 * bd.p
    return bd.alpha[k - 1]


def phi(n: int, bd: BrieskornData) -> LaurentPoly:
    """The Laurent coefficient of q^{n^2/4p} in the closed form (sign
    included as stated; the series itself carries an extra global minus).
    """
    branch = _match_branch(n, bd)
    if branch is None:
        return LaurentPoly.zero()
    k, sign = branch
    beta = _shifted_alpha(bd, k)
    # exponents (-sign*n + beta)/2p and (sign*n - beta)/2p are integers here
    e1, rem = divmod(-sign * n + beta, 2 * bd.p)
    assert rem == 0
    outer = Fraction(1, 2) if k in (2, 3) else Fraction(-1, 2)
    outer *= sign
    return LaurentPoly({e1: outer}) + LaurentPoly({-e1: outer})


def phi_at_one(n: int, bd: BrieskornData) -> Fraction:
    return phi(n, bd).evaluate_at_one()


def phi_prime(n: int, bd: BrieskornData) -> LaurentPoly:
    """t*d/dt of phi(n; t)."""
    return phi(n, bd).t_derivative()


def psi(n: int, bd: BrieskornData) -> LaurentPoly:
    """Even 2pj-periodic part of the derivative split: phi' = n*psi + chi."""
    branch = _match_branch(n, bd)
    if branch is None:
        return LaurentPoly.zero()
    k, sign = branch
    beta = _shifted_alpha(bd, k)
    e1 = (-sign * n + beta) // (2 * bd.p)
    outer = Fraction(-1, 4 * bd.p) if k in (2, 3) else Fraction(1, 4 * bd.p)
    return LaurentPoly({e1: outer}) + LaurentPoly({-e1: -outer})


def chi_fn(n: int, bd: BrieskornData) -> LaurentPoly:
    """Odd 2pj-periodic part of the derivative split: phi' = n*psi + chi."""
    branch = _match_branch(n, bd)
    if branch is None:
        return LaurentPoly.zero()
    k, sign = branch
    beta = _shifted_alpha(bd, k)
    e1 = (-sign * n + beta) // (2 * bd.p)
    if k in (2, 3):
        outer = Fraction(sign * bd.alpha[k - 1], 4 * bd.p)
    else:
        outer = Fraction(-sign * beta, 4 * bd.p)
    return LaurentPoly({e1: outer}) + LaurentPoly({-e1: -outer})

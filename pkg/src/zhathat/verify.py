"""Named property suites, shared by the CLI ``check`` subcommand and the
test suite.  Every suite returns {"name", "passed", "details"} and is
deterministic under a fixed seed.
"""

from __future__ import annotations

import math
import random

from .brieskorn import BrieskornData, alphas, phi, w_class
from .cyclotomic import CycloNumber
from .engine import parity_spinc, zhathat_lattice
from .exact import RationalPhase
from .limits import asymptotic_check
from .plumbing import blow_up_edge, blow_up_vertex


def _random_coprime_triple(rng: random.Random, b3_max: int = 200) -> tuple:
    while True:
        b1 = rng.randrange(2, b3_max - 1)
        b2 = rng.randrange(b1 + 1, b3_max)
        b3 = rng.randrange(b2 + 1, b3_max + 1)
        if math.gcd(b1, b2) == 1 and math.gcd(b1, b3) == 1 and math.gcd(b2, b3) == 1:
            return (b1, b2, b3)


def suite_alphas(seed: int = 0, count: int = 100) -> dict:
    """alpha_k^2 fall in one common class mod 4p on random coprime triples."""
    rng = random.Random(seed)
    failures = []
    triples = [_random_coprime_triple(rng) for _ in range(count)]
    for b in triples:
        alpha, p = alphas(b)
        residues = {a * a % (4 * p) for a in alpha}
        if len(residues) != 1:
            failures.append({"triple": b, "residues": sorted(residues)})
    return {
        "name": "alphas",
        "passed": not failures,
        "details": {"count": count, "seed": seed, "failures": failures},
    }


def suite_periodicity(
    triples=((2, 3, 5), (2, 3, 7)), orders=(1, 2, 3, 4, 6)
) -> dict:
    """phi(.; zeta) is 2pj-periodic with exact mean zero over one period,
    for zeta of each given order j."""
    failures = []
    for b in triples:
        bd = BrieskornData.from_triple(*b)
        for j in orders:
            zeta = RationalPhase(1 % j, j)
            period = 2 * bd.p * j
            total = CycloNumber.zero()
            for n in range(period):
                v = phi(n, bd).evaluate(zeta)
                total = total + v
                if v != phi(n + period, bd).evaluate(zeta):
                    failures.append({"triple": b, "order": j, "n": n, "kind": "period"})
            if not total.is_zero():
                failures.append({"triple": b, "order": j, "kind": "mean"})
    return {
        "name": "periodicity",
        "passed": not failures,
        "details": {"triples": list(triples), "orders": list(orders), "failures": failures},
    }


def suite_lemma61(triples=((2, 3, 5), (2, 3, 7), (2, 7, 15)), j_max: int = 6) -> dict:
    """For 0 <= n < 2pj with phi(n) != 0: n^2 = w + 4p*i mod 4pj for some
    0 <= i < j.  Exhaustive over each period."""
    failures = []
    for b in triples:
        bd = BrieskornData.from_triple(*b)
        four_p = 4 * bd.p
        for j in range(1, j_max + 1):
            mod = four_p * j
            classes = {(bd.w + four_p * i) % mod for i in range(j)}
            for n in range(2 * bd.p * j):
                if not phi(n, bd).is_zero() and (n * n) % mod not in classes:
                    failures.append({"triple": b, "j": j, "n": n})
    return {
        "name": "lemma61",
        "passed": not failures,
        "details": {"triples": list(triples), "j_max": j_max, "failures": failures},
    }


def neumann_pairs() -> list:
    """Built-in (graph, blown-up graph, label) pairs related by one blow-up."""
    e8 = BrieskornData.from_triple(2, 3, 5).tree
    t237 = BrieskornData.from_triple(2, 3, 7).tree
    return [
        (e8, blow_up_vertex(e8, 0), "E8 / leaf blow-up"),
        (t237, blow_up_edge(t237, (0, 3)), "(2,3,7) tree / edge blow-up"),
    ]


def suite_neumann(cutoff: int = 40) -> dict:
    """Lattice series (symbolic t) is unchanged under a (-1) blow-up."""
    failures = []
    checked = []
    for small, big, label in neumann_pairs():
        a = zhathat_lattice(small, parity_spinc(small), cutoff)
        b = zhathat_lattice(big, parity_spinc(big), cutoff)
        checked.append(label)
        if not a.agrees_with(b):
            failures.append({"pair": label})
    return {
        "name": "neumann",
        "passed": not failures,
        "details": {"cutoff": cutoff, "pairs": checked, "failures": failures},
    }


def suite_asymptotic(
    triples=((2, 3, 5), (2, 3, 7)),
    r_values=(0, 1, 2, 3),
    t_grid=(0.02, 0.01, 0.005),
) -> dict:
    """Remainder of the order-R expansion scales at least like t^{R+1/2}
    at zeta = xi = 1.

    The default grid sits inside the asymptotic regime: successive expansion
    terms shrink by ~2(2r+1)(M/2pi)^2 t/4p per order, so t must be well
    below ~0.05 for the order-3 remainder to be dominated by its leading
    term on these periods.
    """
    one = RationalPhase(0, 1)
    reports = []
    failures = []
    for b in triples:
        bd = BrieskornData.from_triple(*b)
        for r in r_values:
            rep = asymptotic_check(bd, one, one, r, t_grid)
            reports.append(rep)
            if not rep["passed"]:
                failures.append(
                    {"triple": b, "R": r, "fitted_order": rep["fitted_order"]}
                )
    return {
        "name": "asymptotic",
        "passed": not failures,
        "details": {"reports": reports, "failures": failures},
    }


SUITES = {
    "alphas": suite_alphas,
    "periodicity": suite_periodicity,
    "lemma61": suite_lemma61,
    "neumann": suite_neumann,
    "asymptotic": suite_asymptotic,
}


def run_suite(name: str, seed: int | None = None) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    if name == "alphas" and seed is not None:
        return suite_alphas(seed=seed)
    return SUITES[name]()

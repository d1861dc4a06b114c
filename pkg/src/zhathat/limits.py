"""Radial limits at pairs of roots of unity, L-values of mean-zero periodic
sequences via Bernoulli sums, and the asymptotic-expansion harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .brieskorn import BrieskornData, chi_fn, phi, psi
from .cyclotomic import CycloNumber
from .exact import RationalPhase, bernoulli_poly
from .laurent import LaurentPoly
from .qseries import QSeries
from .engine import zhathat_closed_form


class LimitError(ValueError):
    pass


@dataclass(frozen=True)
class PeriodicSequence:
    """Periodic map Z -> Q(zeta) with exact mean value zero over a period.

    values[i] is the value at n = i + 1; residues run 1..period inclusive.
    """

    period: int
    values: tuple

    def __post_init__(self):
        if self.period != len(self.values):
            raise LimitError("period does not match number of values")
        total = CycloNumber.zero()
        for v in self.values:
            total = total + v
        if not total.is_zero():
            raise LimitError("periodic sequence does not have mean value zero")

    def value(self, n: int) -> CycloNumber:
        return self.values[(n - 1) % self.period]

    def is_antisymmetric(self) -> bool:
        """C(period - n) == -C(n) for all n."""
        m = self.period
        return all(self.value(m - n) == -self.value(n) for n in range(1, m + 1))

    def scaled(self, factor) -> "PeriodicSequence":
        return PeriodicSequence(self.period, tuple(v * factor for v in self.values))

    def doubled_period(self) -> "PeriodicSequence":
        return PeriodicSequence(2 * self.period, self.values + self.values)


def xi_fractional_power(xi: RationalPhase, exponent: Fraction) -> RationalPhase:
    """xi^exponent under the fixed convention: the phase (a * exponent) / N."""
    return RationalPhase.from_fraction(Fraction(xi.a) * Fraction(exponent) / xi.N)


def build_C(
    bd: BrieskornData,
    zeta: RationalPhase,
    xi: RationalPhase,
    coeff_fn=None,
    antisymmetric: bool = True,
) -> PeriodicSequence:
    """The sequence n -> phi(n; zeta) * xi^{n^2/4p}, period 2*p*j*K.

    ``coeff_fn`` may replace phi by another Laurent-coefficient function
    with the same periodicity; set ``antisymmetric=False`` for an even one
    (the sequence is then checked to be symmetric instead).
    """
    if coeff_fn is None:
        coeff_fn = phi
    j, big_k = zeta.N, xi.N
    period = 2 * bd.p * j * big_k
    four_p = 4 * bd.p
    values = []
    for n in range(1, period + 1):
        poly = coeff_fn(n, bd)
        if poly.is_zero():
            values.append(CycloNumber.zero())
            continue
        factor = CycloNumber.from_phase(
            xi_fractional_power(xi, Fraction(n * n, four_p))
        )
        values.append(poly.evaluate(zeta) * factor)
    seq = PeriodicSequence(period, tuple(values))
    if antisymmetric:
        if not seq.is_antisymmetric():
            raise AssertionError("series coefficient sequence lost antisymmetry")
    else:
        if any(seq.value(period - n) != seq.value(n) for n in range(1, period + 1)):
            raise AssertionError("series coefficient sequence lost symmetry")
    return seq


@dataclass(frozen=True)
class LSeriesValue:
    r: int
    value: CycloNumber


def l_value(seq: PeriodicSequence, r: int) -> LSeriesValue:
    """L(-r, C) as the exact finite Bernoulli sum
    -(M^r/(r+1)) * sum_{n=1..M} C(n) B_{r+1}(n/M)."""
    if r < 0:
        raise ValueError("need r >= 0")
    m = seq.period
    total = CycloNumber.zero()
    for n in range(1, m + 1):
        c = seq.values[n - 1]
        if c.is_zero():
            continue
        total = total + c * bernoulli_poly(r + 1, Fraction(n, m))
    scale = Fraction(-(m**r), r + 1)
    return LSeriesValue(r, total * scale)


def asymptotic_coeffs(seq: PeriodicSequence, R: int) -> list:
    """[L(0,C), L(-2,C), ..., L(-2R,C)], exact."""
    return [l_value(seq, 2 * r) for r in range(R + 1)]


def _poincare_constant(
    bd: BrieskornData, zeta: RationalPhase, xi: RationalPhase, derivative: bool
) -> CycloNumber:
    """Limit of the exceptional q^{1/120} constant term, zero off (2,3,5)."""
    if not bd.is_poincare:
        return CycloNumber.zero()
    z = CycloNumber.from_phase(zeta)
    pair = z - z.conjugate() if derivative else z + z.conjugate()
    return CycloNumber.from_phase(xi_fractional_power(xi, Fraction(1, 120))) * pair


def radial_limit(bd: BrieskornData, zeta: RationalPhase, xi: RationalPhase) -> CycloNumber:
    """Exact value of lim_{t->0} of the series at (zeta, xi e^{-t}):
    xi^Delta * (D - L(0, C))."""
    seq = build_C(bd, zeta, xi)
    d_term = _poincare_constant(bd, zeta, xi, derivative=False)
    prefactor = CycloNumber.from_phase(xi_fractional_power(xi, bd.delta))
    return prefactor * (d_term - l_value(seq, 0).value)


def radial_limit_derivative(
    bd: BrieskornData, zeta: RationalPhase, xi: RationalPhase
) -> CycloNumber:
    """Radial limit of the t-derivative series.

    The derivative coefficient phi'(n; t) splits as n*psi(n; t) + chi(n; t)
    with psi even and chi odd in n; evaluated at a root of unity zeta both
    factors are periodic (phi' itself is not, because its Laurent exponent
    shifts along a period).  The Gaussian-weighted sum of n*psi(n)xi^{n^2/4p}
    converges to L(-1) of the psi-sequence, and the chi part to L(0), so the
    limit is xi^Delta * (D' - L(-1, B_psi) - L(0, C_chi))."""
    b_psi = build_C(bd, zeta, xi, coeff_fn=psi, antisymmetric=False)
    c_chi = build_C(bd, zeta, xi, coeff_fn=chi_fn)
    d_term = _poincare_constant(bd, zeta, xi, derivative=True)
    prefactor = CycloNumber.from_phase(xi_fractional_power(xi, bd.delta))
    tail = l_value(b_psi, 1).value + l_value(c_chi, 0).value
    return prefactor * (d_term - tail)


# -- numeric harnesses ------------------------------------------------------


def numeric_series_eval(series: QSeries, q: complex, terms: int | None = None) -> complex:
    """Partial sum of the series at a complex point with |q| < 1.

    The fractional prefactor power uses the principal branch; radial
    evaluation toward a root of unity should go through
    :func:`eval_along_ray`, which applies the exact phase convention.
    """
    if abs(q) >= 1:
        raise LimitError("need |q| < 1")
    exps = sorted(series.terms)
    if terms is not None:
        exps = exps[:terms]
    total = 0j
    for e in exps:
        c = series.terms[e]
        if isinstance(c, LaurentPoly):
            raise LimitError("evaluate t before numeric q-evaluation")
        z = c.to_complex() if isinstance(c, CycloNumber) else complex(Fraction(c))
        total += z * q**e
    rho = series.prefactor
    return complex(q) ** float(rho) * total


def eval_along_ray(series: QSeries, xi: RationalPhase, t: float) -> complex:
    """Value at q = xi * e^{-t}, with every rational power q^rho read as
    xi^rho e^{-t rho} under the package's phase convention."""
    if t <= 0:
        raise LimitError("need t > 0")
    rho = series.prefactor
    pre_phase = xi_fractional_power(xi, rho)
    total = 0j
    two_pi = 2 * math.pi
    for e, c in series.terms.items():
        if isinstance(c, LaurentPoly):
            raise LimitError("evaluate t before numeric q-evaluation")
        z = c.to_complex() if isinstance(c, CycloNumber) else complex(Fraction(c))
        angle = two_pi * ((xi.a * e) % xi.N) / xi.N
        total += z * complex(math.cos(angle), math.sin(angle)) * math.exp(-t * e)
    pre = complex(
        math.cos(two_pi * pre_phase.a / pre_phase.N),
        math.sin(two_pi * pre_phase.a / pre_phase.N),
    ) * math.exp(-t * float(rho))
    return pre * total


def radial_series_value(
    bd: BrieskornData,
    zeta: RationalPhase,
    xi: RationalPhase,
    t: float,
    tail_tol: float = 1e-4,
) -> complex:
    """Numeric value of the series at (zeta, xi e^{-t}), truncated so the
    geometric tail bound is below ``tail_tol``."""
    cutoff = int((math.log(1 / tail_tol) + math.log(1 / -math.expm1(-t))) / t) + 1
    series = zhathat_closed_form(bd, cutoff, t=zeta)
    return eval_along_ray(series, xi, t)


def radial_limit_consistency(
    bd: BrieskornData,
    zeta: RationalPhase,
    xi: RationalPhase,
    t: float = 1e-3,
    tail_tol: float = 1e-6,
) -> dict:
    """Consistency of the exact radial limit with the numeric series value
    on the ray q = xi e^{-t}.

    The series value at finite t differs from its limit by an intrinsic
    first-order term t * |L(-2,C)| / 4p (up to ~3.5e-2 at t = 1e-3 for the
    survey triples), so the raw single-point gap cannot certify the limit
    to 1e-2.  Instead the exact first-order ray correction is removed:
    both L(0,C) (the limit) and L(-2,C) enter the prediction, and the
    residual gap is O(t^2).  A wrong limit value would still show up at
    full size.
    """
    exact = radial_limit(bd, zeta, xi).to_complex()
    numeric = radial_series_value(bd, zeta, xi, t, tail_tol)
    seq = build_C(bd, zeta, xi)
    l0 = l_value(seq, 0).value.to_complex()
    l2 = l_value(seq, 2).value.to_complex()
    d_c = _poincare_constant(bd, zeta, xi, derivative=False).to_complex()
    delta = float(bd.delta)
    xi_delta = CycloNumber.from_phase(xi_fractional_power(xi, bd.delta)).to_complex()
    tp = t / (4 * bd.p)
    prediction = (
        xi_delta
        * math.exp(-t * delta)
        * (d_c * math.exp(-t / 120) - (l0 - l2 * tp))
    )
    return {
        "triple": bd.b,
        "zeta": str(zeta),
        "xi": str(xi),
        "t": t,
        "exact_limit": exact,
        "numeric": numeric,
        "raw_gap": abs(numeric - exact),
        "gap": abs(numeric - prediction),
    }


def asymptotic_check(
    bd: BrieskornData,
    zeta: RationalPhase,
    xi: RationalPhase,
    R: int,
    t_grid,
    dps: int = 40,
) -> dict:
    """Compare the Gaussian-weighted sum against its order-R expansion on a
    grid of t values and estimate the empirical remainder order.

    PASS requires the fitted order between the two smallest t values to be
    at least R + 0.5 (degenerate all-zero remainders also pass).
    """
    t_grid = sorted(float(t) for t in t_grid)
    if not t_grid or t_grid[0] <= 0 or t_grid[-1] > 0.5:
        raise LimitError("t grid must lie in (0, 0.5]")
    if R > 6:
        raise LimitError("R <= 6 supported")
    seq = build_C(bd, zeta, xi)
    four_p = 4 * bd.p
    l_vals = asymptotic_coeffs(seq, R)
    with mpmath.workdps(dps):
        c_complex = [v.to_mpc(dps) for v in seq.values]
        l_complex = [v.value.to_mpc(dps) for v in l_vals]
        rows = []
        tail_target = mpmath.mpf("1e-14")
        for t in t_grid:
            tp = mpmath.mpf(t) / four_p
            n_max = int(mpmath.sqrt(mpmath.log(1 / tail_target) / tp)) + seq.period
            if n_max > 2_000_000:
                raise LimitError("t too small for the numeric sum; use larger t")
            numeric = mpmath.mpc(0)
            for n in range(1, n_max + 1):
                c = c_complex[(n - 1) % seq.period]
                if c:
                    numeric += c * mpmath.e ** (-(n * n) * tp)
            expansion = mpmath.mpc(0)
            for r in range(R + 1):
                expansion += l_complex[r] * (-tp) ** r / mpmath.factorial(r)
            remainder = abs(numeric - expansion)
            rows.append(
                {
                    "t": t,
                    "numeric": complex(numeric),
                    "expansion": complex(expansion),
                    "remainder": float(remainder),
                }
            )
        orders = []
        for a, b in zip(rows[:-1], rows[1:]):
            # rows sorted by increasing t; order from the ratio of remainders
            if a["remainder"] == 0 or b["remainder"] == 0:
                orders.append(float("inf"))
            else:
                orders.append(
                    math.log(b["remainder"] / a["remainder"]) / math.log(b["t"] / a["t"])
                )
    fitted = orders[0] if orders else float("inf")
    return {
        "triple": bd.b,
        "zeta": str(zeta),
        "xi": str(xi),
        "R": R,
        "rows": list(reversed(rows)),
        "orders": orders,
        "fitted_order": fitted,
        "passed": fitted >= R + 0.5,
    }

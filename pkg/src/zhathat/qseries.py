"""Sparse q-series with a rational prefactor exponent and integer offsets.

A QSeries means q^prefactor * sum_e coeff_e * q^e with integer e >= 0 after
normalization.  Coefficients are LaurentPoly (symbolic t) or CycloNumber
(t evaluated at a root of unity); a truncation bound is carried along so
comparisons know how far the series is trustworthy.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloNumber
from .laurent import LaurentPoly


class QSeriesError(ValueError):
    pass


def _is_zero_coeff(c) -> bool:
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    if isinstance(c, CycloNumber):
        return c.is_zero()
    return not c


class QSeries:
    __slots__ = ("prefactor", "terms", "cutoff")

    def __init__(self, prefactor, terms: dict, cutoff: int):
        object.__setattr__(self, "prefactor", Fraction(prefactor))
        clean = {}
        for e, c in terms.items():
            if not _is_zero_coeff(c):
                clean[int(e)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "cutoff", int(cutoff))

    def __setattr__(self, *args):
        raise AttributeError("QSeries is immutable")

    def is_symbolic(self) -> bool:
        return any(isinstance(c, LaurentPoly) for c in self.terms.values())

    def total_exponents(self) -> dict:
        """Map absolute q-exponent (Fraction) -> coefficient."""
        return {self.prefactor + e: c for e, c in self.terms.items()}

    def normalized(self) -> "QSeries":
        """Shift so stored exponents are integers starting at 0."""
        if not self.terms:
            return self
        low = min(self.terms)
        if low == 0:
            return self
        return QSeries(
            self.prefactor + low,
            {e - low: c for e, c in self.terms.items()},
            self.cutoff - low,
        )

    def with_prefactor(self, prefactor) -> "QSeries":
        """Re-express with the given prefactor; offsets must stay integral."""
        shift = self.prefactor - Fraction(prefactor)
        if shift.denominator != 1:
            raise QSeriesError("non-integral exponent shift")
        s = int(shift)
        return QSeries(
            Fraction(prefactor),
            {e + s: c for e, c in self.terms.items()},
            self.cutoff + s,
        )

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a = self.total_exponents()
        b = other.total_exponents()
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] for k in a)

    __hash__ = None

    def agrees_with(self, other: "QSeries", through=None) -> bool:
        """Exact equality of all terms with absolute exponent <= bound, where
        the bound defaults to the smaller truncation horizon."""
        if through is None:
            through = min(self.prefactor + self.cutoff, other.prefactor + other.cutoff)
        a = {k: v for k, v in self.total_exponents().items() if k <= through}
        b = {k: v for k, v in other.total_exponents().items() if k <= through}
        if set(a) != set(b):
            return False
        return all(a[k] == b[k] for k in a)

    def map_coeffs(self, fn) -> "QSeries":
        return QSeries(self.prefactor, {e: fn(c) for e, c in self.terms.items()}, self.cutoff)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        terms = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if isinstance(c, LaurentPoly):
                coeff = {str(te): str(tc) for te, tc in sorted(c.coeffs.items())}
            elif isinstance(c, CycloNumber):
                z = c.to_complex()
                coeff = {"re": z.real, "im": z.imag}
            else:
                coeff = {"0": str(Fraction(c))}
            terms.append({"exp": e, "coeff": coeff})
        return {"prefactor": str(self.prefactor), "terms": terms, "cutoff": self.cutoff}

    def __repr__(self):
        head = ", ".join(f"q^{e}: {c}" for e, c in sorted(self.terms.items())[:6])
        return f"QSeries(q^{self.prefactor} * [{head}...], cutoff={self.cutoff})"

"""Sparse Laurent polynomials in one variable t over exact rationals."""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloNumber
from .exact import RationalPhase


class LaurentPoly:
    """Finitely supported map integer exponent -> Fraction; no stored zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: Fraction(value)})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -Fraction(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return LaurentPoly({e: c * f for e, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def t_derivative(self) -> "LaurentPoly":
        """The operator t*d/dt, applied termwise: c*t^e -> e*c*t^e."""
        return LaurentPoly({e: e * c for e, c in self.coeffs.items()})

    def evaluate(self, zeta: RationalPhase) -> CycloNumber:
        """Value at t = zeta as a CycloNumber of order dividing zeta.N."""
        raw = {}
        for e, c in self.coeffs.items():
            r = (e * zeta.a) % zeta.N
            raw[r] = raw.get(r, Fraction(0)) + c
        return CycloNumber(zeta.N, raw)

    def evaluate_at_one(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"({c})*t")
            else:
                parts.append(f"({c})*t^{e}")
        return " + ".join(parts)

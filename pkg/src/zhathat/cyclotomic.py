"""Exact cyclotomic-field arithmetic with a canonical normal form.

A :class:`CycloNumber` of order N is an element of Q(zeta_N), stored on the
power basis {zeta_N^r : 0 <= r < phi(N)} after reduction modulo the N-th
cyclotomic polynomial.  Canonical coordinates make equality decidable
coordinatewise; numbers of different orders are lifted to the lcm order
before combining.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath

from .exact import RationalPhase


def euler_phi(n: int) -> int:
    if n <= 0:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_int(num: list, den: list) -> tuple:
    """Exact division of integer polynomials (dense, lowest degree first)."""
    num = list(num)
    dlead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coeff = num[i + len(den) - 1]
        if coeff % dlead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = coeff // dlead
        out[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder in cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1  # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    return tuple(_poly_divmod_int(num, den))


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple:
    """For each exponent e in [phi(n), n), the canonical coordinates of zeta_n^e.

    Returned as a tuple of dicts {r: Fraction} indexed by e - phi(n).
    """
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    # zeta^phi = -sum_{r<phi} cyc[r] * zeta^r   (cyc is monic of degree phi)
    rows = []
    prev = {r: Fraction(-cyc[r]) for r in range(phi) if cyc[r]}
    rows.append(dict(prev))
    for _ in range(phi + 1, n):
        nxt = {}
        for r, c in prev.items():
            if r + 1 < phi:
                nxt[r + 1] = nxt.get(r + 1, Fraction(0)) + c
            else:
                for rr, cc in rows[0].items():
                    nxt[rr] = nxt.get(rr, Fraction(0)) + c * cc
        prev = {r: c for r, c in nxt.items() if c}
        rows.append(dict(prev))
    return tuple(rows)


def _canonicalize(order: int, raw: dict) -> dict:
    """Reduce {exponent: Fraction} (any integer exponents) to canonical coords."""
    phi = euler_phi(order)
    table = None
    out = {}
    for e, c in raw.items():
        if not c:
            continue
        e %= order
        if e < phi:
            out[e] = out.get(e, Fraction(0)) + c
        else:
            if table is None:
                table = _reduction_table(order)
            for r, cc in table[e - phi].items():
                out[r] = out.get(r, Fraction(0)) + c * cc
    return {r: c for r, c in out.items() if c}


class CycloNumber:
    """Immutable element of Q(zeta_order) in canonical coordinates."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: dict, _canonical: bool = False):
        if order <= 0:
            raise ValueError("order must be positive")
        object.__setattr__(self, "order", order)
        canon = coords if _canonical else _canonicalize(order, coords)
        object.__setattr__(self, "coords", dict(canon))

    def __setattr__(self, *args):
        raise AttributeError("CycloNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "CycloNumber":
        value = Fraction(value)
        return cls(order, {0: value} if value else {})

    @classmethod
    def zero(cls, order: int = 1) -> "CycloNumber":
        return cls(order, {}, _canonical=True)

    @classmethod
    def from_phase(cls, phase: RationalPhase) -> "CycloNumber":
        """Canonical representation of the root of unity e^{2*pi*i*a/N}."""
        return cls(phase.N, {phase.a: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def lift(self, order: int) -> "CycloNumber":
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError("can only lift to a multiple of the current order")
        k = order // self.order
        return CycloNumber(order, {r * k: c for r, c in self.coords.items()})

    def _pair(self, other: "CycloNumber") -> tuple:
        n = self.order * other.order // math.gcd(self.order, other.order)
        return self.lift(n), other.lift(n)

    def is_zero(self) -> bool:
        return not self.coords

    def is_rational(self) -> bool:
        return all(r == 0 for r in self.coords)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.coords.get(0, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        out = dict(a.coords)
        for r, c in b.coords.items():
            out[r] = out.get(r, Fraction(0)) + c
        return CycloNumber(a.order, {r: c for r, c in out.items() if c}, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.order, {r: -c for r, c in self.coords.items()}, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return CycloNumber.zero(self.order)
            return CycloNumber(
                self.order, {r: c * f for r, c in self.coords.items()}, _canonical=True
            )
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b = self._pair(other)
        raw = {}
        for r1, c1 in a.coords.items():
            for r2, c2 in b.coords.items():
                e = r1 + r2
                raw[e] = raw.get(e, Fraction(0)) + c1 * c2
        return CycloNumber(a.order, raw)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return a.coords == b.coords

    # values of different stored orders compare equal after lifting, so a
    # coordinate hash would be inconsistent; CycloNumbers are not hashable
    __hash__ = None

    # -- field operations --------------------------------------------------

    def conjugate(self) -> "CycloNumber":
        """Complex conjugate: zeta^r -> zeta^{-r}."""
        return CycloNumber(self.order, {-r: c for r, c in self.coords.items()})

    def real_part(self) -> "CycloNumber":
        """(z + conj(z)) / 2, again a CycloNumber."""
        return (self + self.conjugate()) * Fraction(1, 2)

    def to_complex(self, precision: int = 17) -> complex:
        """Floating approximation accurate to the stated decimal precision."""
        if precision < 15:
            raise ValueError("precision must be at least 15 digits")
        with mpmath.workdps(precision + 10):
            total = mpmath.mpc(0)
            for r, c in self.coords.items():
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(
                    mpmath.mpf(2 * r) / self.order
                )
            return complex(total)

    def to_mpc(self, dps: int = 40):
        """mpmath complex value at the given working precision."""
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            for r, c in self.coords.items():
                total += (
                    mpmath.mpf(c.numerator)
                    / c.denominator
                    * mpmath.expjpi(mpmath.mpf(2 * r) / self.order)
                )
            return total

    def __repr__(self):
        if not self.coords:
            return "Cyclo(0)"
        terms = " + ".join(
            f"({c})*z{self.order}^{r}" for r, c in sorted(self.coords.items())
        )
        return f"Cyclo[{terms}]"

    def __str__(self):
        if self.is_rational():
            return str(self.as_rational())
        return repr(self)

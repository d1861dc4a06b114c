"""Exact rational helpers: binomials, Bernoulli polynomials, rational phases.

Rational numbers are stdlib ``fractions.Fraction`` throughout the package;
roots of unity enter every API as a :class:`RationalPhase` (the pair a/N
standing for e^{2*pi*i*a/N}), never as complex floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 for k outside [0, n].

    Negative n is a contract violation, not an extended binomial.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """k-th Bernoulli number, B_1 = -1/2 convention."""
    if k < 0:
        raise ValueError("bernoulli_number requires k >= 0")
    if k == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    acc = Fraction(0)
    for j in range(k):
        acc += binomial(k + 1, j) * bernoulli_number(j)
    return -acc / (k + 1)


def bernoulli_poly(k: int, x: Fraction) -> Fraction:
    """Exact value of the k-th Bernoulli polynomial B_k(x)."""
    if k < 0:
        raise ValueError("bernoulli_poly requires k >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    for j in range(k + 1):
        acc += binomial(k, j) * bernoulli_number(j) * x ** (k - j)
    return acc


@dataclass(frozen=True)
class RationalPhase:
    """The root of unity e^{2*pi*i*a/N}, stored as a reduced phase a/N.

    Invariants: N >= 1, 0 <= a < N, gcd(a, N) = 1 (so N is the exact order).
    """

    a: int
    N: int

    def __post_init__(self):
        if self.N <= 0:
            raise ValueError("phase denominator must be positive")
        a = self.a % self.N
        g = math.gcd(a, self.N)
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "N", self.N // g)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RationalPhase":
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    @property
    def order(self) -> int:
        return self.N

    def as_fraction(self) -> Fraction:
        return Fraction(self.a, self.N)

    def __mul__(self, other: "RationalPhase") -> "RationalPhase":
        """Product of the two roots of unity (phases add)."""
        return RationalPhase.from_fraction(self.as_fraction() + other.as_fraction())

    def __pow__(self, k) -> "RationalPhase":
        """Integer or rational power, taken on the phase: (a/N)*k mod 1."""
        return RationalPhase.from_fraction(self.as_fraction() * Fraction(k))

    def inverse(self) -> "RationalPhase":
        return RationalPhase(-self.a, self.N)

    def is_one(self) -> bool:
        return self.a == 0

    def __str__(self) -> str:
        return f"{self.a}/{self.N}"


def parse_phase(text: str) -> RationalPhase:
    """Parse 'a/N' (e.g. '1/3' for e^{2*pi*i/3}, '0/1' for 1)."""
    try:
        a_str, n_str = text.split("/")
        return RationalPhase(int(a_str), int(n_str))
    except (ValueError, AttributeError) as exc:
        raise ValueError(f"malformed phase {text!r}; expected 'a/N'") from exc

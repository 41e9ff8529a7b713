"""Pythagorean triples through the (d, m, n) parametrization.

Every triple is ``(d(m^2-n^2), d(2mn), d(m^2+n^2))`` for a unique generator with
``m > n >= 1``, ``gcd(m, n) = 1`` and ``m + n`` odd, once legs are put in canonical
order (odd-parametrized leg first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .exact_math import DomainError, Rational

__all__ = [
    "Generator",
    "Triple",
    "ReciprocalSpec",
    "triple_from_generator",
    "generator_from_triple",
    "enumerate_generators",
    "altitude",
    "reciprocal_sum",
    "has_property",
]


def _require_positive(**values: int) -> None:
    for name, value in values.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")


@total_ordering
@dataclass(frozen=True)
class Generator:
    """Parameters ``(d, m, n)``. Instances sort by ``(m, n, d)``."""

    d: int
    m: int
    n: int

    def __post_init__(self) -> None:
        _require_positive(d=self.d, m=self.m, n=self.n)
        if self.m <= self.n:
            raise DomainError(f"need m > n, got m={self.m}, n={self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise DomainError(f"m={self.m} and n={self.n} are not coprime")
        if (self.m + self.n) % 2 == 0:
            raise DomainError(f"m={self.m} and n={self.n} have the same parity")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return self.m, self.n, self.d

    def __lt__(self, other: Generator) -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def primitive(self) -> bool:
        return self.d == 1

    def as_dict(self) -> dict[str, int]:
        return {"d": self.d, "m": self.m, "n": self.n}


@dataclass(frozen=True)
class Triple:
    """Side lengths with ``a^2 + b^2 = c^2``; legs may be given in either order."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        _require_positive(a=self.a, b=self.b, c=self.c)
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise DomainError(f"({self.a}, {self.b}, {self.c}) is not Pythagorean")

    def swapped(self) -> Triple:
        return Triple(self.b, self.a, self.c)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def as_dict(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class ReciprocalSpec:
    """The ``(v, k, l)`` of ``1/a + 1/b + v/h = k/l``, with ``gcd(k, l) = 1``."""

    v: int
    k: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        _require_positive(v=self.v, k=self.k, l=self.l)
        if math.gcd(self.k, self.l) != 1:
            raise DomainError(f"k={self.k} and l={self.l} are not coprime")

    def as_tuple(self) -> tuple[int, int, int]:
        return self.v, self.k, self.l

    def as_dict(self) -> dict[str, int]:
        return {"v": self.v, "k": self.k, "l": self.l}


def triple_from_generator(g: Generator) -> Triple:
    d, m, n = g.d, g.m, g.n
    return Triple(d * (m * m - n * n), d * 2 * m * n, d * (m * m + n * n))


def generator_from_triple(t: Triple) -> Generator:
    """Invert the parametrization; leg order of ``t`` does not matter.

    >>> generator_from_triple(Triple(20, 21, 29))
    Generator(d=1, m=5, n=2)
    """
    d = math.gcd(t.a, t.b, t.c)
    a0, b0, c0 = t.a // d, t.b // d, t.c // d
    # exactly one leg of a primitive triple is even
    odd_leg = a0 if a0 % 2 else b0
    m_sq, n_sq = (c0 + odd_leg) // 2, (c0 - odd_leg) // 2
    m, n = math.isqrt(m_sq), math.isqrt(n_sq)
    if m * m != m_sq or n * n != n_sq:
        raise AssertionError(f"no generator for {t}")  # unreachable for valid triples
    return Generator(d, m, n)


def enumerate_generators(max_c: int) -> list[Generator]:
    """All generators whose hypotenuse ``d(m^2+n^2)`` is at most ``max_c``, sorted (m, n, d)."""
    out: list[Generator] = []
    m = 2
    while m * m + 1 <= max_c:
        # opposite parity: n starts at 1 for even m, 2 for odd m
        for n in range(1 + (m % 2), m, 2):
            c0 = m * m + n * n
            if c0 > max_c:
                break
            if math.gcd(m, n) != 1:
                continue
            out.extend(Generator(d, m, n) for d in range(1, max_c // c0 + 1))
        m += 1
    return out


def altitude(t: Triple) -> Rational:
    """Altitude to the hypotenuse, ``ab/c``, exactly."""
    return Fraction(t.a * t.b, t.c)


def reciprocal_sum(t: Triple, v: int) -> Rational:
    """``1/a + 1/b + v/h`` evaluated exactly."""
    return Fraction(1, t.a) + Fraction(1, t.b) + v / altitude(t)


def has_property(t: Triple, s: ReciprocalSpec) -> bool:
    """Decide R(v, k, l) via the integer identity ``l(a + b + vc) = kab``."""
    return s.l * (t.a + t.b + s.v * t.c) == s.k * t.a * t.b

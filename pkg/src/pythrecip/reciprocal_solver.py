"""Triples with the reciprocal property R(v, k, l): search, obstructions, closed forms.

Under the parametrization the property reduces to the key equation

    l * [(v+1) m^2 + (v-1) n^2 + 2mn] = d * k * 2mn (m^2 - n^2)

which fixes ``d`` once ``(m, n)`` and the spec are chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact_math import DomainError, is_prime
from .triples import (
    Generator,
    ReciprocalSpec,
    Triple,
    triple_from_generator,
)

__all__ = [
    "Group345",
    "SolutionRecord",
    "key_equation_holds",
    "solve_d",
    "find_triples",
    "divisibility_condition_l1",
    "parity_obstruction",
    "twin_prime_obstruction",
    "obstructions",
    "discriminant_witness",
    "family_v1",
    "family_v2_k1",
    "groups_345",
    "group_members_345",
    "classify_345",
]


@dataclass(frozen=True)
class SolutionRecord:
    generator: Generator
    triple: Triple
    spec: ReciprocalSpec

    @classmethod
    def from_generator(cls, g: Generator, s: ReciprocalSpec) -> SolutionRecord:
        return cls(g, triple_from_generator(g), s)


def _key_sides(m: int, n: int, v: int, k: int, l: int) -> tuple[int, int]:  # noqa: E741
    """(left side, right side without the factor d) of the key equation."""
    lhs = l * ((v + 1) * m * m + (v - 1) * n * n + 2 * m * n)
    rhs_per_d = k * 2 * m * n * (m * m - n * n)
    return lhs, rhs_per_d


def key_equation_holds(g: Generator, s: ReciprocalSpec) -> bool:
    lhs, rhs_per_d = _key_sides(g.m, g.n, s.v, s.k, s.l)
    return lhs == g.d * rhs_per_d


def solve_d(m: int, n: int, s: ReciprocalSpec) -> int | None:
    """The scale ``d`` making the key equation hold for ``(m, n)``, if it is an integer."""
    lhs, rhs_per_d = _key_sides(m, n, s.v, s.k, s.l)
    if lhs % rhs_per_d:
        return None
    return lhs // rhs_per_d


def divisibility_condition_l1(m: int, n: int, v: int) -> bool:
    """Necessary for R(v, k, 1): ``m | v-1`` and ``n | v+1``."""
    return (v - 1) % m == 0 and (v + 1) % n == 0


def parity_obstruction(s: ReciprocalSpec) -> bool:
    """True when v is even and l is odd; no triple then has R(v, k, l)."""
    return s.v % 2 == 0 and s.l % 2 == 1


def twin_prime_obstruction(v: int, l: int) -> bool:  # noqa: E741
    """True when ``l == 1`` and ``v-1``, ``v+1`` are both prime."""
    return l == 1 and is_prime(v - 1) and is_prime(v + 1)


def obstructions(s: ReciprocalSpec) -> list[str]:
    """Human-readable reasons why R(v, k, l) has no solution at all (empty if none apply)."""
    v, k, l = s.as_tuple()  # noqa: E741
    notes = []
    if v == 2 and l == 1:
        notes.append("R(2,k,1) impossible: m would have to divide v-1 = 1")
    if parity_obstruction(s):
        notes.append(f"R({v},k,{l}) impossible: v even and l odd")
    if twin_prime_obstruction(v, l):
        notes.append(f"R({v},k,1) impossible: {v - 1} and {v + 1} are twin primes")
    if v == 1 and k >= 2:
        notes.append(f"R(1,{k},{l}) impossible: k >= 2 would divide l")
    return notes


def discriminant_witness(d: int, k: int) -> tuple[int, int]:
    """``(4dk(dk+1) - 2, value mod 4)``; the residue is always 2, so value is never a square."""
    if d < 1 or k < 1:
        raise DomainError("d and k must be positive")
    value = 4 * d * k * (d * k + 1) - 2
    return value, value % 4


def _pruned_pairs(s: ReciprocalSpec, max_m: int):
    """Pairs (m, n) that can carry a solution, using only proven necessary conditions.

    Any solution has d >= 1, and bounding the left side of the key equation by
    l(v+1)(m+n)^2 gives k*n*(m-n) < l*(v+1).
    """
    v, k, l = s.as_tuple()  # noqa: E741
    cap = l * (v + 1)
    n = 1
    while k * n < cap:
        j = 1
        while k * n * j < cap and n + j <= max_m:
            m = n + j
            if j % 2 == 1 and math.gcd(j, n) == 1:
                if l != 1 or divisibility_condition_l1(m, n, v):
                    yield m, n
            j += 1
        n += 1


def _all_pairs(max_m: int):
    for m in range(2, max_m + 1):
        for n in range(1 + (m % 2), m, 2):
            if math.gcd(m, n) == 1:
                yield m, n


def find_triples(s: ReciprocalSpec, max_m: int, *, prune: bool = True) -> list[SolutionRecord]:
    """Every triple with R(v, k, l) whose generator has ``m <= max_m``, sorted by (m, n, d).

    With ``prune`` the search skips specs ruled out by an obstruction and restricts
    ``(m, n)`` by necessary conditions; the result is identical either way.
    """
    if prune:
        if parity_obstruction(s) or twin_prime_obstruction(s.v, s.l):
            return []
        if s.v == 1 and s.k >= 2:
            return []
        pairs = sorted(_pruned_pairs(s, max_m))
    else:
        pairs = _all_pairs(max_m)
    out = []
    for m, n in pairs:
        d = solve_d(m, n, s)
        if d is not None:
            out.append(SolutionRecord.from_generator(Generator(d, m, n), s))
    return out


def family_v1(s: ReciprocalSpec, max_m: int) -> list[SolutionRecord]:
    """Closed form for v = 1: solutions are exactly ``l = d*k*n*(m-n)``, forcing k = 1."""
    if s.v != 1:
        raise DomainError(f"family_v1 needs v = 1, got v={s.v}")
    if s.k >= 2:
        return []
    gens = []
    for n in range(1, s.l + 1):
        if s.l % n:
            continue
        rest = s.l // n
        for j in range(1, rest + 1, 2):  # j = m - n must be odd
            if rest % j or n + j > max_m or math.gcd(n, j) != 1:
                continue
            gens.append(Generator(rest // j, n + j, n))
    return [SolutionRecord.from_generator(g, s) for g in sorted(gens)]


def family_v2_k1(m: int, n: int, t: int) -> tuple[int, int]:
    """``(l, d)`` of the t-th member of the R(2, 1, l) family for ``(m, n)``.

    Requires ``n % 3 != 0`` and ``m % 3 != n % 3``; then
    ``l = t*2mn(m^2-n^2)`` and ``d = t*(3m^2 + n^2 + 2mn)``.
    """
    Generator(1, m, n)  # validates the pair
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    if n % 3 == 0 or (m - n) % 3 == 0:
        raise DomainError(f"(m, n) = ({m}, {n}) violates the mod 3 conditions")
    l = t * 2 * m * n * (m * m - n * n)  # noqa: E741
    d = t * (3 * m * m + n * n + 2 * m * n)
    return l, d


@dataclass(frozen=True)
class Group345:
    """``v = v_offset + v_step*t``, ``k = k_offset + k_step*t``, fixed ``l``, t >= 0."""

    id: int
    v_offset: int
    v_step: int
    k_offset: int
    k_step: int
    l: int  # noqa: E741

    def at(self, t: int) -> tuple[int, int, int]:
        return self.v_offset + self.v_step * t, self.k_offset + self.k_step * t, self.l


_GROUPS_345 = (
    Group345(1, 1, 12, 1, 5, 1),
    Group345(2, 1, 6, 2, 5, 2),
    Group345(3, 1, 4, 3, 5, 3),
    Group345(4, 1, 3, 4, 5, 4),
    Group345(5, 1, 2, 6, 5, 6),
    Group345(6, 1, 1, 12, 5, 12),
)


def groups_345() -> list[Group345]:
    """The six raw families of specs held by (3, 4, 5); some members have gcd(k, l) > 1."""
    return list(_GROUPS_345)


def group_members_345(
    t_max: int, include_noncoprime: bool = False
) -> list[tuple[int, int, tuple[int, int, int]]]:
    """``(group id, t, (v, k, l))`` for t <= t_max, ordered by group then t."""
    out = []
    for g in _GROUPS_345:
        for t in range(t_max + 1):
            v, k, l = g.at(t)  # noqa: E741
            if include_noncoprime or math.gcd(k, l) == 1:
                out.append((g.id, t, (v, k, l)))
    return out


def classify_345(s: ReciprocalSpec) -> tuple[int, int] | None:
    """``(group id, t)`` of the family containing ``s`` if (3, 4, 5) has R(v, k, l)."""
    v, k, l = s.as_tuple()  # noqa: E741
    if 12 % l or l * (7 + 5 * v) != 12 * k:
        return None
    for g in _GROUPS_345:
        if g.l != l:
            continue
        t, r = divmod(v - g.v_offset, g.v_step)
        if r == 0 and t >= 0 and g.at(t) == (v, k, l):
            return g.id, t
    return None

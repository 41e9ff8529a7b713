"""Exact integer and rational primitives, and two-variable linear Diophantine solving."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "Rational",
    "DiophantineFamily",
    "gcd",
    "extended_gcd",
    "solve_linear_diophantine",
    "enumerate_positive_solutions",
    "make_rational",
    "add",
    "equals",
    "is_prime",
    "format_rational",
]

#: Exact reduced fraction. ``Fraction`` already stores num/den reduced with den >= 1.
Rational = Fraction


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def gcd(u: int, w: int) -> int:
    """Greatest common divisor of two integers, not both zero.

    >>> gcd(57, 120)
    3
    >>> gcd(6, 0)
    6
    """
    if u == 0 and w == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(u, w)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(d, x, y)`` with ``d = gcd(a, b) >= 0`` and ``a*x + b*y == d``.

    Iterative Euclid with Bezout coefficient tracking. Works for any signs.
    """
    if a == 0 and b == 0:
        raise DomainError("extended_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class DiophantineFamily:
    """All integer solutions ``(x0 + t*step_x, y0 + t*step_y)`` of ``A*x + B*y = C``."""

    x0: int
    y0: int
    step_x: int
    step_y: int

    def at(self, t: int) -> tuple[int, int]:
        return self.x0 + t * self.step_x, self.y0 + t * self.step_y

    def parameter_of(self, x: int, y: int) -> int | None:
        """Return ``t`` with ``at(t) == (x, y)``, or None if the point is not a member."""
        dx, dy = x - self.x0, y - self.y0
        if self.step_x != 0:
            if dx % self.step_x:
                return None
            t = dx // self.step_x
        elif dx != 0:
            return None
        else:
            # step_y is nonzero whenever step_x is zero
            if dy % self.step_y:
                return None
            t = dy // self.step_y
        return t if self.at(t) == (x, y) else None

    def __contains__(self, point: object) -> bool:
        x, y = point  # type: ignore[misc]
        return self.parameter_of(x, y) is not None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _positive_t_range(xe: int, ye: int, sx: int, sy: int) -> tuple[int | None, int | None]:
    """Integer interval of t for which both coordinates are >= 1 (None = unbounded)."""
    lo: int | None = None
    hi: int | None = None
    for base, step in ((xe, sx), (ye, sy)):
        # need base + t*step >= 1
        if step > 0:
            bound = _ceil_div(1 - base, step)
            lo = bound if lo is None else max(lo, bound)
        elif step < 0:
            bound = (base - 1) // (-step)
            hi = bound if hi is None else min(hi, bound)
        elif base < 1:
            return 1, 0  # empty
    return lo, hi


def solve_linear_diophantine(a: int, b: int, c: int) -> DiophantineFamily | None:
    """Solve ``a*x + b*y = c`` over the integers.

    Returns None when ``gcd(a, b)`` does not divide ``c``. Otherwise the family uses
    ``step_x = b/D`` and ``step_y = -a/D``, and the particular solution is the one with
    the smallest ``x`` among solutions having ``x >= 1`` and ``y >= 1`` (ties broken by
    smallest ``y``). When no such solution exists the scaled Bezout solution is kept.
    """
    d, u, w = extended_gcd(a, b)
    if c % d:
        return None
    scale = c // d
    xe, ye = u * scale, w * scale
    sx, sy = b // d, -(a // d)

    lo, hi = _positive_t_range(xe, ye, sx, sy)
    if lo is None and hi is None:
        # cannot happen: sx and sy are never both zero
        raise AssertionError("unbounded positive range")
    if lo is None or hi is None or lo <= hi:
        if sx > 0 or (sx == 0 and sy > 0):
            t = lo
        else:
            t = hi
        assert t is not None
        xe, ye = xe + t * sx, ye + t * sy
    return DiophantineFamily(xe, ye, sx, sy)


def enumerate_positive_solutions(
    family: DiophantineFamily, max_t: int
) -> list[tuple[int, int, int]]:
    """Members ``(x, y, t)`` with ``x, y >= 1`` and ``|t| <= max_t``, ordered by t."""
    out = []
    for t in range(-max_t, max_t + 1):
        x, y = family.at(t)
        if x >= 1 and y >= 1:
            out.append((x, y, t))
    return out


def make_rational(num: int, den: int) -> Rational:
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def add(p: Rational, q: Rational) -> Rational:
    return p + q


def equals(p: Rational, q: Rational) -> bool:
    return p.numerator == q.numerator and p.denominator == q.denominator


def format_rational(q: Rational) -> str:
    """Render as ``"num/den"`` (always with a denominator)."""
    return f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic trial division up to isqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    limit = math.isqrt(n)
    while f <= limit:
        if n % f == 0:
            return False
        f += 2
    return True

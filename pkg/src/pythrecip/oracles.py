"""Bounded brute-force sweeps that check each classification claim against raw search.

Each sweep returns a :class:`SweepReport`. A report with no counterexamples means the
claim held on every case inside the bound. Every harness also has a falsified mode
(broken filter or misprinted formula) that must produce counterexamples; this is how
the harness itself is tested for sensitivity.

Bound semantics per claim (``B`` is the ``bound`` argument):

=========  ==================================================================
lemma1     alpha, beta, gamma <= B
lemma2     q < r <= B
T1         |A|, |B|, |C| <= B; brute force over x, y in [-10B, 10B]
T2i        l = 1; v, k <= B; m <= B
T2ii       v = 2, l = 1; k <= B; m <= B
T2iii      v = k = l = 1; m <= B
T2iv       v = 1; k, l <= B; m <= B
T2v        v even, l odd; v, k, l <= B; m <= B
T3         l = 1; v <= B with v-1, v+1 prime; k <= B; m <= B
T4         m <= B; l, d <= 10**4 (``T4_VALUE_LIMIT``)
T5         v <= B, k <= 2B, l <= 12
=========  ==================================================================
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .exact_math import DiophantineFamily, is_prime, solve_linear_diophantine
from .reciprocal_solver import (
    classify_345,
    divisibility_condition_l1,
    family_v1,
    family_v2_k1,
    groups_345,
)
from .triples import Generator, ReciprocalSpec, Triple, has_property, triple_from_generator

__all__ = [
    "SweepReport",
    "UnknownClaimError",
    "CLAIMS",
    "THEOREM_CLAIMS",
    "lemma2_gcd",
    "verify_lemma2",
    "verify_euclid_lemma",
    "verify_diophantine",
    "verify_theorem",
    "run_claim",
    "raw_solutions",
    "twin_prime_centres",
    "printed_theorem4_d",
    "printed_eq7_l",
]

MAX_LISTED = 100
T4_VALUE_LIMIT = 10**4
T5_L_MAX = 12


class UnknownClaimError(KeyError):
    pass


class _Timeout(Exception):
    pass


@dataclass
class SweepReport:
    claim_id: str
    bound: int
    cases_checked: int = 0
    counterexamples: list[tuple] = field(default_factory=list)
    counterexample_count: int = 0
    partial: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def held(self) -> bool:
        return self.counterexample_count == 0 and not self.partial

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "bound": self.bound,
            "cases_checked": self.cases_checked,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [list(c) for c in self.counterexamples],
            "partial": self.partial,
            "notes": self.notes,
        }


class _Sweep:
    """Accumulates cases into a report, capping the stored counterexample list."""

    def __init__(self, claim_id: str, bound: int, deadline: float | None):
        self.report = SweepReport(claim_id, bound)
        self.deadline = deadline

    def check(self, ok: bool, case: tuple) -> None:
        rep = self.report
        rep.cases_checked += 1
        if not ok:
            rep.counterexample_count += 1
            if len(rep.counterexamples) < MAX_LISTED:
                rep.counterexamples.append(case)
        if self.deadline is not None and rep.cases_checked % 256 == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def run(self, body: Callable[[_Sweep], None]) -> SweepReport:
        try:
            body(self)
        except _Timeout:
            self.report.partial = True
        return self.report


# ---------------------------------------------------------------------------
# Lemmas
# ---------------------------------------------------------------------------


def lemma2_gcd(q: int, r: int) -> int:
    """``gcd(3r^2 + q^2 + 2rq, 2rq(r^2 - q^2))`` with no hypothesis checks beyond r > q >= 1."""
    if not (r > q >= 1):
        raise ValueError(f"need r > q >= 1, got q={q}, r={r}")
    return math.gcd(3 * r * r + q * q + 2 * r * q, 2 * r * q * (r * r - q * q))


def _lemma2_hypotheses(q: int, r: int) -> bool:
    return (
        math.gcd(q, r) == 1
        and (q + r) % 2 == 1
        and q % 3 != 0
        and (r - q) % 3 != 0
    )


def verify_lemma2(bound: int, *, deadline: float | None = None) -> SweepReport:
    def body(sw: _Sweep) -> None:
        for r in range(2, bound + 1):
            for q in range(1, r):
                if _lemma2_hypotheses(q, r):
                    sw.check(lemma2_gcd(q, r) == 1, (q, r))

    return _Sweep("lemma2", bound, deadline).run(body)


def verify_euclid_lemma(
    bound: int, *, require_coprime: bool = True, deadline: float | None = None
) -> SweepReport:
    """If ``alpha | beta*gamma`` and ``gcd(alpha, beta) = 1`` then ``alpha | gamma``.

    ``require_coprime=False`` drops the coprimality filter (negative control).
    """

    def body(sw: _Sweep) -> None:
        for alpha in range(1, bound + 1):
            for beta in range(1, bound + 1):
                if require_coprime and math.gcd(alpha, beta) != 1:
                    continue
                for gamma in range(1, bound + 1):
                    if (beta * gamma) % alpha == 0:
                        sw.check(gamma % alpha == 0, (alpha, beta, gamma))

    return _Sweep("lemma1", bound, deadline).run(body)


# ---------------------------------------------------------------------------
# Linear Diophantine equations
# ---------------------------------------------------------------------------


def _window_members(fam: DiophantineFamily, span: int) -> int:
    """Number of family members with both coordinates in ``[-span, span]``."""
    lo: int | None = None
    hi: int | None = None
    for base, step in ((fam.x0, fam.step_x), (fam.y0, fam.step_y)):
        if step == 0:
            if abs(base) > span:
                return 0
            continue
        if step < 0:
            base, step = -base, -step
        # -span <= base + t*step <= span
        t_lo = -((span + base) // step)
        t_hi = (span - base) // step
        lo = t_lo if lo is None else max(lo, t_lo)
        hi = t_hi if hi is None else min(hi, t_hi)
    assert lo is not None and hi is not None
    return max(0, hi - lo + 1)


def verify_diophantine(bound: int, *, deadline: float | None = None) -> SweepReport:
    """Solver verdict and completeness against brute force on a square window.

    For each ``(A, B, C)`` the brute-force hit count over ``x, y in [-10B, 10B]`` is
    compared with the number of family members in the same window. The family's own
    identities make every member a hit, so equal counts mean equal sets. The window
    always contains a solution when one exists (take x in the family's residue class
    with ``|x| <= |B|/2``).
    """
    span = 10 * max(bound, 1)
    xs = np.arange(-span, span + 1, dtype=np.int64)
    cs = np.arange(-bound, bound + 1, dtype=np.int64)

    def body(sw: _Sweep) -> None:
        for a in range(-bound, bound + 1):
            ax = a * xs
            for b in range(-bound, bound + 1):
                if a == 0 and b == 0:
                    continue
                if b != 0:
                    rem = cs[:, None] - ax[None, :]
                    q, r = np.divmod(rem, b)
                    counts = ((r == 0) & (np.abs(q) <= span)).sum(axis=1)
                else:
                    # x is pinned by C = A*x; every y in the window pairs with it
                    counts = (cs[:, None] == ax[None, :]).sum(axis=1) * xs.size
                for c, count in zip(range(-bound, bound + 1), counts.tolist()):
                    fam = solve_linear_diophantine(a, b, c)
                    if fam is None:
                        sw.check(count == 0, ("spurious-no-solution", a, b, c))
                        continue
                    ok = (
                        count > 0
                        and a * fam.x0 + b * fam.y0 == c
                        and a * fam.step_x + b * fam.step_y == 0
                        and _window_members(fam, span) == count
                    )
                    sw.check(ok, ("family-mismatch", a, b, c))

    return _Sweep("T1", bound, deadline).run(body)


# ---------------------------------------------------------------------------
# Raw search (independent of the solver module)
# ---------------------------------------------------------------------------


def _pairs(max_m: int) -> Iterator[tuple[int, int]]:
    for m in range(2, max_m + 1):
        for n in range(1, m):
            if (m - n) % 2 == 1 and math.gcd(m, n) == 1:
                yield m, n


def raw_solutions(
    v: int, l: int, k_max: int, max_m: int  # noqa: E741
) -> Iterator[tuple[int, Generator]]:
    """All ``(k, generator)`` with ``k <= k_max``, ``m <= max_m`` and R(v, k, l).

    For fixed (m, n) the property reads ``l*(a+b+vc)/d = k*d*2mn(m^2-n^2)/d``; the
    product ``k*d`` is determined, so we walk its divisors. Each hit is re-checked on
    the actual triple with ``l(a + b + vc) = kab``.
    """
    for m, n in _pairs(max_m):
        num = l * ((v + 1) * m * m + (v - 1) * n * n + 2 * m * n)
        den = 2 * m * n * (m * m - n * n)
        if num % den:
            continue
        kd = num // den
        for k in range(1, min(k_max, kd) + 1):
            if kd % k == 0:
                yield k, Generator(kd // k, m, n)


def _spec_ok(v: int, k: int, l: int) -> bool:  # noqa: E741
    return math.gcd(k, l) == 1


def _property_on_triple(g: Generator, v: int, k: int, l: int) -> bool:  # noqa: E741
    t = triple_from_generator(g)
    return l * (t.a + t.b + v * t.c) == k * t.a * t.b


# ---------------------------------------------------------------------------
# Falsified formulas kept for negative controls
# ---------------------------------------------------------------------------


def printed_theorem4_d(m: int, n: int, t: int) -> int:
    """The d of the R(2, 1, l) family as misprinted (an extra factor 2mn(m^2-n^2))."""
    return t * (2 * m * n) * (m * m - n * n) * (3 * m * m + n * n + 2 * m * n)


def printed_eq7_l(d: int, k: int, m: int, n: int) -> int:
    """The v = 1 relation as misprinted, ``l = dk(m-n)`` (missing the factor n)."""
    return d * k * (m - n)


def _eq11_holds(m: int, n: int, l: int, d: int) -> bool:  # noqa: E741
    return l * (3 * m * m + n * n + 2 * m * n) == d * (2 * m * n) * (m * m - n * n)


# ---------------------------------------------------------------------------
# Theorem sweeps
# ---------------------------------------------------------------------------


def _t2i(sw: _Sweep, bound: int, printed: bool) -> None:
    for v in range(1, bound + 1):
        for k, g in raw_solutions(v, 1, bound, bound):
            ok = _property_on_triple(g, v, k, 1) and divisibility_condition_l1(g.m, g.n, v)
            sw.check(ok, (v, k, 1, g.d, g.m, g.n))


def _expect_none(sw: _Sweep, specs: Iterable[tuple[int, int, int]], max_m: int) -> None:
    """Each spec is checked individually; any raw solution is a counterexample."""
    by_vl: dict[tuple[int, int], list[int]] = {}
    for v, k, l in specs:  # noqa: E741
        by_vl.setdefault((v, l), []).append(k)
    for (v, l), ks in by_vl.items():  # noqa: E741
        wanted = set(ks)
        found: dict[int, list[Generator]] = {}
        for k, g in raw_solutions(v, l, max(ks), max_m):
            if k in wanted and _property_on_triple(g, v, k, l):
                found.setdefault(k, []).append(g)
        for k in ks:
            hits = found.get(k, [])
            if hits:
                g = hits[0]
                sw.check(False, (v, k, l, g.d, g.m, g.n))
            else:
                sw.check(True, (v, k, l))


def _t2ii(sw: _Sweep, bound: int, printed: bool) -> None:
    _expect_none(sw, ((2, k, 1) for k in range(1, bound + 1)), bound)


def _t2iii(sw: _Sweep, bound: int, printed: bool) -> None:
    found = [g for k, g in raw_solutions(1, 1, 1, bound) if _property_on_triple(g, 1, 1, 1)]
    sw.report.notes["solutions"] = [list(triple_from_generator(g).as_tuple()) for g in found]
    expected = [Generator(1, 2, 1)] if bound >= 2 else []
    sw.check(found == expected, ("solutions", tuple(triple_from_generator(g).as_tuple() for g in found)))


def _t2iv(sw: _Sweep, bound: int, printed: bool) -> None:
    for l in range(1, bound + 1):  # noqa: E741
        raw: dict[int, list[Generator]] = {}
        for k, g in raw_solutions(1, l, bound, bound):
            if _spec_ok(1, k, l) and _property_on_triple(g, 1, k, l):
                raw.setdefault(k, []).append(g)
        for k in range(2, bound + 1):
            if math.gcd(k, l) == 1:
                hits = raw.get(k, [])
                sw.check(not hits, (1, k, l) + ((hits[0].d, hits[0].m, hits[0].n) if hits else ()))
        brute = sorted(raw.get(1, []))
        if printed:
            closed = sorted(
                Generator(d, m, n)
                for m, n in _pairs(bound)
                for d in range(1, l + 1)
                if printed_eq7_l(d, 1, m, n) == l
            )
        else:
            closed = [r.generator for r in family_v1(ReciprocalSpec(1, 1, l), bound)]
        sw.check(closed == brute, ("family-v1-mismatch", 1, 1, l))


def _t2v(sw: _Sweep, bound: int, printed: bool) -> None:
    specs = (
        (v, k, l)
        for v in range(2, bound + 1, 2)
        for l in range(1, bound + 1, 2)  # noqa: E741
        for k in range(1, bound + 1)
        if math.gcd(k, l) == 1
    )
    _expect_none(sw, specs, bound)


def twin_prime_centres(limit: int) -> list[int]:
    """All v <= limit with v-1 and v+1 both prime."""
    return [v for v in range(2, limit + 1) if is_prime(v - 1) and is_prime(v + 1)]


def _t3(sw: _Sweep, bound: int, printed: bool) -> None:
    centres = twin_prime_centres(bound)
    sw.report.notes["v_values"] = centres
    _expect_none(sw, ((v, k, 1) for v in centres for k in range(1, bound + 1)), bound)


def _t4(sw: _Sweep, bound: int, printed: bool) -> None:
    limit = T4_VALUE_LIMIT
    ls = np.arange(1, limit + 1, dtype=object)
    for m, n in _pairs(bound):
        if n % 3 == 0 or (m - n) % 3 == 0:
            continue
        p = 3 * m * m + n * n + 2 * m * n
        q = 2 * m * n * (m * m - n * n)
        # brute force: every l <= limit whose d = l*p/q is an integer <= limit
        prod = ls * p
        mask = (prod % q == 0) & (prod // q <= limit)
        brute = {(int(l), int(l) * p // q) for l in ls[mask.astype(bool)]}  # noqa: E741
        closed = set()
        t = 1
        while True:
            l, d = family_v2_k1(m, n, t)  # noqa: E741
            if printed:
                d = printed_theorem4_d(m, n, t)
            if l > limit:
                break
            sw.check(_eq11_holds(m, n, l, d), ("fails-eq11", m, n, t, l, d))
            if d <= limit:
                closed.add((l, d))
            t += 1
        missing = sorted(brute - closed)
        extra = sorted(closed - brute)
        sw.check(not missing and not extra, ("set-mismatch", m, n, len(missing), len(extra)))


# Theorem table rows as printed: the last two rows carry labels 5 and 6.
_PRINTED_T5_LABELS = (1, 2, 3, 4, 5, 6)


def _t5(sw: _Sweep, bound: int, printed: bool) -> None:
    groups = groups_345()
    labels = _PRINTED_T5_LABELS if printed else tuple(g.l for g in groups)
    # each row: -5v + (12/l)k = 7 solved by the general solver reproduces offset and step
    for g, label in zip(groups, labels):
        fam = solve_linear_diophantine(-5, 12 // label, 7) if 12 % label == 0 else None
        ok = fam is not None and (fam.x0, fam.y0, fam.step_x, fam.step_y) == (
            g.v_offset, g.k_offset, g.v_step, g.k_step
        )
        sw.check(ok, ("row", g.id, label))
        for t in range(bound + 1):
            v, k, _ = g.at(t)
            sw.check(label * (7 + 5 * v) == 12 * k, ("member", g.id, label, t))
    if printed:
        return
    base = Triple(3, 4, 5)
    for l in range(1, T5_L_MAX + 1):  # noqa: E741
        for k in range(1, 2 * bound + 1):
            if math.gcd(k, l) != 1:
                continue
            for v in range(1, bound + 1):
                s = ReciprocalSpec(v, k, l)
                cls = classify_345(s)
                holds = has_property(base, s)
                ok = (cls is not None) == holds
                if ok and cls is not None:
                    gid, t = cls
                    ok = groups[gid - 1].at(t) == (v, k, l)
                sw.check(ok, (v, k, l))


_THEOREMS: dict[str, Callable[[_Sweep, int, bool], None]] = {
    "T2i": _t2i,
    "T2ii": _t2ii,
    "T2iii": _t2iii,
    "T2iv": _t2iv,
    "T2v": _t2v,
    "T3": _t3,
    "T4": _t4,
    "T5": _t5,
}
_HAS_PRINTED_VARIANT = {"T2iv", "T4", "T5"}

THEOREM_CLAIMS = tuple(_THEOREMS)
CLAIMS = ("lemma1", "lemma2", "T1") + THEOREM_CLAIMS


def verify_theorem(
    claim_id: str,
    bound: int,
    *,
    printed: bool = False,
    deadline: float | None = None,
) -> SweepReport:
    """Run the exhaustive check for one theorem claim.

    ``printed=True`` substitutes the formulas exactly as printed in the source
    (available for T2iv, T4 and T5); those runs are expected to fail.
    """
    try:
        body = _THEOREMS[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id) from None
    if printed and claim_id not in _HAS_PRINTED_VARIANT:
        raise ValueError(f"{claim_id} has no printed variant")
    return _Sweep(claim_id, bound, deadline).run(lambda sw: body(sw, bound, printed))


def run_claim(claim_id: str, bound: int, *, deadline: float | None = None) -> SweepReport:
    """Dispatch any id in :data:`CLAIMS`."""
    if claim_id == "lemma1":
        return verify_euclid_lemma(bound, deadline=deadline)
    if claim_id == "lemma2":
        return verify_lemma2(bound, deadline=deadline)
    if claim_id == "T1":
        return verify_diophantine(bound, deadline=deadline)
    return verify_theorem(claim_id, bound, deadline=deadline)

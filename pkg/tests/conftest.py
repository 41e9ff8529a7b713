import math
from fractions import Fraction

import pytest


def brute_triples(max_c):
    """All (a, b, c) with a <= b and c <= max_c, by direct scan."""
    out = []
    for c in range(1, max_c + 1):
        for a in range(1, c):
            b_sq = c * c - a * a
            b = math.isqrt(b_sq)
            if b >= a and b * b == b_sq:
                out.append((a, b, c))
    return out


def rational_property(a, b, c, v, k, l):
    h = Fraction(a * b, c)
    return Fraction(1, a) + Fraction(1, b) + v / h == Fraction(k, l)


@pytest.fixture
def small_triples():
    return brute_triples(60)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], outcome.upper(), props.get("title", ""), rep.duration))
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for num, outcome, title, dur in sorted(lines):
            status = "PASS" if outcome == "PASSED" else "FAIL"
            terminalreporter.write_line(f"[{status}] criterion {num}: {title} ({dur:.2f}s)")

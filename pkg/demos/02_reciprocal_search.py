"""
Searching for the reciprocal property R(v, k, l)
================================================

A triple has R(v, k, l) when ``1/a + 1/b + v/h = k/l``. Fixing ``(m, n)`` pins the
scale ``d``, so a search over generator pairs up to ``max_m`` is complete.
"""

# %%
from pythrecip import ReciprocalSpec, Triple, find_triples, has_property
from pythrecip.reciprocal_solver import family_v1, family_v2_k1, obstructions
from pythrecip.triples import reciprocal_sum

# %%
# The motivating case: 1/a + 1/b + 1/h = 1 has a single solution.
print([r.triple.as_tuple() for r in find_triples(ReciprocalSpec(1, 1, 1), 2000)])

# %%
# Check a triple directly; the exact sum shows what spec it satisfies for v = 1.
t = Triple(5, 12, 13)
print(reciprocal_sum(t, 1), has_property(t, ReciprocalSpec(1, 1, 2)))

# %%
# For v = 1 the solutions are exactly d * n * (m - n) = l (and k must be 1).
for rec in family_v1(ReciprocalSpec(1, 1, 6), 100):
    print(rec.generator, rec.triple.as_tuple())

# %%
# The R(2, 1, l) family: l = t*2mn(m^2-n^2), d = t*(3m^2 + n^2 + 2mn).
for m, n in ((2, 1), (3, 2), (5, 4)):
    l, d = family_v2_k1(m, n, 1)
    print((m, n), "l =", l, "d =", d, find_triples(ReciprocalSpec(2, 1, l), m)[-1].triple.as_tuple())

# %%
# Some specs are ruled out before any search.
for spec in (ReciprocalSpec(2, 5, 1), ReciprocalSpec(4, 3, 5), ReciprocalSpec(12, 1, 1), ReciprocalSpec(1, 3, 2)):
    print(spec.as_tuple(), obstructions(spec))

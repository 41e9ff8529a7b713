"""
Pythagorean triples and the altitude to the hypotenuse
======================================================

Every triple comes from a generator ``(d, m, n)``. The altitude ``h = ab/c`` is
usually not an integer, so it is kept as an exact fraction.
"""

# %%
from pythrecip import (
    Generator,
    Triple,
    altitude,
    enumerate_generators,
    generator_from_triple,
    triple_from_generator,
)

# %%
# Build a few triples from their generators.
for g in (Generator(1, 2, 1), Generator(2, 2, 1), Generator(1, 3, 2), Generator(1, 5, 2)):
    t = triple_from_generator(g)
    print(g, "->", t.as_tuple(), " h =", altitude(t))

# %%
# Going back: legs can be given in either order.
print(generator_from_triple(Triple(21, 20, 29)))
print(generator_from_triple(Triple(8, 6, 10)))

# %%
# All triples with hypotenuse at most 30, in (m, n, d) order. Primitive ones have d = 1.
for g in enumerate_generators(30):
    t = triple_from_generator(g)
    print(f"m={g.m} n={g.n} d={g.d}  {t.as_tuple()}  primitive={g.primitive}")

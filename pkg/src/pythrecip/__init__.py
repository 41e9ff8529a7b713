"""Exact search and verification for reciprocal properties of Pythagorean triples."""

from .exact_math import (
    DiophantineFamily,
    DomainError,
    Rational,
    extended_gcd,
    gcd,
    solve_linear_diophantine,
)
from .reciprocal_solver import (
    SolutionRecord,
    classify_345,
    family_v1,
    family_v2_k1,
    find_triples,
    groups_345,
)
from .triples import (
    Generator,
    ReciprocalSpec,
    Triple,
    altitude,
    enumerate_generators,
    generator_from_triple,
    has_property,
    triple_from_generator,
)

__version__ = "0.1.0"

"""Seeded random polynomial generators for the property suites.

Coefficients are small integers (-3..3 on each part) and supports are
sparse random monomial sets, which keeps exact arithmetic fast while
still exercising every code path.
"""

from __future__ import annotations

import random

from .ccr import OperatorPoly
from .exactnum import ExactComplex
from .phase import PhasePoly


def _random_terms(rng: random.Random, max_degree: int, max_terms: int, coeff_bound: int):
    keys = [(m, n) for m in range(max_degree + 1) for n in range(max_degree + 1 - m)]
    count = rng.randint(1, max_terms)
    terms = {}
    for key in rng.sample(keys, min(count, len(keys))):
        re = rng.randint(-coeff_bound, coeff_bound)
        im = rng.randint(-coeff_bound, coeff_bound)
        if re or im:
            terms[key] = ExactComplex(re, im)
    return terms


def random_operator_poly(rng: random.Random, max_degree: int = 6, *,
                         max_terms: int = 6, coeff_bound: int = 3) -> OperatorPoly:
    return OperatorPoly(_random_terms(rng, max_degree, max_terms, coeff_bound))


def random_phase_poly(rng: random.Random, max_degree: int = 6, *,
                      max_terms: int = 6, coeff_bound: int = 3) -> PhasePoly:
    return PhasePoly(_random_terms(rng, max_degree, max_terms, coeff_bound))


def random_hermitian_operator_poly(rng: random.Random, max_degree: int = 6, *,
                                   max_terms: int = 6, coeff_bound: int = 3) -> OperatorPoly:
    F = random_operator_poly(rng, max_degree, max_terms=max_terms, coeff_bound=coeff_bound)
    return F + F.dagger()


def random_word(rng: random.Random, max_len: int = 8):
    return tuple(rng.choice(("a", "ad")) for _ in range(rng.randint(0, max_len)))

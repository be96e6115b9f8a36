"""Seeded random generators shared by the property tests and the verifier."""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import Context, Poly
from .quotient import QuotientRing, RingElement


def random_rational(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_poly(ctx: Context, rng: random.Random, max_terms: int = 6,
                max_degree: int = 6, coeff_bound: int = 10) -> Poly:
    """Sparse random polynomial with bounded degree and small coefficients."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(0, max_terms)):
        while True:
            mono = tuple(
                rng.randint(-3, 3) if ctx.is_laurent(name) else rng.randint(0, 3)
                for name in ctx.variables
            )
            if sum(e for e in mono if e > 0) <= max_degree:
                break
        coeff = random_rational(rng, coeff_bound)
        if coeff:
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return Poly(ctx, terms)


def random_element(ring: QuotientRing, rng: random.Random, **kwargs) -> RingElement:
    return ring.nf(random_poly(ring.ctx, rng, **kwargs))


def random_nonzero_element(ring: QuotientRing, rng: random.Random, **kwargs) -> RingElement:
    while True:
        a = random_element(ring, rng, **kwargs)
        if not a.is_zero:
            return a

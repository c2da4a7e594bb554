"""Seeded random generators for metrics, one-forms, and instances.

Kept deliberately sparse (few monomials, small integer coefficients) so the
exact-arithmetic property suites stay fast at desk scale.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from kropinaflat import KropinaInstance, MthRootMetric, MultiPoly, OneForm


def random_x_poly(rng: random.Random, n: int, degree: int = 2, max_terms: int = 2) -> MultiPoly:
    """Random x-only polynomial, possibly zero."""
    poly = MultiPoly.zero(n)
    for _ in range(rng.randint(0, max_terms)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        mono = MultiPoly.const(n, coeff)
        for _ in range(rng.randint(0, degree)):
            mono = mono * MultiPoly.var_x(n, rng.randint(1, n))
        poly = poly + mono
    return poly


def _y_monomial(n: int, exponents: tuple[int, ...]) -> MultiPoly:
    mono = MultiPoly.const(n, 1)
    for i, e in enumerate(exponents, start=1):
        for _ in range(e):
            mono = mono * MultiPoly.var_y(n, i)
    return mono


def random_metric_poly(
    rng: random.Random, n: int, m: int, x_degree: int = 2, max_y_terms: int = 4
) -> MultiPoly:
    """Random y-homogeneous polynomial of degree m, never zero.

    Always includes the pure powers y1^m and yn^m with constant nonzero
    coefficients so the fiber polynomial stays nondegenerate.
    """
    exponent_pool = [
        e for e in itertools.product(range(m + 1), repeat=n) if sum(e) == m
    ]
    a = MultiPoly.zero(n)
    pure_first = tuple(m if i == 0 else 0 for i in range(n))
    pure_last = tuple(m if i == n - 1 else 0 for i in range(n))
    a = a + _y_monomial(n, pure_first) * rng.choice([1, 2, 1, 1])
    a = a + _y_monomial(n, pure_last) * rng.choice([1, 1, 2, 3])
    for _ in range(rng.randint(1, max_y_terms)):
        exps = rng.choice(exponent_pool)
        coeff = random_x_poly(rng, n, degree=x_degree)
        if coeff.is_zero():
            coeff = MultiPoly.const(n, rng.choice([-2, -1, 1, 2]))
        a = a + coeff * _y_monomial(n, exps)
    if a.is_zero() or a.homogeneous_y_degree() != m:  # pragma: no cover
        raise AssertionError("generator produced a degenerate metric polynomial")
    return a


def random_oneform(rng: random.Random, n: int, x_degree: int = 1) -> OneForm:
    while True:
        components = []
        for _ in range(n):
            b = random_x_poly(rng, n, degree=x_degree, max_terms=2)
            if rng.random() < 0.5:
                b = b + rng.choice([-2, -1, 1, 2])
            components.append(b)
        if not all(b.is_zero() for b in components):
            return OneForm(components)


def random_instance(
    rng: random.Random,
    n: int | None = None,
    m: int | None = None,
    x_degree: int = 2,
    beta_x_degree: int | None = None,
) -> KropinaInstance:
    n = n if n is not None else rng.choice([2, 3])
    m = m if m is not None else rng.choice([3, 4, 5])
    a = random_metric_poly(rng, n, m, x_degree=x_degree)
    metric = MthRootMetric(n, m, a, assert_irreducible=True)
    if beta_x_degree is None:
        beta_x_degree = min(x_degree, 1)
    beta = random_oneform(rng, n, x_degree=beta_x_degree)
    return KropinaInstance(metric, beta)


def random_metric(rng: random.Random, n: int, m: int, x_degree: int = 2) -> MthRootMetric:
    return MthRootMetric(
        n, m, random_metric_poly(rng, n, m, x_degree=x_degree), assert_irreducible=True
    )

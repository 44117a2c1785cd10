"""Shared helpers for the test suite.

sympy is used here as an independent desk calculator to cross-check
exact results; the package itself never imports it.
"""

from fractions import Fraction
from random import Random

import sympy

from radsurj.arith import MultiPoly, Role, VarTable

T_ONLY = VarTable(("t",), (Role.PARAMETER,))
TD1 = VarTable(("t", "d1"), (Role.PARAMETER, Role.RADICAL))
TD12 = VarTable(
    ("t", "d1", "d2"),
    (Role.PARAMETER, Role.RADICAL, Role.RADICAL),
)


def to_sympy(f: MultiPoly):
    syms = [sympy.Symbol(n) for n in f.table.names]
    expr = sympy.Integer(0)
    for expo, c in f.coeffs.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, expo):
            if k:
                term *= s**k
        expr += term
    return sympy.expand(expr)


def sym(name: str):
    return sympy.Symbol(name)


def random_poly(
    rng: Random,
    table: VarTable,
    max_exp: int = 3,
    max_terms: int = 4,
    coeff_bound: int = 4,
    only_vars=None,
) -> MultiPoly:
    """Small random polynomial; may be zero."""
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = tuple(
            rng.randint(0, max_exp) if (only_vars is None or i in only_vars) else 0
            for i in range(table.arity)
        )
        c = rng.randint(-coeff_bound, coeff_bound)
        out[expo] = out.get(expo, 0) + c
    return MultiPoly(table, {e: Fraction(c) for e, c in out.items() if c})


def random_nonzero_poly(rng: Random, table: VarTable, **kw) -> MultiPoly:
    while True:
        f = random_poly(rng, table, **kw)
        if not f.is_zero():
            return f


def random_poly_bounded(
    rng: Random,
    table: VarTable,
    bounds,
    max_terms: int = 4,
    coeff_bound: int = 4,
    only_vars=None,
) -> MultiPoly:
    """Random polynomial with a per-variable exponent cap (inclusive)."""
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = tuple(
            rng.randint(0, bounds[i]) if (only_vars is None or i in only_vars) else 0
            for i in range(table.arity)
        )
        c = rng.randint(-coeff_bound, coeff_bound)
        out[expo] = out.get(expo, 0) + c
    return MultiPoly(table, {e: Fraction(c) for e, c in out.items() if c})


def random_tower(rng: Random, m: int, max_e: int = 3, tdeg: int = 4, nested: bool = True):
    """Random valid tower of height m with small radicands."""
    from radsurj.tower import RadicalLevel, validate_tower

    names = ("t",) + tuple(f"d{i + 1}" for i in range(m))
    roles = (Role.PARAMETER,) + (Role.RADICAL,) * m
    table = VarTable(names, roles)
    levels = []
    exponents = []
    for i in range(m):
        e = rng.randint(2, max_e)
        allowed = set(range(1 + i)) if nested else {0}
        bounds = [tdeg] + [exponents[j] - 1 for j in range(i)] + [0] * (m - i)
        while True:
            g = random_poly_bounded(rng, table, bounds, only_vars=allowed)
            if not g.is_zero() and not g.is_const():
                break
        levels.append(RadicalLevel(names[1 + i], e, g))
        exponents.append(e)
    return validate_tower(table, levels)


def random_reduced_poly(rng: Random, tower, tdeg: int = 4, max_terms: int = 4) -> MultiPoly:
    """Random nonzero polynomial already in tower normal form."""
    bounds = [tdeg] + [level.exponent - 1 for level in tower.levels]
    while True:
        f = random_poly_bounded(rng, tower.table, bounds, max_terms=max_terms)
        if not f.is_zero():
            return f

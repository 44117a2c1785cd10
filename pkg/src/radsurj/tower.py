"""Radical towers and the operators built on them.

A tower is a chain of root extractions over the rational function field
in t: level i adjoins a root of Delta_i^e_i = g_i, where the radicand
g_i may mention t and the earlier radicals only.  This module provides

  * validation and weight assignment (the weight of a radical is the
    weighted degree of its radicand divided by its exponent, so that
    Delta_i^e_i and g_i weigh the same),
  * the normal form N(f), reducing every radical exponent below e_i,
  * the normalized remainder R(f), the univariate polynomial obtained
    by eliminating the radicals with successive resultants, together
    with its full elimination trace,
  * the guilt and suspicion predicates on which the surjectivity
    certificates rest, and
  * a fast single-level guilt test that avoids computing R(f).

Polynomials handed to these operators may live over a table larger
than the tower's own (extra coordinate or inverse variables); those
variables are carried through inertly with weight 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .arith import (
    NEG_INF,
    MultiPoly,
    Role,
    VarTable,
    WeightVector,
    leading_form,
    resultant,
    weighted_degree,
)
from .errors import DomainError, InputError, StructuralError, UnsupportedOracleError


@dataclass(frozen=True)
class RadicalLevel:
    """One root extraction: name^exponent = radicand."""

    name: str
    exponent: int
    radicand: MultiPoly


class RadicalTower:
    """A validated chain of radical levels over one parameter variable.

    Immutable once built; suspicion of the radicands is cached because
    the recursive definition revisits lower levels.
    """

    def __init__(self, table: VarTable, levels: Sequence[RadicalLevel]):
        levels = tuple(levels)
        if table.arity != 1 + len(levels):
            raise StructuralError("tower table must hold the parameter and one variable per level")
        if table.roles[0] is not Role.PARAMETER:
            raise StructuralError("first tower variable must be the parameter")
        for i, level in enumerate(levels):
            if table.names[1 + i] != level.name or table.roles[1 + i] is not Role.RADICAL:
                raise StructuralError(f"table does not list radical {level.name!r} at position {i + 1}")
        self.table = table
        self.levels = levels
        self._validate()
        self.weights = self._compute_weights()
        self.nested = any(
            level.radicand.variables() - {0} for level in levels
        )
        self._level_suspicion: dict[int, bool] = {}

    # ------------------------------------------------------------------

    def _validate(self) -> None:
        for i, level in enumerate(self.levels):
            if not isinstance(level.exponent, int) or level.exponent < 2:
                raise InputError(f"level {level.name}: exponent must be an integer >= 2")
            g = level.radicand
            if g.table != self.table:
                raise StructuralError(f"level {level.name}: radicand over a different table")
            if g.is_zero():
                raise InputError(f"level {level.name}: radicand is zero")
            if g.is_const():
                raise InputError(f"level {level.name}: radicand is constant, the root is not a new function of t")
            allowed = set(range(1 + i))
            late = g.variables() - allowed
            if late:
                names = ", ".join(self.table.names[j] for j in sorted(late))
                raise InputError(f"level {level.name}: radicand references later radical(s) {names}")
            for j in range(i):
                if g.degree(1 + j) >= self.levels[j].exponent:
                    raise InputError(
                        f"level {level.name}: radicand is not reduced, "
                        f"degree in {self.levels[j].name} reaches its exponent"
                    )

    def _compute_weights(self) -> WeightVector:
        weights: list[Fraction] = [Fraction(1)]
        for level in self.levels:
            wdeg = max(
                sum(w * k for w, k in zip(weights, expo) if k)
                for expo in level.radicand.coeffs
            )
            weights.append(Fraction(wdeg, level.exponent))
        return WeightVector(self.table, tuple(weights))

    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.levels)

    @property
    def exponent_product(self) -> int:
        return prod(level.exponent for level in self.levels)

    def level_poly(self, i: int, table: VarTable | None = None) -> MultiPoly:
        """The tower polynomial Delta_i^e_i - g_i, optionally transported."""
        level = self.levels[i]
        var = MultiPoly.var(self.table, level.name)
        e = var ** level.exponent - level.radicand
        return e if table is None or table == self.table else e.transport(table)

    def check_table(self, table: VarTable) -> None:
        """Every tower variable must appear in table with its role."""
        for name, role in zip(self.table.names, self.table.roles):
            i = table.index(name)
            if table.roles[i] is not role:
                raise StructuralError(f"variable {name!r} has the wrong role in this table")

    def weight_vector(self, table: VarTable | None = None) -> WeightVector:
        """Tower weights over table; non-tower variables weigh 0."""
        if table is None or table == self.table:
            return self.weights
        self.check_table(table)
        by_name = dict(zip(self.table.names, self.weights.weights))
        return WeightVector(
            table,
            tuple(by_name.get(n, Fraction(0)) for n in table.names),
        )

    def level_is_suspicious(self, i: int) -> bool:
        if i not in self._level_suspicion:
            report = is_suspicious(self.levels[i].radicand, self)
            self._level_suspicion[i] = report.suspicious
        return self._level_suspicion[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadicalTower):
            return NotImplemented
        return self.table == other.table and self.levels == other.levels

    def __repr__(self) -> str:
        inner = "; ".join(
            f"{lv.name}^{lv.exponent} = {lv.radicand}" for lv in self.levels
        )
        return f"RadicalTower({inner or self.table.names[0]})"


def validate_tower(table: VarTable, levels: Sequence[RadicalLevel]) -> RadicalTower:
    """Build a tower, checking order, reducedness and exponents."""
    return RadicalTower(table, levels)


# ----------------------------------------------------------------------
# normal form and normalized remainder


def normal_form(f: MultiPoly, tower: RadicalTower) -> MultiPoly:
    """Reduce every radical exponent below its level exponent.

    One downward pass suffices: substituting at level i only introduces
    powers of earlier radicals, which later iterations clean up.
    """
    tower.check_table(f.table)
    for i in reversed(range(tower.m)):
        level = tower.levels[i]
        var = f.table.index(level.name)
        e = level.exponent
        if f.degree(var) < e:
            continue
        g = level.radicand if f.table == tower.table else level.radicand.transport(f.table)
        delta = MultiPoly.var(f.table, level.name)
        gpow = {0: MultiPoly.one(f.table)}
        out = MultiPoly.zero(f.table)
        for k, c in enumerate(f.univariate_coeffs(var)):
            if c.is_zero():
                continue
            q, r = divmod(k, e)
            if q not in gpow:
                gpow[q] = gpow[max(gpow)] * g ** (q - max(gpow))
            out = out + c * gpow[q] * delta**r
        f = out
    return f


def remainder_trace(f: MultiPoly, tower: RadicalTower) -> list[MultiPoly]:
    """The elimination sequence f_m = N(f), ..., f_0 = R(f).

    Each step takes the resultant of the tower polynomial (first
    argument) with the running value, eliminating the highest radical
    still present.  Intermediate values are not re-normalized.
    """
    f_k = normal_form(f, tower)
    trace = [f_k]
    for i in reversed(range(tower.m)):
        var = f_k.table.index(tower.levels[i].name)
        e_poly = tower.level_poly(i, f_k.table)
        f_k = resultant(e_poly, f_k, var)
        trace.append(f_k)
    return trace


def normalized_remainder(f: MultiPoly, tower: RadicalTower) -> MultiPoly:
    """R(f): radicals eliminated, a polynomial in t (and inert extras)."""
    return remainder_trace(f, tower)[-1]


def full_conjugate_product(f: MultiPoly, tower: RadicalTower) -> MultiPoly:
    """Brute-force conjugate product over all sign choices, normalized.

    Only towers with every exponent equal to 2 are supported, where
    conjugation is just a sign flip per radical.  For unnested towers
    this equals normalized_remainder; for nested ones it differs, which
    is exactly what makes it a useful cross-check.
    """
    for level in tower.levels:
        if level.exponent != 2:
            raise UnsupportedOracleError(
                f"sign-product oracle needs exponent 2, level {level.name} has {level.exponent}"
            )
    tower.check_table(f.table)
    radical_vars = [f.table.index(level.name) for level in tower.levels]
    product = MultiPoly.one(f.table)
    for signs in itertools.product((1, -1), repeat=tower.m):
        flipped = {}
        for expo, c in f.coeffs.items():
            factor = 1
            for s, var in zip(signs, radical_vars):
                if s < 0 and expo[var] % 2:
                    factor = -factor
            flipped[expo] = c * factor
        product = product * MultiPoly(f.table, flipped)
    return normal_form(product, tower)


# ----------------------------------------------------------------------
# guilt and suspicion


@dataclass(frozen=True)
class GuiltReport:
    """Outcome of the degree-drop test for one polynomial."""

    expected_degree: Fraction
    actual_degree: Fraction | float
    guilty: bool
    trace: tuple[MultiPoly, ...]

    @property
    def remainder(self) -> MultiPoly:
        return self.trace[-1]


def is_guilty(f: MultiPoly, tower: RadicalTower) -> GuiltReport:
    """Does R(f) lose degree against the generic bound deg_w(f)*e_1...e_m?"""
    if f.is_zero():
        raise DomainError("guilt is undefined for the zero polynomial")
    trace = remainder_trace(f, tower)
    nf = trace[0]
    if nf.is_zero():
        raise DomainError("polynomial vanishes modulo the tower")
    wv = tower.weight_vector(f.table)
    expected = weighted_degree(nf, wv) * tower.exponent_product
    actual = weighted_degree(trace[-1], wv)
    return GuiltReport(expected, actual, expected > actual, tuple(trace))


@dataclass(frozen=True)
class SuspicionReport:
    """Outcome of the syntactic over-approximation of guilt."""

    suspicious: bool
    reason: str | None  # "multiple-leading-terms" or "suspicious-radical"
    level: int | None  # offending tower level for the radical clause
    lead: MultiPoly


def is_suspicious(f: MultiPoly, tower: RadicalTower) -> SuspicionReport:
    """Tied leading terms, or a suspicious radicand in the lone leader.

    Recursive through the tower: a radical counts as tainted when its
    own radicand is suspicious.
    """
    nf = normal_form(f, tower)
    if nf.is_zero():
        raise DomainError("suspicion is undefined for the zero polynomial")
    wv = tower.weight_vector(f.table)
    lead = leading_form(nf, wv)
    if len(lead.coeffs) >= 2:
        return SuspicionReport(True, "multiple-leading-terms", None, lead)
    (expo,) = lead.coeffs
    for i, level in enumerate(tower.levels):
        var = f.table.index(level.name)
        if expo[var] and tower.level_is_suspicious(i):
            return SuspicionReport(True, "suspicious-radical", i, lead)
    return SuspicionReport(False, None, None, lead)


def fast_guilty_single(f: MultiPoly, tower: RadicalTower) -> bool:
    """Guilt for a height-1 tower without computing R(f).

    Collects the coefficients c_i(t) of f = sum c_i(t) Delta^i whose
    term c_i(t) Delta^i attains the weighted degree, forms the leading
    pattern f_l(Delta) from their leading coefficients, and tests
    whether Res(f_l, Delta^e - lc(g)) vanishes.
    """
    if tower.m != 1:
        raise DomainError("fast guilt test requires a tower of height 1")
    nf = normal_form(f, tower)
    if nf.is_zero():
        raise DomainError("guilt is undefined for the zero polynomial")
    if not nf.variables() <= {0, 1}:
        raise DomainError("fast guilt test needs a polynomial in t and the radical only")
    level = tower.levels[0]
    e = level.exponent
    g = level.radicand
    k = int(g.degree(0))
    a_k = g.coeff_poly(0, k).const_value()
    var = nf.table.index(level.name)
    coeffs = nf.univariate_coeffs(var)
    degrees = {}
    for i, c in enumerate(coeffs):
        if not c.is_zero():
            degrees[i] = c.degree(0) + Fraction(k, e) * i
    top = max(degrees.values())
    lead_pattern = MultiPoly.zero(nf.table)
    delta = MultiPoly.var(nf.table, level.name)
    for i, d in degrees.items():
        if d == top:
            lc = coeffs[i].coeff_poly(0, int(coeffs[i].degree(0))).const_value()
            lead_pattern = lead_pattern + lc * delta**i
    test_poly = delta**e - MultiPoly.const(nf.table, a_k)
    return resultant(lead_pattern, test_poly, var).is_zero()

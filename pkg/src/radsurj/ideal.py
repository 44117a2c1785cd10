"""Groebner bases over the rationals, sized for desk-scale ideals.

Buchberger's algorithm with the normal pair-selection strategy and the
coprime-leading-monomial criterion, always returning the reduced basis
(unique for a given term order, so recomputation and permutation of the
generators reproduce it bit for bit).  A step budget guards against
runaway computations; exceeding it raises ResourceError so callers can
degrade to cheaper sufficient checks.

Term orders: lexicographic, graded reverse lexicographic, and a block
order (grevlex within each block) whose first block is eliminated.  A
monomial containing an eliminated variable is larger than any monomial
without one, which is what makes elimination ideals drop out of a basis.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Exponent, MultiPoly, VarTable
from .errors import DomainError, ResourceError, StructuralError

DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: kind plus variable priority, split for blocks.

    priority lists variable indices from most to least significant; for
    a block order the first `split` entries form the eliminated block.
    """

    table: VarTable
    kind: str
    priority: tuple[int, ...]
    split: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grevlex", "block"):
            raise StructuralError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(self.table.arity)):
            raise StructuralError("order priority must be a permutation of the variables")
        if self.kind == "block" and not 0 <= self.split <= len(self.priority):
            raise StructuralError("block split out of range")

    @staticmethod
    def lex(table: VarTable, names: Sequence[str] | None = None) -> "TermOrder":
        return TermOrder(table, "lex", _priority(table, names))

    @staticmethod
    def grevlex(table: VarTable, names: Sequence[str] | None = None) -> "TermOrder":
        return TermOrder(table, "grevlex", _priority(table, names))

    @staticmethod
    def block(table: VarTable, eliminate: Sequence[str], keep: Sequence[str]) -> "TermOrder":
        if sorted((*eliminate, *keep)) != sorted(table.names):
            raise StructuralError("block order must partition the variable table")
        prio = tuple(table.index(n) for n in (*eliminate, *keep))
        return TermOrder(table, "block", prio, split=len(eliminate))

    def key(self, expo: Exponent):
        if self.kind == "lex":
            return tuple(expo[v] for v in self.priority)
        if self.kind == "grevlex":
            return (sum(expo), tuple(-expo[v] for v in reversed(self.priority)))
        head = self.priority[: self.split]
        tail = self.priority[self.split:]
        return (
            sum(expo[v] for v in head),
            tuple(-expo[v] for v in reversed(head)),
            sum(expo[v] for v in tail),
            tuple(-expo[v] for v in reversed(tail)),
        )

    def leading(self, f: MultiPoly) -> tuple[Exponent, Fraction]:
        if f.is_zero():
            raise DomainError("zero polynomial has no leading term")
        expo = max(f.coeffs, key=self.key)
        return expo, f.coeffs[expo]


def _priority(table: VarTable, names: Sequence[str] | None) -> tuple[int, ...]:
    if names is None:
        # default: last table variable most significant, parameter last
        return tuple(reversed(range(table.arity)))
    if sorted(names) != sorted(table.names):
        raise StructuralError("order names must be a permutation of the variable table")
    return tuple(table.index(n) for n in names)


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple[MultiPoly, ...]
    order: TermOrder
    reduced: bool


class _Budget:
    def __init__(self, limit: int):
        self.remaining = limit

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise ResourceError("Groebner step budget exhausted")


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monomial_quot(table: VarTable, a: Exponent, b: Exponent, c: Fraction) -> MultiPoly:
    return MultiPoly.monomial(table, tuple(x - y for x, y in zip(a, b)), c)


def _reduce_full(f: MultiPoly, basis: list[MultiPoly], order: TermOrder, budget: _Budget) -> MultiPoly:
    """Fully reduce f: no remaining monomial divisible by a basis lead."""
    leads = [order.leading(g) for g in basis]
    table = f.table
    tail = f
    done: dict[Exponent, Fraction] = {}
    while not tail.is_zero():
        expo, c = order.leading(tail)
        for g, (lme, lmc) in zip(basis, leads):
            if _divides(lme, expo):
                budget.spend()
                tail = tail - _monomial_quot(table, expo, lme, c / lmc) * g
                break
        else:
            done[expo] = c
            tail = tail - MultiPoly.monomial(table, expo, c)
    return MultiPoly(table, done)


def _spoly(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    (fe, fc) = order.leading(f)
    (ge, gc) = order.leading(g)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    return _monomial_quot(f.table, lcm, fe, Fraction(1, 1) / fc) * f - _monomial_quot(
        g.table, lcm, ge, Fraction(1, 1) / gc
    ) * g


def buchberger(
    gens: Sequence[MultiPoly],
    order: TermOrder,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> IdealBasis:
    """Reduced Groebner basis; deterministic for a fixed order."""
    work = [g for g in gens if not g.is_zero()]
    for g in work:
        if g.table != order.table:
            raise StructuralError("generator over a different table than the order")
    budget = _Budget(step_budget)
    if not work:
        return IdealBasis((), order, True)
    basis: list[MultiPoly] = []
    for g in work:
        # interreduce the inputs a little; keeps pair counts down
        r = _reduce_full(g, basis, order, budget) if basis else g
        if not r.is_zero():
            basis.append(r)
    pairs: list[tuple[int, int, int]] = []
    for i, j in itertools.combinations(range(len(basis)), 2):
        _push_pair(pairs, basis, order, i, j)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        fe, _ = order.leading(basis[i])
        ge, _ = order.leading(basis[j])
        if all(a == 0 or b == 0 for a, b in zip(fe, ge)):
            continue  # coprime leading monomials: S-poly reduces to zero
        budget.spend()
        r = _reduce_full(_spoly(basis[i], basis[j], order), basis, order, budget)
        if r.is_zero():
            continue
        basis.append(r)
        new = len(basis) - 1
        for i2 in range(new):
            _push_pair(pairs, basis, order, i2, new)
    return IdealBasis(_reduce_basis(basis, order, budget), order, True)


def _push_pair(pairs, basis, order, i, j) -> None:
    fe, _ = order.leading(basis[i])
    ge, _ = order.leading(basis[j])
    lcm_deg = sum(max(a, b) for a, b in zip(fe, ge))
    heapq.heappush(pairs, (lcm_deg, i, j))


def _reduce_basis(basis: list[MultiPoly], order: TermOrder, budget: _Budget) -> tuple[MultiPoly, ...]:
    # minimal: drop generators whose lead another lead divides
    keep: list[MultiPoly] = []
    leads = [order.leading(g)[0] for g in basis]
    for i, g in enumerate(basis):
        dominated = any(
            j != i and _divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        )
        if not dominated:
            keep.append(g)
    # interreduce tails and normalize to monic
    reduced: list[MultiPoly] = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _reduce_full(g, others, order, budget) if others else g
        lc = order.leading(r)[1]
        reduced.append(r * (1 / lc))
    reduced.sort(key=lambda p: order.key(order.leading(p)[0]), reverse=True)
    return tuple(reduced)


# ----------------------------------------------------------------------
# consumers


def ideal_is_trivial(
    gens: Sequence[MultiPoly],
    order: TermOrder | None = None,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> bool:
    """Is the ideal the whole ring?  Order-independent."""
    nonzero = [g for g in gens if not g.is_zero()]
    if any(g.is_const() for g in nonzero):
        return True
    if not nonzero:
        return False
    if order is None:
        order = TermOrder.grevlex(nonzero[0].table)
    basis = buchberger(nonzero, order, step_budget)
    return len(basis.generators) == 1 and basis.generators[0].is_const()


def elimination_ideal(
    gens: Sequence[MultiPoly],
    keep: Sequence[str],
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> tuple[MultiPoly, ...]:
    """Generators of the ideal's intersection with the kept variables."""
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return ()
    table = nonzero[0].table
    keep = list(keep)
    eliminate = [n for n in table.names if n not in keep]
    order = TermOrder.block(table, eliminate, keep)
    basis = buchberger(nonzero, order, step_budget)
    keep_idx = {table.index(n) for n in keep}
    return tuple(g for g in basis.generators if g.variables() <= keep_idx)


def is_zero_dimensional(basis: IdealBasis) -> bool:
    """Finiteness of the variety: every variable has a pure-power lead."""
    if not basis.reduced:
        raise DomainError("zero-dimensionality test needs a reduced basis")
    gens = basis.generators
    if any(g.is_const() and not g.is_zero() for g in gens):
        return True  # unit ideal, empty variety
    if not gens:
        return False
    table = basis.order.table
    covered = set()
    for g in gens:
        expo = basis.order.leading(g)[0]
        support = [v for v, k in enumerate(expo) if k]
        if len(support) == 1:
            covered.add(support[0])
    return covered == set(range(table.arity))

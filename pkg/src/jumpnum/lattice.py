"""Exact linear algebra on the lattice of exceptional divisors.

A divisor is carried in one of three integral bases: the strict
transforms (E), the total transforms (E*), or the dual basis (E^) whose
coordinates are the factorization multiplicities.  Base changes are exact
integer/rational matrix products against the proximity matrix, its inverse
and the valuation matrix; no floating point is used anywhere, so floor and
ceiling operations downstream stay trustworthy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import (
    Matrix,
    ResolutionGraph,
    adjacency,
    ensure_valid,
    inverse_proximity,
    intersection_form,
)

__all__ = [
    "Basis",
    "Divisor",
    "ValuationTable",
    "CanonicalData",
    "valuation_table",
    "to_basis",
    "canonical",
    "is_antinef",
    "antinef_closure",
    "valuation_ratio",
]


class Basis(enum.Enum):
    """Coordinate system for divisors on the exceptional lattice."""

    E = "E"          # strict transforms; coordinates are valuation values
    E_STAR = "E*"    # total transforms
    E_HAT = "E^"     # dual basis; coordinates are factorization multiplicities


@dataclass(frozen=True)
class Divisor:
    """Exact coordinates of a lattice divisor in a declared basis."""

    coords: tuple[Fraction, ...]
    basis: Basis

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def int_coords(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("divisor has non-integral coordinates")
        return tuple(int(c) for c in self.coords)


@dataclass(frozen=True)
class ValuationTable:
    """Symmetric positive matrix of pairwise valuation values.

    Entry (mu, nu) is the value the mu-th divisorial valuation takes on
    the nu-th simple ideal; it equals the inverse of the intersection
    form, hence the product of the inverse proximity matrix with its own
    transpose.
    """

    matrix: Matrix

    @property
    def n(self) -> int:
        return len(self.matrix)

    def entry(self, mu: int, nu: int) -> int:
        return self.matrix[mu - 1][nu - 1]

    def row(self, mu: int) -> tuple[int, ...]:
        return self.matrix[mu - 1]


@dataclass(frozen=True)
class CanonicalData:
    """Canonical divisor in E-coordinates (k) and dual coordinates (k_hat)."""

    k: tuple[int, ...]
    k_hat: tuple[int, ...]


@lru_cache(maxsize=None)
def valuation_table(graph: ResolutionGraph) -> ValuationTable:
    """Exact inverse of the intersection form, computed as Q Q^t."""
    ensure_valid(graph)
    q = inverse_proximity(graph)
    n = graph.n
    rows = []
    for mu in range(n):
        row = []
        for nu in range(n):
            qmu, qnu = q[mu], q[nu]
            row.append(sum(qmu[k] * qnu[k] for k in range(min(mu, nu) + 1)))
        rows.append(tuple(row))
    return ValuationTable(tuple(rows))


def _vec_times(vec, matrix):
    n = len(vec)
    return tuple(sum(vec[k] * matrix[k][j] for k in range(n)) for j in range(n))


def _vec_times_transpose(vec, matrix):
    n = len(vec)
    return tuple(sum(vec[k] * matrix[j][k] for k in range(n)) for j in range(n))


def to_basis(divisor: Divisor, target: Basis, graph: ResolutionGraph) -> Divisor:
    """Rewrite a divisor exactly in another basis.

    E -> E* multiplies by the transposed proximity matrix, E* -> E^ by the
    proximity matrix itself; the inverse steps use the inverse proximity
    matrix.  Round trips are exact identities.
    """
    ensure_valid(graph)
    if divisor.n != graph.n:
        raise ValueError("divisor dimension does not match the graph")
    if divisor.basis == target:
        return divisor
    order = (Basis.E, Basis.E_STAR, Basis.E_HAT)
    i, j = order.index(divisor.basis), order.index(target)
    coords = divisor.coords
    q = inverse_proximity(graph)
    while i < j:  # E -> E* -> E^
        if i == 0:
            coords = _star_from_e(coords, graph)
        else:
            coords = _hat_from_star(coords, graph)
        i += 1
    while i > j:
        if i == 2:
            coords = _vec_times(coords, q)  # E^ -> E*
        else:
            coords = _vec_times_transpose(coords, q)  # E* -> E
        i -= 1
    return Divisor(coords, target)


def _star_from_e(coords, graph):
    return tuple(
        coords[mu - 1] - sum(coords[nu - 1] for nu in graph.prox[mu - 1])
        for mu in range(1, graph.n + 1)
    )


def _hat_from_star(coords, graph):
    n = graph.n
    out = list(coords)
    for nu in range(2, n + 1):
        for mu in graph.prox[nu - 1]:
            out[mu - 1] -= coords[nu - 1]
    return tuple(out)


def canonical(graph: ResolutionGraph) -> CanonicalData:
    """Canonical divisor: row sums of the inverse proximity matrix in
    E-coordinates, two minus the weight in dual coordinates."""
    ensure_valid(graph)
    q = inverse_proximity(graph)
    dual = adjacency(graph)
    k = tuple(sum(row) for row in q)
    k_hat = tuple(2 - dual.weight(mu) for mu in range(1, graph.n + 1))
    return CanonicalData(k, k_hat)


def is_antinef(divisor: Divisor, graph: ResolutionGraph) -> bool:
    """True when every dual-basis coordinate is nonnegative."""
    hat = to_basis(divisor, Basis.E_HAT, graph)
    return all(c >= 0 for c in hat.coords)


def antinef_closure(divisor: Divisor, graph: ResolutionGraph) -> Divisor:
    """Minimal antinef divisor dominating the input, via unloading.

    The input must have integer E-coordinates.  Negative coordinates are
    first clamped to zero (global sections only see the effective part),
    then every vertex with a negative dual coordinate is raised by the
    least amount that could clear it.  Each step stays below every antinef
    divisor dominating the input, so the loop terminates at the minimum.
    """
    ensure_valid(graph)
    e = to_basis(divisor, Basis.E, graph)
    if not e.is_integral():
        raise ValueError("antinef closure needs integral E-coordinates")
    n = graph.n
    dual = adjacency(graph)
    g = [max(int(c), 0) for c in e.coords]
    form = intersection_form(graph)
    ghat = [
        sum(g[k] * form[k][j] for k in range(n) if g[k] and form[k][j])
        for j in range(n)
    ]
    pending = [j for j in range(n) if ghat[j] < 0]
    while pending:
        j = pending.pop()
        deficit = -ghat[j]
        if deficit <= 0:
            continue
        w = dual.weight(j + 1)
        step = -(-deficit // w)
        g[j] += step
        ghat[j] += w * step
        for nu in dual.neighbors_of(j + 1):
            ghat[nu - 1] -= step
            if ghat[nu - 1] < 0:
                pending.append(nu - 1)
    return Divisor(tuple(Fraction(x) for x in g), Basis.E)


def valuation_ratio(table: ValuationTable, mu: int, gamma: int, nu: int) -> Fraction:
    """Ratio of the gamma-row to the mu-row of the valuation table at nu.

    As a function of nu this is strictly increasing along the path from mu
    to gamma and constant on every path leaving it.
    """
    return Fraction(table.entry(gamma, nu), table.entry(mu, nu))

"""Closed-formula enumeration of jumping numbers.

A positive rational is a jumping number supported at a vertex exactly
when an integer score -- the scaled candidate plus a valence correction,
minus one rounded-up term per branch -- lands in the vertex semigroup.
Candidates at a vertex all have the vertex's valuation as denominator, so
each support vertex is a plain scan over numerators.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from functools import lru_cache

from .graph import adjacency, branch
from .ideals import IdealSpec, JumpingSet
from .semigroups import branch_gcd, membership, vertex_semigroup

__all__ = [
    "ceil_positive",
    "branch_value",
    "jump_test_value",
    "jumping_numbers_at",
    "support_vertices",
    "jumping_numbers",
    "log_canonical_threshold",
]

LCT_BOUND_CAP = 1 << 16


def ceil_positive(x) -> int:
    """Round up to the nearest positive integer."""
    return max(math.ceil(x), 1)


def branch_value(ideal: IdealSpec, mu: int, nu: int) -> int:
    """Factorization-weighted valuation mass of the branch from mu towards nu."""
    v = ideal.table
    fac = ideal.factorization
    return sum(fac[i - 1] * v.entry(mu, i) for i in branch(ideal.graph, mu, nu))


@lru_cache(maxsize=4096)
def _vertex_context(ideal: IdealSpec, mu: int):
    dual = adjacency(ideal.graph)
    terms = tuple(
        (branch_gcd(ideal.table, ideal.graph, mu, nu), branch_value(ideal, mu, nu))
        for nu in dual.neighbors_of(mu)
    )
    offset = (dual.valence(mu) - 2) * ideal.table.entry(mu, mu)
    return ideal.valuations[mu - 1], offset, terms, vertex_semigroup(
        ideal.table, ideal.graph, mu
    )


def jump_test_value(ideal: IdealSpec, mu: int, xi: Fraction) -> int:
    """Integer score whose semigroup membership decides whether xi is a
    jumping number supported at mu.

    Only candidates whose product with the vertex valuation is an integer
    are admissible; anything else is rejected rather than evaluated.
    """
    d_mu, offset, terms, _ = _vertex_context(ideal, mu)
    scaled = xi * d_mu
    if scaled.denominator != 1:
        raise ValueError(
            f"{xi} is not a candidate at vertex {mu}: {xi}*{d_mu} is not an integer"
        )
    return int(scaled) + offset - sum(
        s * ceil_positive(Fraction(weight, s) * xi) for s, weight in terms
    )


def _semigroup_scan(ideal: IdealSpec, mu: int, bound: Fraction):
    d_mu, offset, terms, semigroup = _vertex_context(ideal, mu)
    for t in range(1, math.floor(bound * d_mu) + 1):
        score = t + offset - sum(
            s * ceil_positive(Fraction(weight * t, s * d_mu)) for s, weight in terms
        )
        if membership(semigroup, score):
            yield Fraction(t, d_mu)


def jumping_numbers_at(ideal: IdealSpec, mu: int, bound) -> JumpingSet:
    """Jumping numbers supported at one vertex, up to and including bound."""
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    support = frozenset({mu})
    return JumpingSet(
        tuple((xi, support) for xi in _semigroup_scan(ideal, mu, bound))
    )


def support_vertices(ideal: IdealSpec) -> frozenset:
    """Vertices that can support a jumping number: the stars of the dual
    graph and the vertices carrying a simple factor."""
    dual = adjacency(ideal.graph)
    return frozenset(
        mu
        for mu in range(1, ideal.graph.n + 1)
        if dual.valence(mu) >= 3 or ideal.factorization[mu - 1] > 0
    )


def jumping_numbers(ideal: IdealSpec, bound) -> JumpingSet:
    """All jumping numbers up to the bound, with supporting vertices."""
    bound = Fraction(bound)
    merged: dict[Fraction, set] = {}
    for mu in sorted(support_vertices(ideal)):
        for xi in _semigroup_scan(ideal, mu, bound):
            merged.setdefault(xi, set()).add(mu)
    return JumpingSet(
        tuple((xi, frozenset(merged[xi])) for xi in sorted(merged))
    )


def log_canonical_threshold(ideal: IdealSpec) -> Fraction:
    """Smallest jumping number.

    A bound of two always suffices for an integral factorization; the loop
    still escalates defensively instead of relying on that fact.
    """
    bound = Fraction(2)
    while bound <= LCT_BOUND_CAP:
        found = jumping_numbers(ideal, bound)
        if found.entries:
            return found.entries[0][0]
        warnings.warn(
            f"no jumping number up to {bound}; retrying with bound {bound * 2}"
        )
        bound *= 2
    raise RuntimeError("no jumping number found below the bound cap")

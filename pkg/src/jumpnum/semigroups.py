"""Numerical semigroups attached to the vertices of the dual graph.

Each branch emanating from a vertex contributes the gcd of the valuation
values at its ends; those gcds, together with the vertex's own diagonal
value, generate the semigroup that decides which candidates are jumping
numbers.  Membership tests are exact: a bitset closure under generator
addition, with the two-coprime-generator Frobenius bound as a shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .graph import ResolutionGraph, adjacency, branch
from .lattice import ValuationTable

__all__ = [
    "NumericalSemigroup",
    "membership",
    "branch_gcd",
    "frobenius_multiple",
    "vertex_semigroup",
    "value_semigroup",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Additive submonoid of the nonnegative integers, by generators."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        object.__setattr__(self, "generators", gens)

    def __contains__(self, x) -> bool:
        return membership(self, x)

    def gcd(self) -> int:
        return math.gcd(*self.generators) if len(self.generators) > 1 else self.generators[0]

    def frobenius_number(self) -> int:
        """Largest integer outside the semigroup; -1 when there is none.

        Only defined when the generators are globally coprime (otherwise
        the complement is infinite).
        """
        if self.gcd() != 1:
            raise ValueError("complement is infinite unless the gcd is 1")
        step = self.generators[0]
        limit = 4 * max(self.generators) + step
        while True:
            bits = _closure_bits(self.generators, limit)
            window = (1 << step) - 1
            # A run of `step` consecutive members is closed under adding
            # the smallest generator, so everything above it is a member.
            top = next(
                (
                    x
                    for x in range(limit - step + 1, -1, -1)
                    if bits >> x & window == window
                ),
                None,
            )
            if top is not None:
                for x in range(top - 1, -1, -1):
                    if not bits >> x & 1:
                        return x
                return -1
            limit *= 2


def _coprime_pair_bound(generators: tuple[int, ...]):
    """Least (a-1)(b-1) over coprime generator pairs; every integer at or
    above it is a member.  None when no two generators are coprime, in
    which case the shortcut does not apply."""
    if generators[0] == 1:
        return 0
    best = None
    for i, a in enumerate(generators):
        for b in generators[i + 1:]:
            if math.gcd(a, b) == 1:
                conductor = (a - 1) * (b - 1)
                if best is None or conductor < best:
                    best = conductor
    return best


@lru_cache(maxsize=4096)
def _closure_bits(generators: tuple[int, ...], limit: int) -> int:
    """Bitset of members in 0..limit, closed under generator addition."""
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in generators:
        if g > limit:
            continue
        while True:
            more = (bits | (bits << g)) & mask
            if more == bits:
                break
            bits = more
    return bits


def membership(semigroup: NumericalSemigroup, x: int) -> bool:
    """Exact membership test; always false for negative integers."""
    if x < 0:
        return False
    if x == 0:
        return True
    gens = semigroup.generators
    g = semigroup.gcd()
    if x % g:
        return False
    bound = _coprime_pair_bound(tuple(v // g for v in gens))
    if bound is not None and x // g >= bound:
        return True
    return bool(_closure_bits(gens, x) >> x & 1)


def branch_gcd(table: ValuationTable, graph: ResolutionGraph, mu: int, nu: int) -> int:
    """Gcd of the valuation values at the graph ends lying in the branch
    emanating from mu towards nu."""
    if mu == nu:
        raise ValueError("the branch from a vertex towards itself is empty")
    component = branch(graph, mu, nu)
    dual = adjacency(graph)
    end_values = [table.entry(mu, tau) for tau in component if dual.valence(tau) <= 1]
    return math.gcd(*end_values) if len(end_values) > 1 else end_values[0]


def frobenius_multiple(table: ValuationTable, graph: ResolutionGraph, mu: int, nu: int) -> int:
    """Largest multiple of the branch gcd missing from the branch monoid.

    Computed by the signed valence sum over the branch; negative values
    mean no nonnegative multiple is missing.  By convention the vertex
    itself yields minus its diagonal value.
    """
    if mu == nu:
        return -table.entry(mu, mu)
    dual = adjacency(graph)
    return sum(
        (dual.valence(j) - 2) * table.entry(mu, j) for j in branch(graph, mu, nu)
    )


def vertex_semigroup(table: ValuationTable, graph: ResolutionGraph, mu: int) -> NumericalSemigroup:
    """Semigroup generated by the branch gcds at mu and its diagonal value.

    On a one-vertex graph this is the full set of nonnegative integers.
    """
    dual = adjacency(graph)
    gens = {branch_gcd(table, graph, mu, nu) for nu in dual.neighbors_of(mu)}
    gens.add(table.entry(mu, mu))
    return NumericalSemigroup(tuple(sorted(gens)))


def value_semigroup(table: ValuationTable, graph: ResolutionGraph, mu: int) -> NumericalSemigroup:
    """Semigroup of the mu-th valuation, generated by its values at the
    graph ends (including mu itself when mu is an end)."""
    dual = adjacency(graph)
    gens = {table.entry(mu, tau) for tau in dual.ends}
    return NumericalSemigroup(tuple(sorted(gens)))

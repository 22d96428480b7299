"""Complete ideals presented by resolution data, and sets of jumping numbers.

An ideal of finite colength is pinned down by a resolution graph together
with the multiplicities of its simple factors.  The induced valuation
vector is the factorization vector pushed through the valuation table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .graph import ResolutionGraph, ensure_valid
from .lattice import ValuationTable, valuation_table

__all__ = ["IdealSpec", "JumpingSet"]


@dataclass(frozen=True)
class IdealSpec:
    """A complete finite-colength ideal given by its resolution.

    ``factorization`` holds the exponents of the simple-ideal factors,
    one per vertex; it must be nonnegative and not identically zero.
    """

    graph: ResolutionGraph
    factorization: tuple[int, ...]

    def __post_init__(self):
        ensure_valid(self.graph)
        fac = tuple(int(x) for x in self.factorization)
        if len(fac) != self.graph.n:
            raise ValueError("factorization length does not match the graph")
        if any(x < 0 for x in fac):
            raise ValueError("factorization multiplicities must be nonnegative")
        if not any(fac):
            raise ValueError("factorization must have a positive entry")
        object.__setattr__(self, "factorization", fac)

    @cached_property
    def table(self) -> ValuationTable:
        return valuation_table(self.graph)

    @cached_property
    def valuations(self) -> tuple[int, ...]:
        """Valuation vector: factorization times the valuation table."""
        v = self.table.matrix
        n = self.graph.n
        fac = self.factorization
        return tuple(
            sum(fac[i] * v[i][j] for i in range(n) if fac[i]) for j in range(n)
        )

    def power(self, exponent: int) -> "IdealSpec":
        if exponent < 1:
            raise ValueError("exponent must be positive")
        return IdealSpec(self.graph, tuple(x * exponent for x in self.factorization))


@dataclass(frozen=True)
class JumpingSet:
    """Finite sorted set of jumping numbers with their supporting vertices."""

    entries: tuple[tuple[Fraction, frozenset], ...]

    def __post_init__(self):
        values = [xi for xi, _ in self.entries]
        if values != sorted(set(values)):
            raise ValueError("entries must be strictly increasing")
        if any(xi <= 0 for xi in values):
            raise ValueError("jumping numbers are positive")
        if any(not support for _, support in self.entries):
            raise ValueError("support sets must be nonempty")

    def values(self) -> tuple[Fraction, ...]:
        return tuple(xi for xi, _ in self.entries)

    def support_of(self, xi: Fraction) -> frozenset:
        for value, support in self.entries:
            if value == xi:
                return support
        raise KeyError(xi)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

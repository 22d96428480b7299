"""Multiplier-ideal ground truth for differential testing.

This module detects jumping numbers the slow, definitional way: the
multiplier ideal at a parameter is the complete ideal cut out by the
rounded-down scaled divisor minus the canonical divisor, realized as the
antinef closure of its effective part.  A parameter jumps exactly when
that ideal differs from the one at the left limit.  Nothing here touches
the semigroup machinery or the closed formula, so agreement between the
two pipelines is meaningful evidence for both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ideals import IdealSpec, JumpingSet
from .lattice import Basis, Divisor, antinef_closure, canonical, is_antinef, to_basis

__all__ = [
    "MultiplierIdealResult",
    "multiplier_divisor",
    "is_jumping_number",
    "oracle_jumping_numbers",
    "jumping_number_of_divisor",
    "semigroup_bruteforce",
]


@dataclass(frozen=True)
class MultiplierIdealResult:
    """Factorization-basis divisor of a multiplier ideal at a parameter."""

    xi: Fraction
    divisor: Divisor  # antinef, in the dual basis


def _closure_from_floors(ideal: IdealSpec, floors) -> tuple[int, ...]:
    k = canonical(ideal.graph).k
    raw = tuple(max(f - kv, 0) for f, kv in zip(floors, k))
    closed = antinef_closure(Divisor(raw, Basis.E), ideal.graph)
    return closed.int_coords()


def _floors_at(ideal: IdealSpec, xi: Fraction) -> tuple[int, ...]:
    return tuple(math.floor(xi * d) for d in ideal.valuations)


def _floors_left_of(ideal: IdealSpec, xi: Fraction) -> tuple[int, ...]:
    """Floors of the scaled divisor just below xi: integers step down."""
    out = []
    for d in ideal.valuations:
        scaled = xi * d
        out.append(int(scaled) - 1 if scaled.denominator == 1 else math.floor(scaled))
    return tuple(out)


def multiplier_divisor(ideal: IdealSpec, xi) -> MultiplierIdealResult:
    """Divisor of the multiplier ideal at a nonnegative parameter."""
    xi = Fraction(xi)
    if xi < 0:
        raise ValueError("parameter must be nonnegative")
    e_coords = _closure_from_floors(ideal, _floors_at(ideal, xi))
    hat = to_basis(Divisor(e_coords, Basis.E), Basis.E_HAT, ideal.graph)
    return MultiplierIdealResult(xi, hat)


def is_jumping_number(ideal: IdealSpec, xi) -> bool:
    """Does the multiplier ideal strictly shrink at xi?"""
    xi = Fraction(xi)
    if xi <= 0:
        raise ValueError("parameter must be positive")
    at = _closure_from_floors(ideal, _floors_at(ideal, xi))
    before = _closure_from_floors(ideal, _floors_left_of(ideal, xi))
    return at != before


def jumping_number_of_divisor(ideal: IdealSpec, divisor: Divisor):
    """Jumping number realized by an antinef divisor, with its support.

    Returns the minimum over vertices of (coordinate + canonical + 1) over
    the valuation, together with the set of minimizing vertices.
    """
    if not is_antinef(divisor, ideal.graph):
        raise ValueError("divisor is not antinef")
    e = to_basis(divisor, Basis.E, ideal.graph)
    if not e.is_integral():
        raise ValueError("divisor must be integral")
    k = canonical(ideal.graph).k
    values = [
        Fraction(f + kv + 1, d)
        for f, kv, d in zip(e.int_coords(), k, ideal.valuations)
    ]
    best = min(values)
    support = frozenset(
        nu for nu, value in enumerate(values, start=1) if value == best
    )
    return best, support


def oracle_jumping_numbers(ideal: IdealSpec, bound) -> JumpingSet:
    """Scan every admissible candidate and test each for a jump.

    Candidates run over all vertices (not just the stars and factor
    vertices), so the scan is independent of the support argument used by
    the closed formula.
    """
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError("bound must be positive")
    candidates = sorted(
        {
            Fraction(t, d)
            for d in ideal.valuations
            for t in range(1, math.floor(bound * d) + 1)
        }
    )
    cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def closure(floors):
        result = cache.get(floors)
        if result is None:
            result = cache[floors] = _closure_from_floors(ideal, floors)
        return result

    entries = []
    for xi in candidates:
        before = closure(_floors_left_of(ideal, xi))
        if closure(_floors_at(ideal, xi)) != before:
            _, support = jumping_number_of_divisor(
                ideal, Divisor(before, Basis.E)
            )
            entries.append((xi, support))
    return JumpingSet(tuple(entries))


def semigroup_bruteforce(generators, limit: int) -> list[bool]:
    """Membership table 0..limit of the monoid the generators span,
    by exhaustive closure under addition."""
    gens = sorted(set(int(g) for g in generators))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if limit < 0:
        return []
    members = [False] * (limit + 1)
    members[0] = True
    for x in range(1, limit + 1):
        members[x] = any(g <= x and members[x - g] for g in gens)
    return members

"""Proximity structure of a resolution and its dual graph.

A sequence of point blowups over a smooth surface point is recorded by
proximity data: for each infinitely near point, the set of earlier points
whose exceptional curves pass through it.  Everything else -- the proximity
matrix, the intersection form, the dual graph with its weights and
valences, branches, the infinitely-near partial order and the associated
pairs of a vertex -- is derived from that data here.

Vertices are 1-based and listed in blowup order, so the proximity matrix
is unipotent lower triangular and inverts by forward substitution over the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "ResolutionGraph",
    "AssociatedPairSequence",
    "DualGraph",
    "InvalidGraphError",
    "validate",
    "ensure_valid",
    "is_free",
    "proximity_matrix",
    "inverse_proximity",
    "intersection_form",
    "adjacency",
    "branch",
    "infinitely_near",
    "associated_pairs",
]

Matrix = tuple[tuple[int, ...], ...]


class InvalidGraphError(ValueError):
    """Raised when an operation requires a valid resolution graph."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class ResolutionGraph:
    """Proximity data of a blowup sequence.

    ``prox[mu - 1]`` holds the sorted tuple of earlier vertices the
    vertex ``mu`` is proximate to.  The root (vertex 1) has an empty
    tuple.  Instances admit structurally broken data; use :func:`validate`
    to obtain the list of violations.
    """

    n: int
    prox: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        if len(self.prox) != self.n:
            raise ValueError("prox must list one entry per vertex")
        norm = tuple(tuple(sorted(set(map(int, entry)))) for entry in self.prox)
        object.__setattr__(self, "prox", norm)

    @classmethod
    def build(cls, n: int, prox: dict[int, tuple[int, ...]] | None = None) -> "ResolutionGraph":
        """Construct from a {vertex: proximate-to} mapping (root omitted)."""
        prox = prox or {}
        return cls(n, tuple(tuple(prox.get(mu, ())) for mu in range(1, n + 1)))

    def prox_of(self, mu: int) -> tuple[int, ...]:
        _check_vertex(self, mu)
        return self.prox[mu - 1]


@dataclass(frozen=True)
class DualGraph:
    """Adjacency of the exceptional curves, with weights from the
    intersection form."""

    n: int
    neighbors: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    def neighbors_of(self, mu: int) -> tuple[int, ...]:
        return self.neighbors[mu - 1]

    def valence(self, mu: int) -> int:
        return len(self.neighbors[mu - 1])

    def weight(self, mu: int) -> int:
        return self.weights[mu - 1]

    @property
    def edges(self) -> frozenset:
        return frozenset(
            (mu, nu)
            for mu in range(1, self.n + 1)
            for nu in self.neighbors[mu - 1]
            if mu < nu
        )

    @property
    def ends(self) -> tuple[int, ...]:
        return tuple(mu for mu in range(1, self.n + 1) if self.valence(mu) <= 1)

    @property
    def stars(self) -> tuple[int, ...]:
        return tuple(mu for mu in range(1, self.n + 1) if self.valence(mu) >= 3)


@dataclass(frozen=True)
class AssociatedPairSequence:
    """The chain of (satellite anchor, free peak) pairs below a vertex.

    The last pair is the one associated to the vertex itself; each earlier
    pair is associated to the anchor of its successor, ending at the root.
    """

    vertex: int
    pairs: tuple[tuple[int, int], ...]


def _check_vertex(graph: ResolutionGraph, mu: int) -> None:
    if not 1 <= mu <= graph.n:
        raise ValueError(f"vertex out of range: {mu}")


def is_free(graph: ResolutionGraph, mu: int) -> bool:
    """A point is free when it is proximate to at most one earlier point."""
    _check_vertex(graph, mu)
    return len(graph.prox[mu - 1]) <= 1


def validate(graph: ResolutionGraph) -> list[str]:
    """Check the structural rules; return the violations (empty if valid).

    Violations are data, not exceptions: each entry names the offending
    vertex and the broken rule.
    """
    out = []
    n = graph.n
    if graph.prox[0]:
        out.append("vertex 1 is the root and must be proximate to no vertex")
    for mu in range(2, n + 1):
        targets = graph.prox[mu - 1]
        if not targets:
            out.append(f"vertex {mu} proximate to no vertex")
        if len(targets) > 2:
            out.append(f"vertex {mu} proximate to {len(targets)} vertices, at most two allowed")
        for nu in targets:
            if not 1 <= nu < mu:
                out.append(f"vertex {mu} proximate to {nu}, which is not an earlier vertex")
    if out:
        return out

    form = _intersection_form_raw(graph)
    edges = set()
    for mu in range(1, n + 1):
        for nu in range(mu + 1, n + 1):
            entry = form[mu - 1][nu - 1]
            if entry == -1:
                edges.add((mu, nu))
            elif entry != 0:
                out.append(
                    f"intersection form entry {entry} between vertices {mu} and {nu}, "
                    "expected 0 or -1"
                )
    if out:
        return out

    if len(edges) != n - 1:
        out.append(f"dual graph has {len(edges)} edges, a tree on {n} vertices needs {n - 1}")
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for a, b in edges:
            w = b if a == v else a if b == v else None
            if w is not None and w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        out.append("dual graph is not connected")
    return out


@lru_cache(maxsize=None)
def _violations(graph: ResolutionGraph) -> tuple[str, ...]:
    return tuple(validate(graph))


def ensure_valid(graph: ResolutionGraph) -> None:
    violations = _violations(graph)
    if violations:
        raise InvalidGraphError(violations)


def proximity_matrix(graph: ResolutionGraph) -> Matrix:
    """Unipotent lower-triangular matrix with -1 at (mu, nu) when mu is
    proximate to nu."""
    ensure_valid(graph)
    n = graph.n
    return tuple(
        tuple(
            1 if mu == nu else (-1 if nu in graph.prox[mu - 1] else 0)
            for nu in range(1, n + 1)
        )
        for mu in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def inverse_proximity(graph: ResolutionGraph) -> Matrix:
    """Exact inverse of the proximity matrix, by forward substitution.

    Row mu is the unit vector at mu plus the rows of the vertices mu is
    proximate to; all entries are nonnegative integers.
    """
    ensure_valid(graph)
    n = graph.n
    rows: list[tuple[int, ...]] = []
    for mu in range(1, n + 1):
        row = [0] * n
        row[mu - 1] = 1
        for nu in graph.prox[mu - 1]:
            prev = rows[nu - 1]
            for j in range(nu):
                row[j] += prev[j]
        rows.append(tuple(row))
    return tuple(rows)


def _intersection_form_raw(graph: ResolutionGraph) -> Matrix:
    n = graph.n
    weights = [1] * n
    for targets in graph.prox:
        for nu in targets:
            weights[nu - 1] += 1
    form = [[0] * n for _ in range(n)]
    for mu in range(1, n + 1):
        form[mu - 1][mu - 1] = weights[mu - 1]
    # (P^t P)_{mu,nu} = sum_k p_{k,mu} p_{k,nu} for mu != nu
    for mu in range(1, n + 1):
        for nu in range(mu + 1, n + 1):
            entry = 0
            if mu in graph.prox[nu - 1]:
                entry -= 1
            for k in range(nu + 1, n + 1):
                targets = graph.prox[k - 1]
                if mu in targets and nu in targets:
                    entry += 1
            form[mu - 1][nu - 1] = form[nu - 1][mu - 1] = entry
    return tuple(map(tuple, form))


def intersection_form(graph: ResolutionGraph) -> Matrix:
    """The symmetric form whose diagonal carries the vertex weights and
    whose -1 entries are the dual-graph edges."""
    ensure_valid(graph)
    return _intersection_form_raw(graph)


@lru_cache(maxsize=None)
def adjacency(graph: ResolutionGraph) -> DualGraph:
    """Dual graph read off the intersection form."""
    ensure_valid(graph)
    form = _intersection_form_raw(graph)
    n = graph.n
    neighbors = tuple(
        tuple(nu for nu in range(1, n + 1) if form[mu - 1][nu - 1] == -1)
        for mu in range(1, n + 1)
    )
    weights = tuple(form[mu - 1][mu - 1] for mu in range(1, n + 1))
    return DualGraph(n, neighbors, weights)


def branch(graph: ResolutionGraph, mu: int, nu: int) -> frozenset:
    """Vertices of the maximal connected subgraph containing nu but not mu.

    Empty when mu == nu; equal for any two representatives from the same
    component of the dual graph minus mu.
    """
    _check_vertex(graph, mu)
    _check_vertex(graph, nu)
    if mu == nu:
        return frozenset()
    dual = adjacency(graph)
    seen = {nu}
    stack = [nu]
    while stack:
        v = stack.pop()
        for w in dual.neighbors_of(v):
            if w != mu and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def infinitely_near(graph: ResolutionGraph, mu: int, nu: int) -> bool:
    """Whether nu lies below mu in the blowup order (reflexively)."""
    _check_vertex(graph, mu)
    _check_vertex(graph, nu)
    return inverse_proximity(graph)[mu - 1][nu - 1] > 0


def _pair_below(graph: ResolutionGraph, mu: int) -> tuple[int, int]:
    # Work on the chain of vertices below mu; it is totally ordered by the
    # vertex index.
    q_row = inverse_proximity(graph)[mu - 1]
    chain = [nu for nu in range(1, mu + 1) if q_row[nu - 1] > 0]
    tau = max(nu for nu in chain if is_free(graph, nu))
    q_tau = inverse_proximity(graph)[tau - 1]
    anchors = [
        nu for nu in chain
        if nu <= tau and q_tau[nu - 1] > 0 and not is_free(graph, nu)
    ]
    gamma = max(anchors) if anchors else 1
    return gamma, tau


def associated_pairs(graph: ResolutionGraph, mu: int) -> AssociatedPairSequence:
    """Anchor/peak pairs of mu, innermost last.

    The peak of a vertex is the largest free vertex below it; the anchor is
    the largest satellite below the peak, or the root when the whole chain
    is free.  The sequence recurses on anchors until the root is reached.
    """
    ensure_valid(graph)
    _check_vertex(graph, mu)
    pairs = []
    current = mu
    while True:
        gamma, tau = _pair_below(graph, current)
        pairs.append((gamma, tau))
        if is_free(graph, gamma):
            break
        current = gamma
    return AssociatedPairSequence(mu, tuple(reversed(pairs)))

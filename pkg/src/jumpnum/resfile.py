"""Resolution files: a line-oriented exchange format for proximity data.

Grammar (``#`` starts a comment, blank lines are ignored)::

    N <n>
    P <mu> <nu1> [<nu2>]     one line per vertex mu = 2..n
    D <d1> <d2> ... <dn>     factorization multiplicities, nonnegative

Parsing is strict: duplicate or missing P lines, references to later
vertices, wrong D arity and negative entries are all rejected with the
offending line number.  ``serialize_resolution`` emits the canonical form,
so parse/serialize round trips are byte identical on canonical files.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import ResolutionGraph, validate
from .lattice import valuation_table

__all__ = [
    "ParseError",
    "parse_resolution",
    "serialize_resolution",
    "proximity_from_valuation",
]


class ParseError(ValueError):
    """Input rejected; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"{message} at line {lineno}")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(word: str, lineno: int, what: str) -> int:
    try:
        return int(word, 10)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer ({word!r})") from None


def parse_resolution(text: str) -> tuple[ResolutionGraph, tuple[int, ...]]:
    """Parse a resolution file into a graph and its factorization vector."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError(1, "empty input")
    lineno, words = lines[0]
    if words[0] != "N" or len(words) != 2:
        raise ParseError(lineno, "expected header 'N <n>'")
    n = _int(words[1], lineno, "vertex count")
    if n < 1:
        raise ParseError(lineno, "vertex count must be positive")

    prox: dict[int, tuple[int, ...]] = {}
    factorization: tuple[int, ...] | None = None
    last = lineno
    for lineno, words in lines[1:]:
        last = lineno
        key = words[0]
        if key == "P":
            if factorization is not None:
                raise ParseError(lineno, "P line after D line")
            if not 3 <= len(words) <= 4:
                raise ParseError(lineno, "expected 'P <mu> <nu1> [<nu2>]'")
            mu = _int(words[1], lineno, "vertex")
            if not 2 <= mu <= n:
                raise ParseError(lineno, f"vertex {mu} out of range 2..{n}")
            if mu in prox:
                raise ParseError(lineno, f"duplicate P line for vertex {mu}")
            targets = tuple(_int(w, lineno, "target vertex") for w in words[2:])
            for nu in targets:
                if nu < 1:
                    raise ParseError(lineno, f"target vertex {nu} out of range")
                if nu >= mu:
                    raise ParseError(lineno, "forward reference")
            if len(set(targets)) != len(targets):
                raise ParseError(lineno, "repeated target vertex")
            prox[mu] = targets
        elif key == "D":
            if factorization is not None:
                raise ParseError(lineno, "duplicate D line")
            if len(words) - 1 != n:
                raise ParseError(
                    lineno, f"D line expects {n} entries, got {len(words) - 1}"
                )
            entries = tuple(_int(w, lineno, "multiplicity") for w in words[1:])
            for value in entries:
                if value < 0:
                    raise ParseError(lineno, f"negative entry {value}")
            factorization = entries
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")

    for mu in range(2, n + 1):
        if mu not in prox:
            raise ParseError(last, f"missing P line for vertex {mu}")
    if factorization is None:
        raise ParseError(last, "missing D line")
    return ResolutionGraph.build(n, prox), factorization


def serialize_resolution(graph: ResolutionGraph, factorization) -> str:
    """Canonical text form of a graph plus factorization vector."""
    if len(factorization) != graph.n:
        raise ValueError("factorization length does not match the graph")
    out = [f"N {graph.n}"]
    for mu in range(2, graph.n + 1):
        targets = " ".join(str(nu) for nu in graph.prox[mu - 1])
        out.append(f"P {mu} {targets}")
    out.append("D " + " ".join(str(int(d)) for d in factorization))
    return "\n".join(out) + "\n"


def proximity_from_valuation(matrix) -> ResolutionGraph:
    """Recover the proximity structure whose valuation table is ``matrix``.

    The valuation table factors as Q Q^t with Q the inverse proximity
    matrix, which is the unique unipotent lower-triangular factor.  We
    compute that factor exactly, invert it, and read the proximity sets
    off the -1 pattern.  Any failure along the way (non-integral factor,
    diagonal not one, inverse entries outside {0, -1}, invalid graph, or a
    table that does not reproduce) rejects the input.
    """
    rows = [tuple(int(x) for x in row) for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("valuation matrix must be square")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ValueError("valuation matrix must be symmetric")

    # Unipotent Cholesky-style factorization, exact.
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i):
            acc = rows[i][j] - sum(q[i][k] * q[j][k] for k in range(j))
            q[i][j] = acc / q[j][j]
        diag_sq = rows[i][i] - sum(q[i][k] ** 2 for k in range(i))
        if diag_sq != 1:
            raise ValueError(
                f"not a valuation table: unipotent factor fails at vertex {i + 1}"
            )
        q[i][i] = Fraction(1)
    for i in range(n):
        for j in range(i):
            if q[i][j].denominator != 1 or q[i][j] < 0:
                raise ValueError(
                    "not a valuation table: factor has a non-integer "
                    f"or negative entry at ({i + 1}, {j + 1})"
                )

    # Invert the unit lower-triangular factor; the result must be a
    # proximity matrix.
    p = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        p[i][i] = Fraction(1)
        for j in range(i - 1, -1, -1):
            p[i][j] = -sum(q[i][k] * p[k][j] for k in range(j, i))
    prox: dict[int, tuple[int, ...]] = {}
    for i in range(1, n):
        targets = []
        for j in range(i):
            entry = p[i][j]
            if entry == -1:
                targets.append(j + 1)
            elif entry != 0:
                raise ValueError(
                    "not a proximity structure: inverse factor entry "
                    f"{entry} at ({i + 1}, {j + 1})"
                )
        prox[i + 1] = tuple(targets)

    graph = ResolutionGraph.build(n, prox)
    violations = validate(graph)
    if violations:
        raise ValueError("not a valid resolution graph: " + "; ".join(violations))
    if valuation_table(graph).matrix != tuple(map(tuple, rows)):
        raise ValueError("valuation table does not reproduce the input")
    return graph

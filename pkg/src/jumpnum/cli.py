"""Command-line front end.

Subcommands cover validation, the derived matrices, per-vertex semigroup
data, jumping-number enumeration by the closed formula, the log-canonical
threshold, the multiplier-ideal oracle with a built-in comparison against
the closed formula, multiplier-ideal divisors, and regeneration of the
bundled 20-vertex example.  Results go to stdout, diagnostics to stderr;
exit codes are 0 (ok), 1 (bad input), 2 (oracle mismatch).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import sample20
from .graph import InvalidGraphError, ResolutionGraph, validate
from .ideals import IdealSpec
from .jumping import jumping_numbers, jumping_numbers_at, log_canonical_threshold
from .lattice import canonical
from .resfile import ParseError, parse_resolution


class _CliError(Exception):
    """Input problem; message goes to stderr, exit code 1."""


def _positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    # Usage problems are input errors: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="jumpnum",
        description="Jumping numbers of complete ideals from resolution data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="resolution file")
        return p

    add("validate", "check the structural rules of a resolution file")

    p = add("matrices", "print a derived matrix or vector")
    p.add_argument(
        "--which",
        required=True,
        choices=("P", "Q", "V", "K"),
        help="P: proximity, Q: its inverse, V: valuation table, "
        "K: canonical divisor (E-coordinates, one line)",
    )

    p = add("semigroup", "branch gcds, Frobenius multiples and semigroup at a vertex")
    p.add_argument("--vertex", type=int, required=True)

    p = add("jumping", "jumping numbers by the closed formula")
    p.add_argument("--bound", type=_positive_fraction, default=Fraction(2))
    p.add_argument("--vertex", type=int, default=None,
                   help="restrict to numbers supported at this vertex")
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    add("lct", "log-canonical threshold")

    p = add("oracle", "multiplier-ideal scan, compared against the closed formula")
    p.add_argument("--bound", type=_positive_fraction, default=Fraction(2))

    p = add("multiplier", "factorization vector of the multiplier ideal")
    p.add_argument("--xi", type=_fraction, required=True)

    p = add("fixture-gen", "regenerate the bundled 20-vertex example", with_file=False)
    p.add_argument("--out", default=None, help="write here instead of stdout")
    return parser


def _load(path: str) -> tuple[ResolutionGraph, tuple[int, ...]]:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_resolution(text)
    except ParseError as exc:
        raise _CliError(f"{path}: {exc}") from None


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return 1


def _ideal(path: str) -> IdealSpec:
    graph, factorization = _load(path)
    try:
        return IdealSpec(graph, factorization)
    except (ValueError, InvalidGraphError) as exc:
        raise _CliError(f"{path}: {exc}") from None


def _print_rows(rows) -> None:
    for row in rows:
        print(" ".join(str(int(x)) for x in row))


def _cmd_validate(args) -> int:
    graph, _ = _load(args.file)
    violations = validate(graph)
    if violations:
        for violation in violations:
            print(violation)
        return 1
    print("OK")
    return 0


def _cmd_matrices(args) -> int:
    from .graph import inverse_proximity, proximity_matrix
    from .lattice import valuation_table

    ideal = _ideal(args.file)
    graph = ideal.graph
    if args.which == "P":
        _print_rows(proximity_matrix(graph))
    elif args.which == "Q":
        _print_rows(inverse_proximity(graph))
    elif args.which == "V":
        _print_rows(valuation_table(graph).matrix)
    else:
        _print_rows([canonical(graph).k])
    return 0


def _cmd_semigroup(args) -> int:
    from .graph import adjacency
    from .semigroups import branch_gcd, frobenius_multiple, vertex_semigroup

    ideal = _ideal(args.file)
    mu = args.vertex
    if not 1 <= mu <= ideal.graph.n:
        return _fail(f"vertex out of range: {mu}")
    dual = adjacency(ideal.graph)
    table = ideal.table
    for nu in dual.neighbors_of(mu):
        print(f"s {mu} {nu} {branch_gcd(table, ideal.graph, mu, nu)}")
    for nu in dual.neighbors_of(mu):
        print(f"M_frobenius {nu} {frobenius_multiple(table, ideal.graph, mu, nu)}")
    gens = vertex_semigroup(table, ideal.graph, mu).generators
    print("S generators: " + " ".join(str(g) for g in gens))
    return 0


def _print_jumping(entries, fmt: str) -> None:
    if fmt == "text":
        for xi, _ in entries:
            print(xi)
    else:
        for xi, support in entries:
            print(f"{xi}\t{','.join(str(v) for v in sorted(support))}")


def _cmd_jumping(args) -> int:
    ideal = _ideal(args.file)
    if args.vertex is not None:
        if not 1 <= args.vertex <= ideal.graph.n:
            return _fail(f"vertex out of range: {args.vertex}")
        found = jumping_numbers_at(ideal, args.vertex, args.bound)
    else:
        found = jumping_numbers(ideal, args.bound)
    _print_jumping(found.entries, args.format)
    return 0


def _cmd_lct(args) -> int:
    print(log_canonical_threshold(_ideal(args.file)))
    return 0


def _cmd_oracle(args) -> int:
    from .oracle import oracle_jumping_numbers

    ideal = _ideal(args.file)
    scanned = oracle_jumping_numbers(ideal, args.bound)
    _print_jumping(scanned.entries, "text")
    expected = jumping_numbers(ideal, args.bound)
    if scanned.values() == expected.values():
        print("MATCH")
        return 0
    extra = sorted(set(scanned.values()) - set(expected.values()))
    missing = sorted(set(expected.values()) - set(scanned.values()))
    detail = []
    if extra:
        detail.append("oracle only: " + " ".join(map(str, extra)))
    if missing:
        detail.append("formula only: " + " ".join(map(str, missing)))
    print("MISMATCH: " + "; ".join(detail))
    return 2


def _cmd_multiplier(args) -> int:
    from .oracle import multiplier_divisor

    ideal = _ideal(args.file)
    if args.xi < 0:
        return _fail("--xi must be nonnegative")
    result = multiplier_divisor(ideal, args.xi)
    print(" ".join(str(int(c)) for c in result.divisor.coords))
    return 0


def _cmd_fixture_gen(args) -> int:
    text = sample20.resolution_text()
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "matrices": _cmd_matrices,
    "semigroup": _cmd_semigroup,
    "jumping": _cmd_jumping,
    "lct": _cmd_lct,
    "oracle": _cmd_oracle,
    "multiplier": _cmd_multiplier,
    "fixture-gen": _cmd_fixture_gen,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _CliError as exc:
        return _fail(str(exc))
    except InvalidGraphError as exc:
        return _fail(f"invalid resolution graph: {exc}")


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Usage:
    quiver-lss decomp --quiver k2.quiver --dim 3,3
    quiver-lss lss --quiver a2.quiver --dim 2,1 --json
    quiver-lss perp-seq --quiver a3.quiver --roots "1,1,0;0,1,0" --side right
    quiver-lss check --quiver k3.quiver --terms "1,0;3,1" --kind generic

Vertices are numbered from 1. Results go to stdout; errors go to stderr.
Exit codes: 0 success, 1 computation or input error (or a failed --verify),
2 usage error, including a missing option the command needs.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from typing import Any

from quiver_lss._config import OracleConfig, _report, load_config
from quiver_lss._errors import PreconditionError, QuiverLssError
from quiver_lss._homext import Decomposition, Term, cache_info, generic_decomposition
from quiver_lss._lss import (
    generic_lss_decomposition,
    luna_strata,
    semi_invariant_generators,
)
from quiver_lss._perp import perp_schur, perp_sequence
from quiver_lss._quiver import (
    DimVector,
    Quiver,
    combine,
    euler_form,
    load_quiver,
    parse_dim_vector,
    parse_root_sequence,
    root_class,
    tits_form,
)
from quiver_lss.oracle import (
    VerificationReport,
    verify_decomposition,
    verify_perpendicular,
    verify_strata,
)

SCHEMA_VERSION = 1

COMMANDS = (
    "euler",
    "tits",
    "decomp",
    "lss",
    "perp-root",
    "perp-seq",
    "strata",
    "generators",
    "check",
)

# Commands with nothing for the oracle to check
UNVERIFIABLE = ("euler", "tits")

# The option each command cannot run without
REQUIRED = {
    "euler": "roots",
    "tits": "dim",
    "decomp": "dim",
    "lss": "dim",
    "perp-root": "dim",
    "perp-seq": "roots",
    "strata": "dim",
    "generators": "dim",
    "check": "terms",
}


def _fmt(v: Sequence[int]) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def dumps(value: Any) -> str:
    """Canonical JSON: sorted keys, compact separators."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_terms(text: str, n: int) -> list[tuple[DimVector, int]]:
    """Parse "m*a,b;c,d" into (root, mult) pairs; a missing multiplicity is 1."""
    terms: list[tuple[DimVector, int]] = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        mult_text, sep, root_text = part.partition("*")
        if not sep:
            mult_text, root_text = "1", part
        try:
            mult = int(mult_text)
        except ValueError:
            raise PreconditionError(f"invalid multiplicity '{mult_text}' in '{part}'") from None
        if mult < 1:
            raise PreconditionError(f"multiplicity must be positive in '{part}'")
        terms.append((parse_dim_vector(root_text.strip(), n), mult))
    if not terms:
        raise PreconditionError("no terms given")
    return terms


def _decomposition_from_terms(
    quiver: Quiver, terms: Sequence[tuple[DimVector, int]]
) -> Decomposition:
    total = combine([m for _, m in terms], [r for r, _ in terms], quiver.n)
    return Decomposition(tuple(Term(r, m, root_class(quiver, r)) for r, m in terms), total)


# ============================================================================
# Commands
# ============================================================================
#
# Each command returns (result dict for JSON, text lines, oracle report or None).

Outcome = tuple[dict[str, Any], list[str], VerificationReport | None]


def _oracle_config(args: argparse.Namespace) -> OracleConfig:
    return load_config().with_overrides(prime=args.prime, trials=args.trials, seed=args.seed)


def _cmd_euler(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    vectors = parse_root_sequence(args.roots, quiver.n)
    if len(vectors) != 2:
        raise PreconditionError(f"euler takes exactly two vectors, got {len(vectors)}")
    a, b = vectors
    value = euler_form(quiver, a, b)
    return {"a": list(a), "b": list(b), "euler": value}, [f"<{_fmt(a)}, {_fmt(b)}> = {value}"], None


def _cmd_tits(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    a = parse_dim_vector(args.dim, quiver.n)
    q, cls = tits_form(quiver, a)
    result = {"dim": list(a), "tits": q, "class": cls.value}
    return result, [f"q{_fmt(a)} = {q} [{cls.value}]"], None


def _cmd_decomp(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    d = generic_decomposition(quiver, parse_dim_vector(args.dim, quiver.n))
    report = (
        verify_decomposition(quiver, d, "generic", _oracle_config(args)) if args.verify else None
    )
    return d.to_dict(), [str(d)], report


def _cmd_lss(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    d = generic_lss_decomposition(quiver, parse_dim_vector(args.dim, quiver.n))
    report = verify_decomposition(quiver, d, "lss", _oracle_config(args)) if args.verify else None
    return d.to_dict(), [str(d)], report


def _simples_outcome(
    quiver: Quiver, args: argparse.Namespace, roots: list[DimVector], simples: list[DimVector]
) -> Outcome:
    report = (
        verify_perpendicular(quiver, roots, simples, args.side, _oracle_config(args))
        if args.verify
        else None
    )
    result = {
        "side": args.side,
        "roots": [list(r) for r in roots],
        "simples": [list(s) for s in simples],
    }
    lines = [_fmt(s) for s in simples] or ["(empty)"]
    return result, lines, report


def _cmd_perp_root(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    g = parse_dim_vector(args.dim, quiver.n)
    return _simples_outcome(quiver, args, [g], perp_schur(quiver, g, args.side))


def _cmd_perp_seq(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    roots = parse_root_sequence(args.roots, quiver.n)
    return _simples_outcome(quiver, args, roots, perp_sequence(quiver, roots, args.side))


def _cmd_strata(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    strata = luna_strata(quiver, parse_dim_vector(args.dim, quiver.n))
    lines = [
        f"{{{', '.join(_fmt(g) for g in s.subsequence)}}} -> {s.decomposition}" for s in strata
    ]
    report = verify_strata(quiver, strata, _oracle_config(args)) if args.verify else None
    return {"strata": [s.to_dict() for s in strata]}, lines, report


def _cmd_generators(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    b = parse_dim_vector(args.dim, quiver.n)
    generators = semi_invariant_generators(quiver, b)
    report: VerificationReport | None = None
    if args.verify:
        # Each generator root lies in the right perpendicular category of the summands.
        roots = generic_decomposition(quiver, b).roots
        simples = [g for g, _ in generators]
        report = verify_perpendicular(quiver, roots, simples, "right", _oracle_config(args))
    result = {"generators": [{"root": list(g), "weight": list(w)} for g, w in generators]}
    lines = [f"root {_fmt(g)}, weight {_fmt(w)}" for g, w in generators] or ["(none)"]
    return result, lines, report


def _cmd_check(quiver: Quiver, args: argparse.Namespace) -> Outcome:
    d = _decomposition_from_terms(quiver, parse_terms(args.terms, quiver.n))
    report = verify_decomposition(quiver, d, args.kind, _oracle_config(args))
    lines = [str(d)]
    lines.extend(f"{'ok  ' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in report.checks)
    return d.to_dict(), lines, report


_DISPATCH: dict[str, Callable[[Quiver, argparse.Namespace], Outcome]] = {
    "euler": _cmd_euler,
    "tits": _cmd_tits,
    "decomp": _cmd_decomp,
    "lss": _cmd_lss,
    "perp-root": _cmd_perp_root,
    "perp-seq": _cmd_perp_seq,
    "strata": _cmd_strata,
    "generators": _cmd_generators,
    "check": _cmd_check,
}


# ============================================================================
# Entry point
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", required=True, metavar="FILE", help="quiver file")
    common.add_argument("--dim", metavar="CSV", help="dimension vector, e.g. 2,1")
    common.add_argument("--roots", metavar="SEQ", help='root sequence, e.g. "1,1,0;0,1,0"')
    common.add_argument("--side", choices=("right", "left"), default="right")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--verify", action="store_true", help="check the result with the oracle")
    common.add_argument("--seed", type=int, default=None, help="oracle seed (default: 0)")
    common.add_argument("--trials", type=int, default=None, help="oracle trials (default: 5)")
    common.add_argument(
        "--prime", type=int, default=None, help="oracle field modulus (default: 2147483647)"
    )
    common.add_argument("--terms", metavar="TERMS", help='decomposition, e.g. "2*1,0;0,1"')
    common.add_argument("--kind", choices=("generic", "lss"), default="generic")

    parser = argparse.ArgumentParser(
        prog="quiver-lss",
        description="Generic and locally semi-simple decompositions of quiver representations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common])
    return parser


def _emit(args: argparse.Namespace, quiver: Quiver, outcome: Outcome) -> None:
    result, lines, report = outcome
    if args.json:
        payload: dict[str, Any] = {
            "v": SCHEMA_VERSION,
            "command": args.command,
            "quiver": {"n": quiver.n, "arrows": [[t + 1, h + 1] for t, h in quiver.arrows]},
            "result": result,
        }
        if report is not None:
            payload["checks"] = report.to_dict()
        print(dumps(payload))
        return
    for line in lines:
        print(line)
    if report is not None and args.command != "check":
        print(f"oracle: {'passed' if report.passed else 'FAILED'} ({len(report.checks)} checks)")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        needed = REQUIRED[args.command]
        if getattr(args, needed) is None:
            parser.error(f"{args.command} requires --{needed}")
        if args.verify and args.command in UNVERIFIABLE:
            parser.error(f"{args.command} does not support --verify")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        quiver = load_quiver(args.quiver)
        outcome = _DISPATCH[args.command](quiver, args)
    except QuiverLssError as e:
        print(f"quiver_lss: error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"quiver_lss: error: {args.quiver}: {e.strerror or e}", file=sys.stderr)
        return 1

    _emit(args, quiver, outcome)
    _report(f"cache: {cache_info()}")
    report = outcome[2]
    return 1 if report is not None and not report.passed else 0


if __name__ == "__main__":
    sys.exit(main())

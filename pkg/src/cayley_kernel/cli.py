"""Command-line front end: ``cayley-kernel <subcommand> ...``.

Failures print exactly one line ``error: <kind>: <message>`` to stderr:
exit status 2 for invalid arguments, 3 for size caps, 1 for failed
verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import kernel
from .chords import ChordWord, DiagramCombination, GaussianRational, state_eval, weight_gl_n
from .oracle import OracleSizeError
from .symgroup import EnumerationCapError, enumerate_group
from .verification import DEFAULT_SEED, run_all

MATRIX_MAX_N = 5


class CliError(Exception):
    def __init__(self, kind: str, message: str, status: int):
        super().__init__(message)
        self.kind = kind
        self.status = status


def invalid(message: str) -> CliError:
    return CliError("invalid-argument", message, 2)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would print usage and exit
        raise invalid(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _exp_beta(text: str):
    try:
        return kernel.as_exp_beta(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_term(text: str, n_strands: int) -> tuple[ChordWord, GaussianRational]:
    """``"<re>,<im>:<word>"``, e.g. ``"1/2,0/1:1,2 2,3"``; the word may be empty."""
    coeff_text, sep, word_text = text.partition(":")
    if not sep:
        raise invalid(f"bad --term {text!r}, expected '<re>,<im>:<word>'")
    try:
        return ChordWord.parse(word_text, n_strands), GaussianRational.parse(coeff_text)
    except ValueError as exc:
        raise invalid(f"bad --term {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayley-kernel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, default_format, formats=("json", "csv")):
        p.add_argument("--output", "-o", help="write here instead of standard output")
        p.add_argument("--format", choices=formats, default=default_format)

    p = sub.add_parser("spectrum", help="kernel eigenvalues by partition")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--exp-beta", type=_exp_beta, required=True, help="'p/q' exact, decimal numeric")
    common(p, "json")

    p = sub.add_parser("phase", help="definiteness verdict, theorem and computed")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--exp-beta", type=_exp_beta, required=True)
    common(p, "json")

    p = sub.add_parser("sweep", help="minimal eigenvalue along an exp_beta grid")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--grid", required=True, help="start:stop:step, stop included within step/2")
    p.add_argument("--exponent", type=int, default=None, help="rescale by exp_beta^exponent (default N-1)")
    p.add_argument("--numeric", action="store_true", help="evaluate in floating point")
    p.add_argument("--jobs", type=_positive_int, default=1)
    common(p, "csv")

    p = sub.add_parser("weight", help="fundamental gl(n) weight of one chord word")
    p.add_argument("--strands", type=_positive_int, required=True)
    p.add_argument("--word", default="", help="whitespace-separated i,j pairs")
    p.add_argument("--n", type=_positive_int, required=True)
    common(p, "text", ("text", "json", "csv"))

    p = sub.add_parser("state", help="w(A* A) for a combination A of chord words")
    p.add_argument("--strands", type=_positive_int, required=True)
    p.add_argument("--term", action="append", default=[], help="'<re>,<im>:<word>', repeatable")
    p.add_argument("--n", type=_positive_int, required=True)
    common(p, "json")

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output", "-o")

    p = sub.add_parser("matrix", help=f"dense kernel matrix as CSV (N <= {MATRIX_MAX_N})")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--exp-beta", type=_exp_beta, required=True)
    p.add_argument("--output", "-o")
    return parser


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_spectrum(args) -> tuple[str, int]:
    spec = kernel.spectrum(args.N, args.exp_beta)
    if args.format == "csv":
        rows = [("partition", "value", "multiplicity")]
        rows += [(e["partition"], e["value"], e["multiplicity"]) for e in spec.to_json()["eigenvalues"]]
        return _csv(rows), 0
    return _json(spec.to_json()), 0


def cmd_phase(args) -> tuple[str, int]:
    result = kernel.classify_phase(args.N, args.exp_beta, strict=False)
    if not result.agree:
        raise CliError("verification-failed", "theorem and computed verdicts disagree", 1)
    payload = result.to_json()
    if args.format == "csv":
        return _csv([("N", "exp_beta", "verdict", "theorem", "computed"),
                     (payload["N"], payload["exp_beta"], payload["verdict"],
                      payload["theorem"]["verdict"], payload["computed"]["verdict"])]), 0
    return _json(payload), 0


def cmd_sweep(args) -> tuple[str, int]:
    try:
        grid = kernel.parse_grid(args.grid)
    except ValueError as exc:
        raise invalid(str(exc)) from None
    points = [float(x) for x in grid] if args.numeric else grid
    rows = kernel.sweep_min_eigenvalue(args.N, points, args.exponent, jobs=args.jobs)
    if args.format == "json":
        return _json([
            {"exp_beta": kernel.format_grid_point(r.exp_beta),
             "min_eig": kernel.format_value(r.min_eig),
             "scaled_min_eig": kernel.format_value(r.scaled_min_eig)}
            for r in rows
        ]), 0
    table = [("exp_beta", "min_eig", "scaled_min_eig")]
    table += [
        (kernel.format_grid_point(r.exp_beta), repr(float(r.min_eig)), repr(float(r.scaled_min_eig)))
        for r in rows
    ]
    return _csv(table), 0


def cmd_weight(args) -> tuple[str, int]:
    try:
        word = ChordWord.parse(args.word, args.strands)
    except ValueError as exc:
        raise invalid(str(exc)) from None
    value = weight_gl_n(word, args.n)
    if args.format == "json":
        return _json({"strands": args.strands, "word": str(word), "n": args.n, "value": str(value)}), 0
    if args.format == "csv":
        return _csv([("strands", "word", "n", "value"), (args.strands, str(word), args.n, value)]), 0
    return f"{value}\n", 0


def cmd_state(args) -> tuple[str, int]:
    if not args.term:
        raise invalid("state needs at least one --term")
    a = DiagramCombination(args.strands, [parse_term(t, args.strands) for t in args.term])
    value = state_eval(a, a, args.n)
    nonneg = value.is_real() and value.re >= 0
    payload = {
        "strands": args.strands,
        "n": args.n,
        "value": {"re": str(value.re), "im": str(value.im)},
        "is_nonnegative": nonneg,
    }
    if args.format == "csv":
        return _csv([("re", "im", "is_nonnegative"), (value.re, value.im, str(nonneg).lower())]), 0
    return _json(payload), 0


def cmd_verify(args) -> tuple[str, int]:
    results = run_all(args.seed)
    failed = [r for r in results if not r.passed]
    text = "".join(r.line() + "\n" for r in results)
    text += f"{len(results) - len(failed)}/{len(results)} checks passed\n"
    return text, (1 if failed else 0)


def cmd_matrix(args) -> tuple[str, int]:
    if args.N > MATRIX_MAX_N:
        raise CliError("cap-exceeded", f"matrix dump supports N <= {MATRIX_MAX_N}, got {args.N}", 3)
    labels = ["".join(map(str, p.images)) for p in enumerate_group(args.N)]
    matrix = kernel.kernel_matrix(args.N, args.exp_beta)
    rows = [["perm"] + labels]
    rows += [[label] + [kernel.format_value(x) for x in row] for label, row in zip(labels, matrix)]
    return _csv(rows), 0


COMMANDS = {
    "spectrum": cmd_spectrum,
    "phase": cmd_phase,
    "sweep": cmd_sweep,
    "weight": cmd_weight,
    "state": cmd_state,
    "verify": cmd_verify,
    "matrix": cmd_matrix,
}


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.subcommand](args)
        _emit(text, getattr(args, "output", None))
        if status and args.subcommand == "verify":
            raise CliError("verification-failed", "one or more checks failed", status)
        return status
    except CliError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return exc.status
    except (EnumerationCapError, OracleSizeError) as exc:
        print(f"error: cap-exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, TypeError) as exc:
        print(f"error: invalid-argument: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line calculator for min-plus matrix algebra.

One subcommand per operation; operands are text-format matrix files, with
``-`` standing for stdin in at most one position.  Results go to stdout,
diagnostics to stderr, and every library error maps to its own exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bidet import bideterminant, permanent
from .errors import (
    BadToken,
    DimensionMismatch,
    Empty,
    MinPlusError,
    NotSquare,
    Overflow,
    RaggedRows,
    TooLarge,
)
from .io import format_matrix, load_matrix, matrix_json_obj
from .matrix import add, mul, power, scalar_mul, stabilized_power
from .recurrence import solve
from .semiring import TropicalScalar

EXIT_CODES = {
    DimensionMismatch: 3,
    NotSquare: 4,
    Overflow: 5,
    TooLarge: 6,
    RaggedRows: 7,
    BadToken: 8,
    Empty: 9,
}

_EPILOG = """\
matrix files: one row per line, entries separated by spaces,
E for the tropical infinity, signed decimal integers otherwise.

exit codes:
   0  success
   2  usage error
   3  DimensionMismatch  operand shapes are incompatible
   4  NotSquare          a square matrix is required
   5  Overflow           a finite result left the signed 64-bit range
   6  TooLarge           permutation enumeration bound (n > 10) exceeded
   7  RaggedRows         input rows have unequal lengths
   8  BadToken           a token is neither E nor a 64-bit integer
   9  Empty              input contains no rows
  10  i/o error          a file could not be read
"""


def _scalar_arg(text: str) -> TropicalScalar:
    try:
        return TropicalScalar.parse(text)
    except BadToken as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive_arg(text: str) -> int:
    value = _nonneg_arg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _render(matrix, fmt: str) -> str:
    return format_matrix(matrix, fmt)


def _cmd_add(args) -> str:
    a = load_matrix(args.a).matrix
    b = load_matrix(args.b).matrix
    return _render(add(a, b), args.format)


def _cmd_mul(args) -> str:
    a = load_matrix(args.a).matrix
    b = load_matrix(args.b).matrix
    return _render(mul(a, b), args.format)


def _cmd_smul(args) -> str:
    a = load_matrix(args.matrix).matrix
    return _render(scalar_mul(args.alpha, a), args.format)


def _cmd_pow(args) -> str:
    a = load_matrix(args.matrix).matrix
    result = power(a, args.k)
    if not args.stabilize:
        return _render(result, args.format)
    max_k = args.max_k if args.max_k is not None else 64
    _, index = stabilized_power(a, max_k)
    if args.format == "json":
        obj = {"matrix": matrix_json_obj(result), "stabilized_at": index}
        return json.dumps(obj, separators=(",", ":"))
    report = f"stabilized at k={index}" if index is not None else f"none within {max_k}"
    return _render(result, "text") + "\n\n" + report


def _cmd_bidet(args) -> str:
    a = load_matrix(args.matrix).matrix
    delta1, delta2 = bideterminant(a)
    if args.format == "json":
        obj = {
            "delta1": "E" if delta1.is_epsilon else delta1.value,
            "delta2": "E" if delta2.is_epsilon else delta2.value,
        }
        return json.dumps(obj, separators=(",", ":"))
    return f"delta1: {delta1}\ndelta2: {delta2}"


def _cmd_perm(args) -> str:
    a = load_matrix(args.matrix).matrix
    value = permanent(a)
    if args.format == "json":
        obj = {"permanent": "E" if value.is_epsilon else value.value}
        return json.dumps(obj, separators=(",", ":"))
    return str(value)


def _cmd_solve(args) -> str:
    a = load_matrix(args.matrix).matrix
    x0 = load_matrix(args.x0).matrix
    trajectory = solve(a, x0, args.k)
    if not args.trace:
        return _render(trajectory.states[-1], args.format)
    if args.format == "json":
        obj = {
            "states": [matrix_json_obj(s) for s in trajectory.states],
            "stabilized_at": trajectory.stabilized_at,
        }
        return json.dumps(obj, separators=(",", ":"))
    blocks = [f"X({j}):\n{format_matrix(s)}" for j, s in enumerate(trajectory.states)]
    if trajectory.stabilized_at is not None:
        blocks.append(f"stabilized at k={trajectory.stabilized_at}")
    return "\n\n".join(blocks)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minplus",
        description="exact matrix calculator for min-plus (tropical) algebra",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("add", parents=[common], help="entrywise minimum of two matrices")
    p.add_argument("a", help="left matrix file, or - for stdin")
    p.add_argument("b", help="right matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_add, operands=("a", "b"))

    p = sub.add_parser("mul", parents=[common], help="tropical matrix product")
    p.add_argument("a", help="left matrix file, or - for stdin")
    p.add_argument("b", help="right matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_mul, operands=("a", "b"))

    p = sub.add_parser("smul", parents=[common], help="tropical scalar product")
    p.add_argument("--alpha", required=True, type=_scalar_arg, help="scalar: integer or E")
    p.add_argument("matrix", help="matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_smul, operands=("matrix",))

    p = sub.add_parser("pow", parents=[common], help="tropical matrix power")
    p.add_argument("matrix", help="square matrix file, or - for stdin")
    p.add_argument("--k", required=True, type=_nonneg_arg, help="exponent (k >= 0)")
    p.add_argument(
        "--stabilize",
        action="store_true",
        help="also report the least k with equal consecutive powers",
    )
    p.add_argument(
        "--max-k",
        type=_positive_arg,
        default=None,
        help="search bound for --stabilize (default: 64)",
    )
    p.set_defaults(handler=_cmd_pow, operands=("matrix",))

    p = sub.add_parser(
        "bidet", parents=[common], help="bideterminant (delta1, delta2) of a square matrix"
    )
    p.add_argument("matrix", help="square matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_bidet, operands=("matrix",))

    p = sub.add_parser("perm", parents=[common], help="tropical permanent of a square matrix")
    p.add_argument("matrix", help="square matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_perm, operands=("matrix",))

    p = sub.add_parser(
        "solve", parents=[common], help="iterate the recurrent system X(k+1) = A (x) X(k)"
    )
    p.add_argument("matrix", help="square system matrix file, or - for stdin")
    p.add_argument("x0", help="initial n x 1 column file, or - for stdin")
    p.add_argument("--k", required=True, type=_nonneg_arg, help="number of steps (k >= 0)")
    p.add_argument(
        "--trace",
        action="store_true",
        help="print every state X(0)..X(k) and the stabilization index when found",
    )
    p.set_defaults(handler=_cmd_solve, operands=("matrix", "x0"))

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stdin_operands = sum(1 for name in args.operands if getattr(args, name) == "-")
    if stdin_operands > 1:
        parser.error("at most one operand may be '-' (stdin)")
    if getattr(args, "max_k", None) is not None and not args.stabilize:
        parser.error("--max-k requires --stabilize")
    try:
        output = args.handler(args)
    except MinPlusError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CODES.get(type(exc), 1)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 10
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

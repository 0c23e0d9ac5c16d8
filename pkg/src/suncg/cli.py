"""Command-line surface: decompose, coefficients, index, verify.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
3 domain error (e.g. a target irrep absent from the decomposition).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import clebsch as _clebsch
from . import littlewood as _littlewood
from . import patterns as _patterns
from . import verify as _verify
from . import weights as _weights

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class DomainError(Exception):
    pass


def _parse_weight(text: str, n: int) -> _weights.IWeight:
    weight = _weights.parse(text)
    if len(weight) != n:
        raise ValueError(f"expected a rank-{n} weight, got {text!r}")
    return weight


def _cmd_decompose(args: argparse.Namespace) -> int:
    left = _parse_weight(args.weight, args.n)
    right = _parse_weight(args.weight2, args.n)
    decomposition = _littlewood.decompose(left, right)
    for term, mult in decomposition.terms:
        print(f"{_weights.to_text(term)} x{mult} dim={_weights.dimension(term)}")
    total, parts = decomposition.dimension_identity()
    print(f"{total} = {' + '.join(str(p) for p in parts)}")
    return EXIT_OK


def _format_value(value: float) -> str:
    return f"{value:.14e}"


def _cmd_coefficients(args: argparse.Namespace) -> int:
    left = _parse_weight(args.weight, args.n)
    right = _parse_weight(args.weight2, args.n)
    target = _weights.normalize(_parse_weight(args.target, args.n))
    decomposition = _littlewood.decompose(left, right)
    if decomposition.multiplicity(target) == 0:
        raise DomainError(
            f"{_weights.to_text(target)} does not occur in "
            f"{_weights.to_text(left)} x {_weights.to_text(right)}"
        )
    tensor = _clebsch.compute_tensor(left, right, target, decomposition=decomposition)
    lines = [
        f"# {args.n} {_weights.to_text(left)} {_weights.to_text(right)} "
        f"{_weights.to_text(target)} {tensor.alpha_count}"
    ]
    count = 0
    for alpha, qpp, q, qp, value in tensor.nonzeros():
        lines.append(f"{alpha}\t{qpp}\t{q}\t{qp}\t{_format_value(value)}")
        count += 1
    body = "\n".join(lines) + "\n"
    summary = f"alpha_count={tensor.alpha_count} nonzero={count}"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(body)
        if not args.quiet:
            print(summary)
    else:
        sys.stdout.write(body)
        if not args.quiet:
            print(summary, file=sys.stderr)
    return EXIT_OK


def _cmd_index(args: argparse.Namespace) -> int:
    if args.mode == "weight-to-index":
        weight = _parse_weight(args.arg1, args.n)
        print(_weights.index(_weights.normalize(weight)))
    elif args.mode == "weight-from-index":
        print(_weights.to_text(_weights.from_index(args.n, int(args.arg1))))
    elif args.mode == "pattern-to-index":
        pattern = _patterns.parse(args.arg1)
        print(_patterns.index(pattern))
    else:  # pattern-from-index
        weight = _weights.parse(args.arg1)
        print(_patterns.from_index(weight, int(args.arg2)).to_text())
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    left = _parse_weight(args.weight, args.n)
    right = _parse_weight(args.weight2, args.n)
    reports = _verify.run_all(left, right, tol=args.tol)
    if not args.quiet:
        for report in reports:
            print(report)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suncg",
        description="SU(N) tensor product decompositions and Clebsch-Gordan tables "
        "in the Gelfand-Tsetlin basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="irrep content of a tensor product")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("weight", metavar="S", help='e.g. "(2,1,0)"')
    p.add_argument("weight2", metavar="S2")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("coefficients", help="coupling coefficient table for one target irrep")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("weight", metavar="S")
    p.add_argument("weight2", metavar="S2")
    p.add_argument("target", metavar="S2PP")
    p.add_argument("--output", metavar="PATH", help="write the TSV table here instead of stdout")
    p.add_argument("--quiet", action="store_true", help="suppress the summary line")
    p.set_defaults(func=_cmd_coefficients)

    p = sub.add_parser("index", help="translate weights/patterns to indices and back")
    modes = p.add_subparsers(dest="mode", required=True)
    m = modes.add_parser("weight-to-index")
    m.add_argument("n", type=int, metavar="N")
    m.add_argument("arg1", metavar="S")
    m = modes.add_parser("weight-from-index")
    m.add_argument("n", type=int, metavar="N")
    m.add_argument("arg1", metavar="P")
    m = modes.add_parser("pattern-to-index")
    m.add_argument("arg1", metavar="PATTERN", help='e.g. "2 1 0; 2 1; 2"')
    m = modes.add_parser("pattern-from-index")
    m.add_argument("arg1", metavar="S")
    m.add_argument("arg2", metavar="Q")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("verify", help="run all consistency checks on one product")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("weight", metavar="S")
    p.add_argument("weight2", metavar="S2")
    p.add_argument("--tol", type=float, default=1e-8, help="verification tolerance")
    p.add_argument("--quiet", action="store_true", help="exit status only")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
3 inconclusive search. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .constructors import CodeBook, construct
from .formats import FormatError, parse_matrix, render_matrix, render_report
from .minrank import DEFAULT_MAX_EDGES, DEFAULT_MAX_NODES, SearchInconclusive, is_critical, minrank
from .model import CaseParams, InvalidParameters, ProblemSpec, capacity_general, make_case
from .verifier import DEFAULT_MAX_CARD, check_optimal_length, verify_all

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3

PATTERN_HELP = (
    "pattern: <case> K D [lambda] (case as I..X or caseI..caseX), "
    "full K D, general K U D, complete K, or empty K"
)


class UsageError(Exception):
    pass


def _ints(values: Sequence[str], what: str) -> List[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"{what} must be integers, got {' '.join(values)}") from None


def _case_params(case: str, K: int, D: int, lam: Optional[int]) -> CaseParams:
    return make_case(case, K, D, lam)


def parse_pattern(tokens: Sequence[str]) -> ProblemSpec:
    if not tokens:
        raise UsageError(PATTERN_HELP)
    kind, rest = tokens[0], tokens[1:]
    nums = _ints(rest, "pattern arguments")
    low = kind.lower()
    if low == "full":
        if len(nums) != 2:
            raise UsageError("full needs K D")
        return ProblemSpec.one_sided(*nums)
    if low == "general":
        if len(nums) != 3:
            raise UsageError("general needs K U D")
        return ProblemSpec.general(*nums)
    if low in ("complete", "empty"):
        if len(nums) != 1:
            raise UsageError(f"{low} needs K")
        return ProblemSpec.complete(nums[0]) if low == "complete" else ProblemSpec.empty(nums[0])
    if len(nums) not in (2, 3):
        raise UsageError(PATTERN_HELP)
    lam = nums[2] if len(nums) == 3 else None
    return ProblemSpec.from_case(_case_params(kind, nums[0], nums[1], lam))


def cmd_generate(args: argparse.Namespace) -> int:
    params = _case_params(args.case, args.K, args.D, args.lam)
    code = construct(params)
    out = render_matrix(code.matrix)
    if args.symbols:
        out += "\n".join(code.symbol_lines()) + "\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    params = _case_params(args.case, args.K, args.D, args.lam)
    if args.matrix:
        matrix = parse_matrix(Path(args.matrix).read_text())
        if matrix.nrows != params.K:
            raise UsageError(f"matrix file has {matrix.nrows} rows but K={params.K}")
        code = CodeBook.from_matrix(params, matrix)
    else:
        code = construct(params)
    problem = ProblemSpec.from_case(params)
    report = verify_all(problem, code, max_card=args.max_card)
    sys.stdout.write(render_report(code, report))
    capped = [r.k for r in report.receivers if r.capped]
    if capped:
        print(f"note: transmission search hit the cardinality cap for receivers {capped}", file=sys.stderr)
    ok = report.all_decodable and check_optimal_length(code)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_minrank(args: argparse.Namespace) -> int:
    g = parse_pattern(args.pattern)
    res = minrank(g, max_edges=args.max_edges, max_nodes=args.max_nodes)
    sys.stdout.write(f"minrank={res.value}\n" + render_matrix(res.witness))
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    g = parse_pattern(args.pattern)
    res = is_critical(g, max_edges=args.max_edges, max_nodes=args.max_nodes)
    lines = [f"minrank={res.minrank}"]
    for (i, j), value in res.without.items():
        flag = "true" if value > res.minrank else "false"
        lines.append(f"edge={i},{j} critical={flag} minrank_without={value}")
    lines.append(f"overall={'true' if res.critical else 'false'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_capacity(args: argparse.Namespace) -> int:
    c = capacity_general(args.K, args.U, args.D)
    sys.stdout.write(f"{c.numerator}\n" if c.denominator == 1 else f"{c.numerator}/{c.denominator}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antidote-codes",
        description="Optimal scalar linear index codes for one-sided neighboring antidotes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def case_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("case", help="case tag I..X")
        p.add_argument("K", type=int)
        p.add_argument("D", type=int)
        p.add_argument("lam", type=int, nargs="?", default=None, metavar="lambda")

    p = sub.add_parser("generate", help="print the generator matrix of a case")
    case_args(p)
    p.add_argument("--symbols", action="store_true", help="also list code symbols")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check decodability and per-receiver transmission counts")
    case_args(p)
    p.add_argument("--matrix", metavar="FILE", help="verify this generator matrix instead of the built one")
    p.add_argument("--max-card", type=int, default=DEFAULT_MAX_CARD)
    p.set_defaults(func=cmd_verify)

    for name, func, text in (
        ("minrank", cmd_minrank, "exact minrank of a side-information graph"),
        ("critical", cmd_critical, "minrank-criticality of every edge"),
    ):
        p = sub.add_parser(name, help=text, description=PATTERN_HELP)
        p.add_argument("pattern", nargs="+")
        p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
        p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
        p.set_defaults(func=func)

    p = sub.add_parser("capacity", help="symmetric capacity per message")
    p.add_argument("K", type=int)
    p.add_argument("U", type=int)
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameters, UsageError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SearchInconclusive as exc:
        print(f"inconclusive: budget exhausted ({exc})", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: every verification as a JSON-emitting command.

Exit status: 0 when all checks pass, 1 when an exact check fails,
2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import characters, fock, sector_arith, sugawara, verma
from .errors import Virc1Error
from .jsonio import (branching_to_json, character_to_json, dim_to_json, dumps, rational_to_json,
                     verdict_to_json)

DEFAULT_MAX_LEVEL = 20
DEFAULT_MAX_ORDER = 50
ENV_MAX_WORK = "VIRC1_MAX_WORK"

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandReport:
    command: str
    parameters: dict
    result: object
    passed: bool = True
    wall_time: float = 0.0
    lines: list[str] = field(default_factory=list)  # human-readable rendering

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "status": "pass" if self.passed else "fail",
            "wall_time": round(self.wall_time, 6),
        }


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _work_caps(args) -> tuple[int, int]:
    raw = args.max_work if args.max_work is not None else os.environ.get(ENV_MAX_WORK)
    if raw is None:
        return DEFAULT_MAX_LEVEL, DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"work cap must be an integer, got {raw!r}") from None
    return cap, cap


def _guard(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise UsageError(f"{what} {value} exceeds the work cap {cap}; raise it with --max-work or {ENV_MAX_WORK}")


def _nonnegative(value: int, what: str) -> None:
    if value < 0:
        raise UsageError(f"{what} must be nonnegative, got {value}")


def _json_list(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {text!r} as JSON: {exc}") from None


def cmd_partitions(args) -> CommandReport:
    _nonnegative(args.n, "n")
    _guard(args.n, _work_caps(args)[0], "n")
    parts = fock.enumerate_partitions(args.n)
    params = {"n": args.n, "count_only": args.count_only}
    if args.count_only:
        return CommandReport("partitions", params, len(parts), lines=[str(len(parts))])
    lines = [" + ".join(map(str, p)) or "(empty)" for p in parts]
    return CommandReport("partitions", params, [list(p) for p in parts], lines=lines)


def cmd_verify_virasoro(args) -> CommandReport:
    _nonnegative(args.max_mode, "max-mode")
    _nonnegative(args.max_level, "max-level")
    _guard(args.max_level, _work_caps(args)[0], "max-level")
    q, k = args.q, args.max_mode
    modes = range(-k, k + 1)
    commutators = []
    lines = []
    for n in modes:
        for m in modes:
            rep = sugawara.commutator_check(n, m, q, args.max_level)
            commutators.append({"n": n, "m": m, "passed": rep.passed,
                                "counterexample": list(rep.counterexample) if rep.counterexample else None})
            if not rep.passed:
                lines.append(f"[L_{n}, L_{m}] FAILED at (level, row, col) = {rep.counterexample}")
    adjoint = [{"n": n, "passed": sugawara.adjoint_check(n, q, args.max_level)} for n in modes]
    central = [{"n": n, "m": -n, "value": rational_to_json(sugawara.central_term(n))}
               for n in range(1, k + 1)]
    n_ok = sum(c["passed"] for c in commutators)
    a_ok = sum(a["passed"] for a in adjoint)
    lines.append(f"commutators: {n_ok}/{len(commutators)} pass (q={q}, levels 0..{args.max_level})")
    lines.append(f"adjointness: {a_ok}/{len(adjoint)} pass")
    lines += [f"central term [L_{c['n']}, L_{c['m']}]: {c['value']}" for c in central]
    passed = n_ok == len(commutators) and a_ok == len(adjoint)
    params = {"q": rational_to_json(q), "max_mode": k, "max_level": args.max_level}
    result = {"commutators": commutators, "adjoint": adjoint, "central_terms": central}
    return CommandReport("verify-virasoro", params, result, passed, lines=lines)


def cmd_character(args) -> CommandReport:
    _nonnegative(args.order, "order")
    _guard(args.order, _work_caps(args)[1], "order")
    if args.kind == "fock":
        if args.q is None:
            raise UsageError("character fock needs --q")
        ch = characters.fock_character(args.q, args.order)
        params = {"kind": "fock", "q": rational_to_json(args.q), "order": args.order}
    else:
        if args.h is None:
            raise UsageError("character irrep needs --h")
        ch = verma.irreducible_character(args.h, args.order)
        params = {"kind": "irrep", "h": rational_to_json(args.h), "order": args.order}
    return CommandReport("character", params, character_to_json(ch), lines=[str(ch)])


def cmd_branch(args) -> CommandReport:
    _nonnegative(args.order, "order")
    _guard(args.order, _work_caps(args)[1], "order")
    res = characters.branch(characters.fock_character(args.q, args.order), args.order)
    lines = [f"h = {str(h):<10} multiplicity {m}" for h, m in res.components]
    lines.append("residual zero" if res.succeeded else f"residual nonzero: {res.residual}")
    params = {"q": rational_to_json(args.q), "order": args.order}
    return CommandReport("branch", params, branching_to_json(res), res.succeeded, lines=lines)


def cmd_shapovalov(args) -> CommandReport:
    _nonnegative(args.level, "level")
    _guard(args.level, _work_caps(args)[0], "level")
    w = verma.LowestWeight(args.c, args.h)
    rows = []
    lines = [f"{'level':>5}  {'kernel':>6}  determinant"]
    for level in range(1, args.level + 1):
        g = verma.gram_matrix(w, level)
        det = g.determinant()
        kdim = len(verma.kernel(g))
        rows.append({"level": level, "determinant": rational_to_json(det), "kernel_dim": kdim})
        lines.append(f"{level:>5}  {kdim:>6}  {det}")
    params = {"c": rational_to_json(args.c), "h": rational_to_json(args.h), "level": args.level}
    return CommandReport("shapovalov", params, {"levels": rows, "class": str(verma.classify(args.h))}, lines=lines)


def cmd_lwv(args) -> CommandReport:
    _nonnegative(args.max_level, "max-level")
    _guard(args.max_level, _work_caps(args)[0], "max-level")
    dims = sugawara.lowest_weight_census(args.q, args.max_level)
    lines = [f"level {n:>3}: {d}" for n, d in enumerate(dims)]
    params = {"q": rational_to_json(args.q), "max_level": args.max_level}
    return CommandReport("lwv", params, {"dims": dims}, lines=lines)


def _dims(text: str) -> list[sector_arith.Dim]:
    raw = _json_list(text)
    if not isinstance(raw, list):
        raise UsageError(f"expected a JSON list, got {text!r}")
    return [sector_arith.Dim.parse(x) for x in raw]


def cmd_sector(args) -> CommandReport:
    sub = args.sector_command
    if sub == "rest-dim":
        d = sector_arith.restricted_dimension(sector_arith.Dim.parse(args.index), sector_arith.Dim.parse(args.d))
        params = {"index": args.index, "d": args.d}
        return CommandReport("sector rest-dim", params, dim_to_json(d), lines=[str(d)])
    if sub == "mu":
        table = sector_arith.SectorTable.from_dims(_dims(args.dims))
        mu = sector_arith.global_index(table)
        return CommandReport("sector mu", {"dims": args.dims}, dim_to_json(mu), lines=[str(mu)])
    if sub == "sub-mu":
        mu = sector_arith.subsystem_global_index(sector_arith.Dim.parse(args.index), sector_arith.Dim.parse(args.mu))
        return CommandReport("sector sub-mu", {"index": args.index, "mu": args.mu}, dim_to_json(mu), lines=[str(mu)])
    if sub == "twisted-bound":
        raw = _json_list(args.groups)
        if not isinstance(raw, list) or not all(isinstance(g, list) for g in raw):
            raise UsageError(f"--groups must be a JSON list of lists, got {args.groups!r}")
        groups = tuple(tuple(sector_arith.Dim.parse(x) for x in g) for g in raw)
        index = sector_arith.Dim.parse(args.index) if args.index is not None else None
        grouping = sector_arith.UntwistedGrouping(groups, index)
        table = sector_arith.SectorTable.from_dims(_dims(args.sector_dims)) if args.sector_dims else None
        mu = sector_arith.Dim.parse(args.mu) if args.mu is not None else None
        bound = sector_arith.twisted_lower_bound(grouping, mu, table)
        params = {"groups": args.groups, "index": args.index, "sector_dims": args.sector_dims, "mu": args.mu}
        return CommandReport("sector twisted-bound", params, dim_to_json(bound), lines=[str(bound)])
    if sub == "verdict":
        v = sector_arith.c1_continuum_verdict(args.h)
        lines = [f"h = {v.h}: d = {v.dimension}" + (" (conjectural)" if v.conjectural else "")]
        lines += [f"  {i + 1}. {step}" for i, step in enumerate(v.justification)]
        return CommandReport("sector verdict", {"h": rational_to_json(args.h)}, verdict_to_json(v), lines=lines)
    raise UsageError(f"unknown sector subcommand {sub!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--max-work", type=int, default=None,
                        help=f"cap on levels and orders (default {DEFAULT_MAX_LEVEL} / {DEFAULT_MAX_ORDER}; env {ENV_MAX_WORK})")

    parser = argparse.ArgumentParser(prog="virc1", description="Exact c = 1 Virasoro / free boson checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="enumerate partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("verify-virasoro", parents=[common], help="check the Sugawara Virasoro relations")
    p.add_argument("--q", type=rational, default=Fraction(0))
    p.add_argument("--max-mode", type=int, default=3)
    p.add_argument("--max-level", type=int, default=6)
    p.set_defaults(func=cmd_verify_virasoro)

    p = sub.add_parser("character", parents=[common], help="Fock or irreducible Virasoro character")
    p.add_argument("kind", choices=["fock", "irrep"])
    p.add_argument("--q", type=rational)
    p.add_argument("--h", type=rational)
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("branch", parents=[common], help="branch a Fock character into Virasoro characters")
    p.add_argument("--q", type=rational, default=Fraction(0))
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("shapovalov", parents=[common], help="Shapovalov determinants and kernels")
    p.add_argument("--c", type=rational, default=Fraction(1))
    p.add_argument("--h", type=rational, required=True)
    p.add_argument("--level", type=int, default=4)
    p.set_defaults(func=cmd_shapovalov)

    p = sub.add_parser("lwv", parents=[common], help="lowest-weight vectors in a Fock space")
    p.add_argument("--q", type=rational, default=Fraction(0))
    p.add_argument("--max-level", type=int, default=10)
    p.set_defaults(func=cmd_lwv)

    p = sub.add_parser("sector", help="statistical dimension arithmetic")
    ssub = p.add_subparsers(dest="sector_command", required=True)
    s = ssub.add_parser("rest-dim", parents=[common], help="dimension of a restricted representation")
    s.add_argument("--index", required=True)
    s.add_argument("--d", required=True)
    s = ssub.add_parser("mu", parents=[common], help="global index from sector dimensions")
    s.add_argument("--dims", required=True, help='JSON list, vacuum first, e.g. "[1,1,2]"')
    s = ssub.add_parser("sub-mu", parents=[common], help="global index of a finite-index subsystem")
    s.add_argument("--index", required=True)
    s.add_argument("--mu", required=True)
    s = ssub.add_parser("twisted-bound", parents=[common], help="lower bound on the twisted global index")
    s.add_argument("--groups", required=True, help='JSON list of lists, vacuum group first')
    s.add_argument("--index")
    s.add_argument("--sector-dims", help="JSON list of ambient sector dimensions, vacuum first")
    s.add_argument("--mu")
    s = ssub.add_parser("verdict", parents=[common], help="statistical dimension of the c = 1 sector h")
    s.add_argument("--h", type=rational, required=True)
    p.set_defaults(func=cmd_sector)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run one command; return the exit status and the text that would be printed."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, Virc1Error) as exc:
        return EXIT_USAGE, f"error: {exc}"
    report.wall_time = time.perf_counter() - start
    status = EXIT_PASS if report.passed else EXIT_FAIL
    if args.json:
        return status, dumps(report.to_json())
    header = f"{report.command}: {'PASS' if report.passed else 'FAIL'}"
    return status, "\n".join([header] + report.lines)


def main(argv=None) -> int:
    status, text = run(argv)
    stream = sys.stderr if status == EXIT_USAGE else sys.stdout
    print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit status: 0 on success, 2 when the data fails a check the command needs
(e.g. a malformed matrix or an unrealizable degree), 1 on usage and I/O
errors.  Machine output goes to stdout (or ``-o``); diagnostics go to stderr.
Component indices on the command line and in the output are 1-based.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import fileformat
from .core import MalformedTypeError, ReductionType, strata_of, validate_model
from .invariants import summarize
from .modelops import (
    BlowupChain,
    NotRealizableError,
    blowup_intersection,
    blowup_smooth_point,
    random_refinement,
    realize_degree,
)
from .search import SearchConstraints, enumerate_types, verify_example
from .semigroup import (
    BudgetExceeded,
    ShiftedSemigroup,
    check_stability,
    sg_contains,
    sg_gcd,
    stability_threshold,
)


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """Carries a machine-readable payload alongside exit status 2."""

    def __init__(self, message: str, payload=None):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> ReductionType:
    return fileformat.loads(_read_text(path))


def _well_formed(rt: ReductionType) -> ReductionType:
    if not rt.well_formed:
        raise CheckFailed("malformed reduction type: " + "; ".join(rt.structural_problems))
    return rt


def _one_based(indices) -> list[int]:
    return [i + 1 for i in indices]


def _index_arg(value: int, rt: ReductionType) -> int:
    if not 1 <= value <= rt.r:
        raise UsageError(f"component index {value} out of range 1..{rt.r}")
    return value - 1


def _chain_json(chain: BlowupChain) -> dict:
    return {
        "steps": [
            {
                "kind": s.kind,
                "centre": _one_based(s.centre),
                "new_index": s.new_index + 1,
                "new_multiplicity": s.new_multiplicity,
            }
            for s in chain.steps
        ],
        "witness": None if chain.witness is None else chain.witness + 1,
        "result": fileformat.to_dict(chain.result),
    }


def cmd_validate(args):
    report = validate_model(_load(args.file))
    out = asdict(report)
    out["genus"] = None if report.genus is None else fileformat.rational_json(report.genus)
    out["diagnostics"] = list(report.diagnostics)
    if not report.winters_ok:
        raise CheckFailed("reduction type is not realizable", out)
    return out


def cmd_invariants(args):
    s = summarize(_well_formed(_load(args.file)))
    return {
        "nu": s.nu,
        "index": s.index,
        "sp_index": s.sp_index,
        "genus": fileformat.rational_json(s.genus),
        "degree_set_generators": list(s.degree_set.generators),
    }


def cmd_strata(args):
    rt = _well_formed(_load(args.file))
    return [{"J": _one_based(s.J), "N_J": s.N_J} for s in strata_of(rt)]


def cmd_blowup(args):
    rt = _well_formed(_load(args.file))
    if args.smooth is not None:
        return fileformat.to_dict(blowup_smooth_point(rt, _index_arg(args.smooth, rt)))
    if args.edge is not None:
        if len(args.edge) != 2:
            raise UsageError("--edge expects i,j")
        i, j = (_index_arg(v, rt) for v in args.edge)
        if i == j or rt.C[i][j] < 1:
            raise CheckFailed(f"components {i + 1} and {j + 1} do not meet")
        return fileformat.to_dict(blowup_intersection(rt, i, j))
    if not validate_model(rt).fiber_ok:
        raise CheckFailed("random refinement needs C.N^t = 0")
    return _chain_json(random_refinement(rt, args.random, args.seed))


def cmd_realize(args):
    rt = _well_formed(_load(args.file))
    if len(args.stratum) not in (1, 2):
        raise UsageError("--stratum expects i or i,j")
    J = [_index_arg(v, rt) for v in args.stratum]
    if args.degree < 1:
        raise UsageError("--degree must be positive")
    try:
        chain = realize_degree(rt, J, args.degree)
    except NotRealizableError as exc:
        raise CheckFailed(str(exc)) from None
    except ValueError as exc:
        raise CheckFailed(str(exc)) from None
    return _chain_json(chain)


def cmd_semigroup(args):
    try:
        S = ShiftedSemigroup(tuple(args.gens))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"gens": list(S.gens)}
    if args.contains is not None:
        if args.contains < 1:
            raise UsageError("--contains expects a positive integer")
        out["d"] = args.contains
        out["contains"] = sg_contains(S, args.contains)
    elif args.threshold:
        out["threshold"] = stability_threshold(S)
    else:
        out["gcd"] = sg_gcd(S)
    return out


def cmd_lemma_check(args):
    try:
        doc = json.loads(_read_text(args.file))
    except json.JSONDecodeError as exc:
        raise UsageError(f"document: invalid JSON ({exc})") from None
    if not isinstance(doc, dict) or "parts" not in doc or "subgens" not in doc:
        raise UsageError("document: expected an object with 'parts' and 'subgens'")
    try:
        parts = [ShiftedSemigroup(tuple(p)) for p in doc["parts"]]
        subgens = tuple(doc["subgens"])
        report = check_stability(parts, subgens, seed=args.seed, budget=args.budget_nodes)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"parts/subgens: {exc}") from None
    except BudgetExceeded as exc:
        raise CheckFailed(str(exc)) from None
    out = asdict(report)
    out["sampled_m"] = list(report.sampled_m)
    if report.certificate is not None:
        out["certificate"] = {k: list(v) if isinstance(v, tuple) else v for k, v in out["certificate"].items()}
    return out


def cmd_search(args):
    c = SearchConstraints(
        genus=args.genus,
        index_eq=args.index,
        sp_index_min=args.sp_index_min,
        sp_index_eq=args.sp_index,
        max_components=args.max_components,
        max_multiplicity=args.max_multiplicity,
        max_genus_label=args.max_genus_label,
        max_offdiag=args.max_offdiag,
        max_selfint_abs=args.max_selfint,
        limit=0 if args.count_only else args.limit,
        budget_nodes=args.budget_nodes,
    )
    res = enumerate_types(c)
    return {
        "types": [fileformat.to_dict(t) for t in res.types],
        "count": res.count,
        "exhausted": res.exhausted,
        "stats": asdict(res.stats),
    }


def cmd_verify_example(args):
    try:
        rep = verify_example(args.name, args.x)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out = asdict(rep)
    if not rep.passed:
        raise CheckFailed(f"{args.name} with x={args.x} failed", out)
    return out


def cmd_export_dot(args):
    return fileformat.export_dot(_well_formed(_load(args.file)))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spindex", description="Invariants of snc special fibers of curves.")
    p.add_argument("-o", "--output", default="-", help="output path (default stdout)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", nargs="?", default="-", help="reduction-type JSON (default stdin)")
        sp.set_defaults(func=func)
        return sp

    with_file("validate", cmd_validate, "check realizability conditions")
    with_file("invariants", cmd_invariants, "nu, index, specialization index, genus, degree set")
    with_file("strata", cmd_strata, "list nonempty strata with their gcds")
    with_file("export-dot", cmd_export_dot, "DOT rendering of the dual graph")

    sp = with_file("blowup", cmd_blowup, "blow up a point of the special fiber")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--smooth", type=int, metavar="I")
    g.add_argument("--edge", type=_int_list, metavar="I,J")
    g.add_argument("--random", type=int, metavar="STEPS", help="seeded random chain of blow-ups")
    sp.add_argument("--seed", type=int, default=0)

    sp = with_file("realize", cmd_realize, "blow up until a component multiplicity divides d")
    sp.add_argument("--stratum", type=_int_list, required=True, metavar="I[,J]")
    sp.add_argument("--degree", type=int, required=True, metavar="D")

    sp = sub.add_parser("semigroup", help="queries on {sum a_j g_j : a_j >= 1}")
    sp.add_argument("--gens", type=_int_list, required=True, metavar="A,B,...")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--contains", type=int, metavar="D")
    g.add_argument("--threshold", action="store_true")
    g.add_argument("--gcd", action="store_true")
    sp.set_defaults(func=cmd_semigroup)

    sp = with_file("lemma-check", cmd_lemma_check, 'min-gcd check on {"parts": [...], "subgens": [...]}')
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget-nodes", type=int, default=1_000_000)

    sp = sub.add_parser("search", help="bounded enumeration of realizable types")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--index", type=int)
    sp.add_argument("--sp-index-min", type=int)
    sp.add_argument("--sp-index", type=int, help="exact specialization index")
    sp.add_argument("--max-components", type=int, default=6)
    sp.add_argument("--max-multiplicity", type=int, default=6)
    sp.add_argument("--max-genus-label", type=int, default=1)
    sp.add_argument("--max-offdiag", type=int, default=2)
    sp.add_argument("--max-selfint", type=int, default=4)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--budget-nodes", type=int)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify-example", help="recheck a named fixture")
    sp.add_argument("--name", required=True, choices=["example1", "example2"])
    sp.add_argument("--x", type=int, default=0)
    sp.set_defaults(func=cmd_verify_example)
    return p


def _emit(result, path: str) -> None:
    text = result if isinstance(result, str) else json.dumps(result) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
        _emit(result, args.output)
        return 0
    except UsageError as exc:
        print(f"spindex: error: {exc}", file=sys.stderr)
        return 1
    except (fileformat.FormatError, OSError) as exc:
        print(f"spindex: error: {exc}", file=sys.stderr)
        return 1
    except (CheckFailed, MalformedTypeError) as exc:
        payload = getattr(exc, "payload", None)
        if payload is not None:
            _emit(payload, args.output)
        print(f"spindex: check failed: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())

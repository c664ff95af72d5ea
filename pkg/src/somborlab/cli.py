"""Command-line surface tying the modules into reproducible runs.

Exit codes: 0 when everything requested passed, 1 when a claim check or
sweep reported a failure, 2 for usage or capacity errors.  Given the same
arguments (and seed, where one applies) every run writes byte-identical
output regardless of worker count.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from dataclasses import dataclass

from . import formulas
from .enumeration import DEFAULT_CAP, enumerate_two_trees
from .extremal import ConjectureReport, ExtremalReport, conjecture_report, verify_theorems
from .families import (
    TwoTreeRecipe,
    complete,
    from_recipe,
    l_graph,
    linear_two_tree,
    random_recipe,
    x_graph,
)
from .graph6 import from_graph6, to_dot, to_graph6
from .graphs import CapacityError, Graph
from .indices import IndexValue, sombor_coindex, sombor_index

CAP_ENV = "SOMBORLAB_CAP"

ANCHOR_DOUBLE_GAP = (1.8725, 1e-4)
ANCHOR_DIAG_STEP = (1.40312, 1e-5)


@dataclass(frozen=True)
class RunConfig:
    """Resolved shared knobs for one invocation.

    Identical configs (plus identical subcommand-specific flags) produce
    byte-identical output, whatever the worker count.
    """

    subcommand: str
    orders: tuple[int, ...] = ()
    cap: int = DEFAULT_CAP
    workers: int = 1
    fmt: str = ""
    output: str | None = None
    reading: str = "both"
    seed: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            subcommand=args.subcommand,
            orders=tuple(getattr(args, "n", ()) or ()),
            cap=getattr(args, "cap", DEFAULT_CAP),
            workers=getattr(args, "workers", 1),
            fmt=getattr(args, "format", ""),
            output=getattr(args, "output", None),
            reading=getattr(args, "reading", "both"),
            seed=getattr(args, "seed", 0),
        )


def _default_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def _parse_orders(text: str) -> tuple[int, ...]:
    """A single order ``N`` or an inclusive range ``A..B``."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty order range {text!r}")
        return tuple(range(lo, hi + 1))
    return (int(text),)


def _fmt_float(x: float) -> str:
    return f"{x:.10g}"


def _fmt_value(v: IndexValue) -> str:
    return f"{v.exact} ≈ {_fmt_float(v.approx)}"


def _value_json(exact) -> dict:
    return {"exact": str(exact), "approx": float(exact)}


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_json(payload, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, ensure_ascii=False)
        fh.write("\n")


def _resolve_graph(args) -> tuple[str, Graph]:
    sources = [
        args.family is not None,
        args.recipe is not None,
        getattr(args, "g6", None) is not None,
        args.random_recipe is not None,
    ]
    if sum(sources) != 1:
        raise ValueError("choose exactly one graph source "
                         "(--family/--n, --recipe, --g6 or --random-recipe)")
    if args.family is not None:
        if args.n is None:
            raise ValueError("--family needs --n")
        (n,) = args.n if len(args.n) == 1 else (None,)
        if n is None:
            raise ValueError("--family takes a single order, not a range")
        builders = {"X": x_graph, "L": l_graph, "linear": linear_two_tree, "K": complete}
        return f"{args.family}_{n}", builders[args.family](n)
    if args.recipe is not None:
        recipe = TwoTreeRecipe.parse(args.recipe)
        return f"recipe[{recipe}]", from_recipe(recipe)
    if getattr(args, "g6", None) is not None:
        return args.g6, from_graph6(args.g6)
    rng = random.Random(args.seed)
    recipe = random_recipe(args.random_recipe, rng)
    return f"recipe[{recipe}]", from_recipe(recipe)


# -- subcommands ------------------------------------------------------------


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    if len(cfg.orders) != 1:
        raise ValueError("enumerate takes a single order, not a range")
    level = enumerate_two_trees(cfg.orders[0], cap=cfg.cap, workers=cfg.workers)
    manifest = {"order": level.order, "count": level.count, "sha256": level.checksum()}
    if cfg.fmt == "graph6":
        body = "".join(key.decode("ascii") + "\n" for key in level.keys)
    else:
        body = json.dumps(manifest, indent=2) + "\n"
    _emit(body, cfg.output)
    if args.manifest:
        _write_json(manifest, args.manifest)
    return 0


def _cmd_index(args, cfg: RunConfig) -> int:
    label, g = _resolve_graph(args)
    so = sombor_index(g)
    so_bar = sombor_coindex(g)
    lines = [
        f"SO({label}) = {_fmt_value(so)}",
        f"SO_bar({label}) = {_fmt_value(so_bar)}",
    ]
    _emit("".join(line + "\n" for line in lines), cfg.output)
    if args.json:
        _write_json({
            "graph": label,
            "graph6": to_graph6(g),
            "order": g.order,
            "degree_sequence": list(g.degree_sequence()),
            "so": _value_json(so.exact),
            "so_bar": _value_json(so_bar.exact),
        }, args.json)
    return 0


def _claim_line(check) -> str:
    status = "PASS" if check.passed else "FAIL"
    line = (f"n={check.order} {check.claim}: {status} "
            f"witness={check.observed_graph6} "
            f"value={check.observed_value} ≈ {_fmt_float(float(check.observed_value))}")
    if check.note:
        line += f" [{check.note}]"
    return line


def _ranking_json(report: ExtremalReport) -> dict:
    return {
        "direction": report.direction,
        "count": len(report.ranking),
        "ranking": [
            {"graph6": e.graph6, **_value_json(e.exact)} for e in report.ranking
        ],
        "tie_sets": report.tie_sets,
    }


def _claim_json(c) -> dict:
    return {
        "claim": c.claim,
        "expected_family": c.expected_family,
        "expected_value": _value_json(c.expected_value),
        "observed_graph6": c.observed_graph6,
        "observed_value": _value_json(c.observed_value),
        "passed": c.passed,
        "note": c.note,
    }


def _cmd_verify(args, cfg: RunConfig) -> int:
    reports = verify_theorems(cfg.orders, cap=cfg.cap, workers=cfg.workers)
    lines = []
    payload = []
    failures = 0
    # reports arrive as one (index ranking, coindex ranking) pair per order
    for so_report, co_report in zip(reports[0::2], reports[1::2]):
        checks = so_report.claim_checks + co_report.claim_checks
        for check in checks:
            lines.append(_claim_line(check))
            failures += 0 if check.passed else 1
        coincide = so_report.ranking[0].key == co_report.ranking[0].key
        witness = so_report.ranking[0].graph6
        lines.append(
            f"n={so_report.order} cross-direction: SO maximizer and coindex minimizer "
            + (f"coincide ({witness})" if coincide
               else f"differ ({witness} vs {co_report.ranking[0].graph6})")
        )
        payload.append({
            "order": so_report.order,
            "so": _ranking_json(so_report),
            "so_bar": _ranking_json(co_report),
            "claims": [_claim_json(c) for c in checks],
            "extremes_coincide": coincide,
        })
    lines.append(f"claims: {sum(len(r.claim_checks) for r in reports)}, failed: {failures}")
    _emit("".join(line + "\n" for line in lines), cfg.output)
    if args.json:
        _write_json(payload, args.json)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["order", "claim", "expected_family", "passed",
                             "observed_graph6", "exact", "approx", "note"])
            for report in reports:
                for c in report.claim_checks:
                    writer.writerow([c.order, c.claim, c.expected_family, c.passed,
                                     c.observed_graph6, str(c.observed_value),
                                     _fmt_float(float(c.observed_value)), c.note])
    return 1 if failures else 0


def _cmd_check_lemmas(args, cfg: RunConfig) -> int:
    hi = args.limit
    lines = []
    all_violations = []
    grids = {
        "diag-drop-bound": (range(2, hi + 1), range(2, hi + 1)),
        "gap-monotone": (range(2, hi + 1), range(1, hi + 1)),
        "coindex-gain-monotone": (range(1, hi + 1), range(3, hi + 1)),
    }
    for sweep_id, (xs, ys) in grids.items():
        violations = formulas.lemma_sweep(sweep_id, xs, ys)
        all_violations.extend(violations)
        lines.append(f"{sweep_id}: {len(violations)} violations "
                     f"(x {xs[0]}..{xs[-1]}, y {ys[0]}..{ys[-1]})")
    anchors = [
        ("double-gap(5,4)", formulas.double_gap_anchor(), *ANCHOR_DOUBLE_GAP),
        ("diag-step(5,4)", formulas.diag_weight_drop(5, 4), *ANCHOR_DIAG_STEP),
    ]
    anchor_failures = 0
    for name, value, expected, tol in anchors:
        ok = abs(value - expected) <= tol
        anchor_failures += 0 if ok else 1
        lines.append(f"anchor {name} = {_fmt_float(value)} "
                     f"expected {expected} ± {tol} {'PASS' if ok else 'FAIL'}")
    _emit("".join(line + "\n" for line in lines), cfg.output)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["sweep", "check", "x", "y", "lhs", "rhs"])
            for v in all_violations:
                writer.writerow([v.sweep, v.check, v.x, v.y, v.lhs, v.rhs])
    return 1 if all_violations or anchor_failures else 0


def _conjecture_lines(report: ConjectureReport, reading: str) -> list[str]:
    lines = [
        f"n={report.order} min-SO observed={_fmt_float(report.min_so.approx)} "
        f"witness={report.min_so.graph6} degrees={','.join(map(str, report.min_so_degrees))} "
        f"linear={'yes' if report.min_so_is_linear else 'no'}",
    ]
    lines.append(
        f"n={report.order} min-SO conjectured={_fmt_float(report.conjectured_so)} "
        f"gap={_fmt_float(report.so_gap)} "
        f"bound-holds={'yes' if report.so_bound_holds else 'NO (observed minimum is below the conjectured bound)'}"
    )
    lines.append(
        f"n={report.order} max-coindex observed={_fmt_float(report.max_coindex.approx)} "
        f"witness={report.max_coindex.graph6} degrees={','.join(map(str, report.max_coindex_degrees))} "
        f"linear={'yes' if report.max_coindex_is_linear else 'no'}"
    )
    if reading in ("corrected", "both"):
        lines.append(
            f"n={report.order} max-coindex corrected={_fmt_float(report.conjectured_coindex_corrected)} "
            f"gap={_fmt_float(report.coindex_gap_corrected)} "
            f"bound-holds={'yes' if report.coindex_bound_holds_corrected else 'NO'}"
        )
    if reading in ("literal", "both"):
        lines.append(
            f"n={report.order} max-coindex literal={_fmt_float(report.conjectured_coindex_literal)} "
            f"gap={_fmt_float(report.coindex_gap_literal)} "
            f"bound-holds={'yes' if report.coindex_bound_holds_literal else 'NO'}"
        )
    lines.append(
        f"n={report.order} witnesses-coincide={'yes' if report.same_witness else 'no'} "
        f"equality-family-parity={report.parity_label}"
    )
    return lines


def _conjecture_json(reports: list[ConjectureReport]) -> list[dict]:
    return [
        {
            "order": r.order,
            "equality_family_parity": r.parity_label,
            "min_so": {
                "observed": _value_json(r.min_so.exact),
                "graph6": r.min_so.graph6,
                "degree_sequence": list(r.min_so_degrees),
                "matches_linear_two_tree": r.min_so_is_linear,
                "conjectured": r.conjectured_so,
                "gap": r.so_gap,
                "bound_holds": r.so_bound_holds,
            },
            "max_coindex": {
                "observed": _value_json(r.max_coindex.exact),
                "graph6": r.max_coindex.graph6,
                "degree_sequence": list(r.max_coindex_degrees),
                "matches_linear_two_tree": r.max_coindex_is_linear,
                "conjectured_corrected": r.conjectured_coindex_corrected,
                "gap_corrected": r.coindex_gap_corrected,
                "bound_holds_corrected": r.coindex_bound_holds_corrected,
                "conjectured_literal": r.conjectured_coindex_literal,
                "gap_literal": r.coindex_gap_literal,
                "bound_holds_literal": r.coindex_bound_holds_literal,
            },
            "witnesses_coincide": r.same_witness,
        }
        for r in reports
    ]


def _cmd_conjecture(args, cfg: RunConfig) -> int:
    reports = conjecture_report(cfg.orders, cap=cfg.cap, workers=cfg.workers)
    lines = []
    for report in reports:
        lines.extend(_conjecture_lines(report, cfg.reading))
    _emit("".join(line + "\n" for line in lines), cfg.output)
    if args.json:
        _write_json(_conjecture_json(reports), args.json)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([
                "order", "min_so_exact", "min_so_approx", "min_so_graph6", "min_so_linear",
                "conjectured_so", "so_gap", "so_bound_holds",
                "max_coindex_exact", "max_coindex_approx", "max_coindex_graph6",
                "max_coindex_linear", "conjectured_coindex_corrected", "coindex_gap_corrected",
                "conjectured_coindex_literal", "coindex_gap_literal",
            ])
            for r in reports:
                writer.writerow([
                    r.order, str(r.min_so.exact), _fmt_float(r.min_so.approx),
                    r.min_so.graph6, r.min_so_is_linear,
                    _fmt_float(r.conjectured_so), _fmt_float(r.so_gap), r.so_bound_holds,
                    str(r.max_coindex.exact), _fmt_float(r.max_coindex.approx),
                    r.max_coindex.graph6, r.max_coindex_is_linear,
                    _fmt_float(r.conjectured_coindex_corrected),
                    _fmt_float(r.coindex_gap_corrected),
                    _fmt_float(r.conjectured_coindex_literal),
                    _fmt_float(r.coindex_gap_literal),
                ])
    return 0


def _cmd_export(args, cfg: RunConfig) -> int:
    label, g = _resolve_graph(args)
    if cfg.fmt == "graph6":
        _emit(to_graph6(g) + "\n", cfg.output)
    else:
        _emit(to_dot(g, name=label), cfg.output)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="somborlab",
        description="Exact Sombor index/coindex laboratory for two-trees.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, orders=True):
        if orders:
            p.add_argument("--n", type=_parse_orders, required=True,
                           help="order N or inclusive range A..B")
        p.add_argument("--cap", type=int, default=_default_cap(),
                       help=f"enumeration order cap (default {DEFAULT_CAP}, env {CAP_ENV})")
        p.add_argument("--workers", type=int, default=1,
                       help="process count for level expansion")
        p.add_argument("--output", help="write stdout payload to this file instead")

    p = sub.add_parser("enumerate", help="emit all two-trees of one order as graph6 lines")
    common(p)
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.add_argument("--manifest", help="also write a JSON manifest (order, count, checksum)")
    p.set_defaults(func=_cmd_enumerate)

    def graph_source(p, with_g6=True):
        p.add_argument("--family", choices=("X", "L", "linear", "K"))
        p.add_argument("--n", type=_parse_orders, help="order for --family")
        p.add_argument("--recipe", help="comma-separated edge choices, e.g. 0,0,1")
        if with_g6:
            p.add_argument("--g6", help="graph6 string to evaluate")
        p.add_argument("--random-recipe", type=int, metavar="ORDER",
                       help="seeded random construction trace of this order")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output")

    p = sub.add_parser("index", help="exact Sombor index and coindex of one graph")
    graph_source(p)
    p.add_argument("--json", help="write a JSON report here")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("verify-theorems",
                       help="check the four extremal claims by exhaustive exact ranking")
    common(p)
    p.add_argument("--json", help="write full rankings and claims as JSON")
    p.add_argument("--csv", help="write claim checks as CSV")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check-lemmas", help="grid-sweep the scalar inequality claims")
    p.add_argument("--limit", type=int, default=200, help="grid upper bound (default 200)")
    p.add_argument("--csv", help="write violations as CSV")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_check_lemmas)

    p = sub.add_parser("conjecture",
                       help="evidence report for the open min-index/max-coindex bounds")
    common(p)
    p.add_argument("--reading", choices=("corrected", "literal", "both"), default="both",
                   help="which reading of the conjectured coindex bound to print")
    p.add_argument("--json", help="write the reports as JSON")
    p.add_argument("--csv", help="write the reports as CSV")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("export", help="serialize one graph as graph6 or DOT")
    graph_source(p, with_g6=False)
    p.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    p.set_defaults(func=_cmd_export)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args, RunConfig.from_args(args))
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

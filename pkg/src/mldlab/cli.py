"""mldlab command line: mld, classify, resolve, certificate, verify, min-level.

Exit status contract: 0 success / verification pass, 2 counterexample
found by verify, 64 usage error, 65 input error (parse failures and
irrational base points), 1 anything operational.  No floating-point token
ever appears in any output; rationals print as p/q.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .blowup import (
    BlowUpRecord,
    ResolutionGraph,
    graph_table,
    log_resolution,
    replay_resolution,
    to_dot,
)
from .errors import (
    AllZeroGenerators,
    BudgetExceeded,
    EmptyGeneratorList,
    FactorCountMismatch,
    IrrationalBasePoint,
    MldlabError,
    NotPlt,
    PolySyntaxError,
    PositiveDimensionalCosupport,
    UnsupportedClassification,
)
from .mld import classify, compute_constants, log_discrepancy, mld_at_origin
from .poly import format_poly
from .stability import empirical_min_level, verify_semicontinuity
from .system import IdealSystem, _frac_str

EX_OK = 0
EX_OPERATIONAL = 1
EX_COUNTEREXAMPLE = 2
EX_USAGE = 64
EX_INPUT = 65

_INPUT_ERRORS = (
    PolySyntaxError,
    IrrationalBasePoint,
    EmptyGeneratorList,
    AllZeroGenerators,
    PositiveDimensionalCosupport,
    FactorCountMismatch,
    NotPlt,
    UnsupportedClassification,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunConfig:
    command: str
    system: IdealSystem | None
    fmt: str
    dot: str | None
    samples: int
    seed: int
    budget: int
    replay: str | None


def _add_system_flags(p: _Parser):
    p.add_argument("--ideal", action="append", default=[], metavar="(g1, g2, ...)",
                   help="generators of one factor; repeat per factor, paired with --exp")
    p.add_argument("--exp", action="append", default=[], metavar="p/q",
                   help="positive rational exponent of the matching --ideal")
    p.add_argument("--file", help="JSON system document instead of inline flags")


def build_parser() -> _Parser:
    parser = _Parser(prog="mldlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in [
        ("mld", "minimal log discrepancy over the origin"),
        ("classify", "mld plus the klt/plt/lc classification and centre"),
        ("resolve", "log resolution: divisor table, optional DOT export"),
        ("certificate", "stability constants (c, s, t, t', l, F)"),
        ("verify", "perturbation stability of the mld (seeded samples)"),
        ("min-level", "smallest level with no sampled counterexample"),
    ]:
        p = sub.add_parser(name, help=doc)
        _add_system_flags(p)
        p.add_argument("--format", choices=["text", "json"], default="text")
        if name == "resolve":
            p.add_argument("--dot", help="write the dual graph in DOT format here")
            p.add_argument("--replay", help="re-ingest a resolve JSON document")
        if name in ("verify", "min-level"):
            p.add_argument("--seed", type=int, default=0)
        if name == "verify":
            p.add_argument("--samples", type=int, default=50)
        if name == "min-level":
            p.add_argument("--budget", type=int, default=40)
    return parser


def _load_system(args) -> IdealSystem:
    if getattr(args, "replay", None):
        raise AssertionError("replay handled separately")
    if args.file:
        if args.ideal or args.exp:
            raise _UsageError("--file excludes inline --ideal/--exp")
        with open(args.file) as fh:
            return IdealSystem.from_json_dict(json.load(fh))
    if len(args.ideal) != len(args.exp):
        raise _UsageError(
            f"{len(args.ideal)} --ideal flags but {len(args.exp)} --exp flags"
        )
    return IdealSystem.parse(list(zip(args.ideal, args.exp)))


def _emit(doc: dict, fmt: str, text_lines: list[str]):
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _resolution_doc(graph: ResolutionGraph) -> dict:
    return {
        "schema": "mldlab.resolution/1",
        "system": graph.system.to_json_dict(),
        "blow_log": [
            {
                "chart": rec.chart,
                "point": [_frac_str(rec.point[0]), _frac_str(rec.point[1])],
                "parents": list(rec.parents),
                "new_divisor": rec.new_divisor,
            }
            for rec in graph.blow_log
        ],
        "divisors": graph_table(graph),
        "discrepancies": {
            f"E{d.id}": _frac_str(log_discrepancy(graph, d.id)) for d in graph.divisors
        },
        "curves": [
            {
                "id": f"C{c.id}",
                "poly": format_poly(c.poly),
                "d": _frac_str(c.coefficient(graph.system)),
                "meets": [
                    {"divisor": f"E{div}", "at": _coord_str(coord)}
                    for div, coord in sorted(c.locations, key=lambda t: t[0])
                ],
            }
            for c in graph.components()
        ],
        "F": f"E{graph.F}" if graph.F is not None else None,
    }


def _coord_str(coord) -> str:
    if coord is None:
        return "non-rational"
    from .blowup import INF

    if coord is INF:
        return "inf"
    return _frac_str(coord)


def _cmd_mld(args) -> int:
    report = mld_at_origin(_load_system(args))
    doc = report.to_json_dict()
    _emit(doc, args.format, [
        f"mld = {report.value_str()}",
        f"computed by {report.computed_by_str()}",
        f"classification: {report.classification}",
    ])
    return EX_OK


def _cmd_classify(args) -> int:
    report = classify(_load_system(args))
    lines = [
        f"classification: {report.classification}",
        f"mld = {report.value_str()} (computed by {report.computed_by_str()})",
    ]
    if report.non_klt_centres:
        centres = ", ".join(
            format_poly(report.graph.component(c).poly) for c in report.non_klt_centres
        )
        lines.append(f"non-klt centre: {centres}")
    if report.F is not None:
        lines.append(f"F = E{report.F}")
    _emit(report.to_json_dict(), args.format, lines)
    return EX_OK


def _cmd_resolve(args) -> int:
    if args.replay:
        with open(args.replay) as fh:
            doc = json.load(fh)
        system = IdealSystem.from_json_dict(doc["system"])
        records = [
            BlowUpRecord(
                chart=r["chart"],
                point=(Fraction(r["point"][0]), Fraction(r["point"][1])),
                parents=tuple(r["parents"]),
                new_divisor=r["new_divisor"],
            )
            for r in doc["blow_log"]
        ]
        graph = replay_resolution(system, records)
    else:
        graph = log_resolution(_load_system(args))
    doc = _resolution_doc(graph)
    lines = [f"{len(graph.divisors)} blow-ups; snc complete: {graph.snc_complete}"]
    for row in doc["divisors"]:
        ords = ",".join(str(o) for o in row["ord_factors"])
        lines.append(
            f"  E{row['divisor']}: k={row['k']} ord_m={row['ord_m']} ord_a=({ords}) "
            f"a_E={doc['discrepancies']['E' + str(row['divisor'])]} "
            f"parents={row['parents']}"
        )
    for c in doc["curves"]:
        meets = ", ".join(f"{m['divisor']}@{m['at']}" for m in c["meets"])
        lines.append(f"  {c['id']}: {c['poly']} d={c['d']} meets {meets}")
    if doc["F"]:
        lines.append(f"  F = {doc['F']}")
    _emit(doc, args.format, lines)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(graph) + "\n")
    return EX_OK


def _cmd_certificate(args) -> int:
    cert = compute_constants(_load_system(args))
    doc = cert.to_json_dict()
    _emit(doc, args.format, [
        f"c = {doc['c']}",
        f"s = {doc['s']}",
        f"t = {doc['t']}",
        f"t' = {doc['t_prime']}",
        f"l = {doc['level']}",
        f"F = {doc['F']}",
        f"centre: {doc['centre']}",
        f"D: {', '.join(doc['D']) if doc['D'] else '(empty)'}",
    ])
    return EX_OK


def _cmd_verify(args) -> int:
    report = verify_semicontinuity(_load_system(args), samples=args.samples, seed=args.seed)
    doc = report.to_json_dict()
    ok = sum(1 for s in report.samples if not s.skipped and s.passed())
    skipped = sum(1 for s in report.samples if s.skipped)
    lines = [
        f"path: {report.path}  level: {report.level}  mld = {report.baseline.value_str()}",
        f"samples: {ok}/{len(report.samples)} at the original mld"
        + (f" ({skipped} degenerate, skipped)" if skipped else ""),
        f"verdict: {'pass' if report.verdict else 'COUNTEREXAMPLE FOUND'}",
    ]
    for note in report.notes:
        lines.append(f"note: {note}")
    for bad in report.counterexamples():
        lines.append(f"counterexample at sample {bad.index} ({bad.strategy}):")
        lines.append(f"  system: {bad.system.describe()}")
        lines.append(f"  mld(b) = {bad.to_json_dict().get('mld')}")
    _emit(doc, args.format, lines)
    return EX_OK if report.verdict else EX_COUNTEREXAMPLE


def _cmd_min_level(args) -> int:
    result = empirical_min_level(_load_system(args), budget=args.budget, seed=args.seed)
    doc = result.to_json_dict()
    lines = [
        f"proven level: {result.proven_level}",
        f"least sampled-clean level: {result.least_level} (heuristic evidence, not a proof)",
    ]
    if result.counterexample is not None:
        c = result.counterexample
        lines.append(
            f"counterexample at level {result.least_level - 1}: sample {c.index} "
            f"({c.strategy}) gives mld {c.to_json_dict().get('mld')}"
        )
    _emit(doc, args.format, lines)
    return EX_OK


_COMMANDS = {
    "mld": _cmd_mld,
    "classify": _cmd_classify,
    "resolve": _cmd_resolve,
    "certificate": _cmd_certificate,
    "verify": _cmd_verify,
    "min-level": _cmd_min_level,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"mldlab: usage error: {e}", file=sys.stderr)
        return EX_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"mldlab: usage error: {e}", file=sys.stderr)
        return EX_USAGE
    except _INPUT_ERRORS as e:
        print(f"mldlab: input error: {e}", file=sys.stderr)
        return EX_INPUT
    except (OSError, json.JSONDecodeError, ValueError, ZeroDivisionError, KeyError) as e:
        print(f"mldlab: input error: {e}", file=sys.stderr)
        return EX_INPUT
    except BudgetExceeded as e:
        print(f"mldlab: {e}", file=sys.stderr)
        return EX_OPERATIONAL
    except MldlabError as e:
        print(f"mldlab: error: {e}", file=sys.stderr)
        return EX_OPERATIONAL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command-line front end.

Human-readable output goes to stdout; ``--json PATH`` writes machine records
whose keys are the Verdict field names. Timings appear only in the human
report so that the JSON is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import Verdict, dim_V, tutte_invariants, verify_quadrangle_relations, whpp_verdict
from .catalog import ENTRIES, NAMES, catalog, list_catalog
from .errors import ChecksumMismatch, MatroidError
from .formats import load_matroid, parse_weights
from .quadrangles import (
    dump_quadrangles,
    enumerate_degenerate_quadrangles,
    format_quadrangle,
    relation_matrix,
    signed_tutte_relations,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CHECKSUM = 2

_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}

VERDICT_SCHEMA = {
    "type": "object",
    "properties": {
        "n": _INT,
        "r": _INT,
        "basis_count": _INT,
        "z": _INT,
        "dim_V": _INT,
        "dim_W": _INT,
        "inner_free_rank": _INT,
        "tutte_free_rank": _INT,
        "tutte_torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "reduction_applies": _BOOL,
        "is_binary": _BOOL,
        "is_regular": _BOOL,
        "is_projective_geometry": _BOOL,
        "whpp_status": {"enum": ["NOT_WHPP", "WHPP", "WHPP_IFF_HPP", "UNDETERMINED"]},
        "justification": {"type": "string"},
    },
    "required": list(Verdict.__dataclass_fields__),
    "additionalProperties": False,
}

ANALYZE_SCHEMA = {
    "type": "object",
    "properties": {
        "input_descriptor": {"type": "string"},
        "quadrangle_count": _INT,
        "verdict": VERDICT_SCHEMA,
    },
    "required": ["input_descriptor", "quadrangle_count", "verdict"],
    "additionalProperties": False,
}

TABLE1_ROW_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "n": _INT,
        "n_expected": _INT,
        "dim_V": {"type": ["integer", "null"]},
        "dim_V_expected": _INT,
        "basis_count": {"type": ["integer", "null"]},
        "basis_count_expected": _INT,
        "match": _BOOL,
        "error": {"type": ["string", "null"]},
    },
    "required": [
        "name", "n", "n_expected", "dim_V", "dim_V_expected", "basis_count",
        "basis_count_expected", "match", "error",
    ],
    "additionalProperties": False,
}

TABLE1_SCHEMA = {"type": "array", "items": TABLE1_ROW_SCHEMA}


@dataclass
class AnalysisReport:
    verdict: Verdict
    quadrangle_count: int
    input_descriptor: str
    timings: dict[str, float] = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "input_descriptor": self.input_descriptor,
            "quadrangle_count": self.quadrangle_count,
            "verdict": self.verdict.to_record(),
        }


def run_analyze(descriptor: str) -> tuple[AnalysisReport, object, list]:
    timings = {}
    t0 = time.perf_counter()
    M = load_matroid(descriptor)
    t1 = time.perf_counter()
    quads = enumerate_degenerate_quadrangles(M)
    t2 = time.perf_counter()
    verdict = whpp_verdict(M, quads)
    t3 = time.perf_counter()
    timings["build"] = t1 - t0
    timings["quadrangles"] = t2 - t1
    timings["verdict"] = t3 - t2
    return AnalysisReport(verdict, len(quads), descriptor, timings), M, quads


def run_table1() -> list[dict]:
    rows = []
    for name in NAMES:
        entry = ENTRIES[name]
        row = {
            "name": name,
            "n": entry.expected_n,
            "n_expected": entry.expected_n,
            "dim_V": None,
            "dim_V_expected": entry.expected_dimV,
            "basis_count": None,
            "basis_count_expected": entry.expected_B_count,
            "match": False,
            "error": None,
        }
        try:
            M = catalog(name)
        except ChecksumMismatch as err:
            row["error"] = str(err)
            rows.append(row)
            continue
        row["n"] = M.n
        row["basis_count"] = M.basis_count
        row["dim_V"] = dim_V(M)
        row["match"] = (M.n, row["dim_V"], M.basis_count) == (
            entry.expected_n, entry.expected_dimV, entry.expected_B_count
        )
        rows.append(row)
    return rows


def _write_json(path: str | None, record) -> None:
    if path:
        Path(path).write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")


def _print_verdict(report: AnalysisReport, show_timings: bool) -> None:
    v = report.verdict
    torsion = ", ".join(map(str, v.tutte_torsion))
    print(f"input:              {report.input_descriptor}")
    print(f"n, r, |B|:          {v.n}, {v.r}, {v.basis_count}")
    print(f"components z:       {v.z}")
    print(f"quadrangles:        {report.quadrangle_count}")
    print(f"dim V, dim W:       {v.dim_V}, {v.dim_W}")
    print(f"inner free rank:    {v.inner_free_rank}")
    print(f"Tutte group:        free rank {v.tutte_free_rank}, torsion [{torsion}]")
    print(f"binary / regular:   {v.is_binary} / {v.is_regular}")
    print(f"projective geom.:   {v.is_projective_geometry}")
    print(f"status:             {v.whpp_status}")
    print(f"because:            {v.justification}")
    if show_timings:
        for stage, secs in report.timings.items():
            print(f"time {stage + ':':14s}{secs:.3f}s")


def cmd_analyze(args) -> int:
    report, M, quads = run_analyze(args.spec)
    _print_verdict(report, args.timings)
    _write_json(args.json, report.to_record())
    if args.dump_matrix:
        Path(args.dump_matrix).write_text(relation_matrix(M, quads).matrix.dump())
    if args.dump_quadrangles:
        Path(args.dump_quadrangles).write_text(dump_quadrangles(M, quads))
    return EXIT_OK


def cmd_table1(args) -> int:
    t0 = time.perf_counter()
    rows = run_table1()
    header = f"{'name':16s}{'n':>4s}{'dimV':>6s}{'exp':>6s}{'|B|':>6s}{'exp':>6s}  match"
    print(header)
    for row in rows:
        dv = "-" if row["dim_V"] is None else str(row["dim_V"])
        nb = "-" if row["basis_count"] is None else str(row["basis_count"])
        print(
            f"{row['name']:16s}{row['n']:>4d}{dv:>6s}{row['dim_V_expected']:>6d}"
            f"{nb:>6s}{row['basis_count_expected']:>6d}  {'yes' if row['match'] else 'NO'}"
        )
        if row["error"]:
            print(f"  error: {row['error']}")
    good = sum(r["match"] for r in rows)
    print(f"{good}/{len(rows)} rows match")
    if args.timings:
        print(f"time: {time.perf_counter() - t0:.2f}s")
    _write_json(args.json, rows)
    if good == len(rows):
        return EXIT_OK
    return EXIT_CHECKSUM if any(r["error"] for r in rows) else EXIT_INVALID


def cmd_catalog(args) -> int:
    records = []
    for entry in list_catalog():
        print(f"{entry.name:16s}{entry.kind:12s}n={entry.expected_n:<3d}|B|={entry.expected_B_count:<4d}"
              f"{entry.note}".rstrip())
        records.append({
            "name": entry.name, "kind": entry.kind, "n": entry.expected_n,
            "basis_count": entry.expected_B_count, "note": entry.note,
        })
    _write_json(args.json, records)
    return EXIT_OK


def cmd_quadrangles(args) -> int:
    M = load_matroid(args.spec)
    quads = enumerate_degenerate_quadrangles(M)
    for q in quads:
        print(format_quadrangle(M, q))
    print(f"# {len(quads)} degenerate quadrangles")
    if args.dump_matrix:
        Path(args.dump_matrix).write_text(relation_matrix(M, quads).matrix.dump())
    _write_json(args.json, {"input_descriptor": args.spec, "quadrangle_count": len(quads)})
    return EXIT_OK


def cmd_tutte(args) -> int:
    M = load_matroid(args.spec)
    quads = enumerate_degenerate_quadrangles(M)
    inv = tutte_invariants(M, quads)
    print(f"Tutte group: {inv}")
    print(f"free rank {inv.free_rank}, torsion [{', '.join(map(str, inv.torsion))}]")
    if args.dump_matrix:
        Path(args.dump_matrix).write_text(signed_tutte_relations(M, quads).matrix.dump())
    _write_json(args.json, {
        "input_descriptor": args.spec,
        "tutte_free_rank": inv.free_rank,
        "tutte_torsion": list(inv.torsion),
    })
    return EXIT_OK


def cmd_verify_weights(args) -> int:
    M = load_matroid(args.spec)
    try:
        text = Path(args.weights).read_text()
    except OSError as err:
        raise MatroidError(f"{args.weights}: cannot read: {err.strerror}") from None
    w = parse_weights(text, M, args.weights)
    check = verify_quadrangle_relations(M, w)
    if check.ok:
        print("ok: all degenerate quadrangle relations hold")
    else:
        print(f"FAILED at {format_quadrangle(M, check.witness)}")
    _write_json(args.json, {
        "input_descriptor": args.spec,
        "ok": check.ok,
        "witness": None if check.ok else format_quadrangle(M, check.witness),
    })
    return EXIT_OK if check.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whpp",
        description="Degenerate quadrangles, dim V / dim W, Tutte group invariants and WHPP verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", metavar="PATH", help="write machine-readable records here")
        p.add_argument("--timings", action="store_true", help="print per-stage wall-clock times")
        return p

    spec_help = ("catalog:NAME, uniform:r,n, pg:m,q, ag:m,q, graph:PATH, gfmatrix:PATH, "
                 "qmatrix:PATH or bases:PATH")

    p = common(sub.add_parser("analyze", help="full report for one matroid"))
    p.add_argument("spec", help=spec_help)
    p.add_argument("--dump-matrix", metavar="PATH", help="write the plain relation matrix")
    p.add_argument("--dump-quadrangles", metavar="PATH", help="write the quadrangle list")
    p.set_defaults(func=cmd_analyze)

    p = common(sub.add_parser("table1", help="recompute the reference table"))
    p.set_defaults(func=cmd_table1)

    p = common(sub.add_parser("catalog", help="catalog operations"))
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    p = common(sub.add_parser("quadrangles", help="list degenerate quadrangles"))
    p.add_argument("spec", help=spec_help)
    p.add_argument("--dump-matrix", metavar="PATH", help="write the plain relation matrix")
    p.set_defaults(func=cmd_quadrangles)

    p = common(sub.add_parser("tutte", help="abelian invariants of the Tutte group"))
    p.add_argument("spec", help=spec_help)
    p.add_argument("--dump-matrix", metavar="PATH", help="write the signed relation matrix")
    p.set_defaults(func=cmd_tutte)

    p = common(sub.add_parser("verify-weights", help="check a weighting against all quadrangles"))
    p.add_argument("spec", help=spec_help)
    p.add_argument("weights", help="weights file, lines 'e1 ... er : a/b'")
    p.set_defaults(func=cmd_verify_weights)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ChecksumMismatch as err:
        print(f"checksum mismatch: {err}", file=sys.stderr)
        return EXIT_CHECKSUM
    except MatroidError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: compute, scan, family, gen.

Exit codes are a total contract: 0 success, 1 claim or formula violations
found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .errors import SplitdomError
from .families import (
    FamilyKind,
    FamilySpec,
    enumerate_two_trees,
    expected_values,
    generate,
)
from .graph import Graph, is_connected, members, parse_graph6, read_edge_list, to_graph6
from .lab import (
    ALL_CLAIMS,
    ClaimId,
    evaluate_claims,
    observe_relations,
    scan_corpus,
    verify_family_formula,
)
from .solvers import ALL_PARAMETERS, ParameterId, compute_table

JOBS_ENV = "SPLITDOM_JOBS"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _parse_params(spec: str) -> list[ParameterId]:
    if spec == "all":
        return list(ALL_PARAMETERS)
    out = []
    for token in spec.split(","):
        token = token.strip()
        try:
            out.append(ParameterId(token))
        except ValueError:
            raise SplitdomError(
                f"unknown parameter {token!r}; valid: "
                + ",".join(p.key for p in ALL_PARAMETERS)
            )
    return out


def _parse_claims(spec: str) -> set[ClaimId]:
    if spec == "all":
        return set(ALL_CLAIMS)
    out = set()
    for token in spec.split(","):
        token = token.strip()
        try:
            out.add(ClaimId(token))
        except ValueError:
            raise SplitdomError(
                f"unknown claim {token!r}; valid: "
                + ",".join(c.value for c in sorted(ALL_CLAIMS, key=lambda c: c.value))
            )
    return out


def _parse_range(spec: str) -> tuple[int, int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(spec)
    if hi < lo:
        raise SplitdomError(f"empty range {spec!r}")
    return lo, hi


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _load_graphs(path: str, fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "edges":
        return [read_edge_list(text, id=os.path.basename(path) if path != "-" else "stdin")]
    graphs = []
    for k, line in enumerate(ln for ln in text.splitlines() if ln.strip()):
        g = parse_graph6(line)
        graphs.append(g.relabel(f"g{k}"))
    return graphs


def _record(g: Graph, params: list[ParameterId], witnesses: bool) -> dict:
    if g.n < 2:
        return {"id": g.id, "graph6": to_graph6(g), "status": "skipped-too-small",
                "params": {}, "reasons": {}}
    if not is_connected(g):
        return {"id": g.id, "graph6": to_graph6(g), "status": "skipped-disconnected",
                "params": {}, "reasons": {}}
    table = compute_table(g)
    values: dict[str, int | None] = {}
    reasons: dict[str, str] = {}
    wit: dict[str, list[int]] = {}
    for pid in params:
        res = table[pid]
        values[pid.key] = res.value
        if not res.defined:
            reasons[pid.key] = "no-qualifying-set"
        elif witnesses:
            wit[pid.key] = list(members(res.witness))
    record = {"id": g.id, "graph6": to_graph6(g), "status": "ok",
              "params": values, "reasons": reasons}
    if witnesses:
        record["witnesses"] = wit
    return record


def _emit_json(records: list[dict], out) -> None:
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def _emit_csv(records: list[dict], params: list[ParameterId], witnesses: bool, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    header = ["id", "graph6", "status"] + [p.key for p in params]
    if witnesses:
        header += [f"{p.key}.witness" for p in params]
    writer.writerow(header)
    for rec in records:
        row = [rec["id"], rec["graph6"], rec["status"]]
        row += ["" if rec["params"].get(p.key) is None else rec["params"][p.key]
                for p in params]
        if witnesses:
            row += [" ".join(map(str, rec.get("witnesses", {}).get(p.key, [])))
                    for p in params]
        writer.writerow(row)


def cmd_compute(args) -> int:
    params = _parse_params(args.params)
    graphs = _load_graphs(args.graph, args.format)
    records = [_record(g, params, args.witnesses) for g in graphs]
    if args.out == "json":
        _emit_json(records, sys.stdout)
    else:
        _emit_csv(records, params, args.witnesses, sys.stdout)
    return 0


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def cmd_scan(args) -> int:
    claims = _parse_claims(args.claims)
    lines = [ln for ln in _read_text(args.corpus).splitlines() if ln.strip()]
    report = scan_corpus(lines, claims, workers=args.jobs)
    sys.stdout.write(report.to_json())
    if report.malformed_lines or report.disconnected_skipped:
        print(
            f"warning: skipped {report.malformed_lines} malformed and "
            f"{report.disconnected_skipped} disconnected/too-small lines",
            file=sys.stderr,
        )
    if args.emit_violations:
        with open(args.emit_violations, "w", encoding="ascii") as fh:
            for cert in report.certificates:
                fh.write(cert.to_json_line() + "\n")
    if args.relations:
        table = observe_relations(lines)
        with open(args.relations, "w", encoding="ascii") as fh:
            json.dump(table, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0 if report.all_pass else 1


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def _family_instances(args) -> list[FamilySpec]:
    kind = FamilyKind(args.kind)
    lo, hi = _parse_range(args.n)
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        if not args.m:
            raise SplitdomError("--m is required for bipartite families")
        mlo, mhi = _parse_range(args.m)
        specs = [
            FamilySpec(kind, n, m)
            for m in range(mlo, mhi + 1)
            for n in range(lo, hi + 1)
            if m <= n
        ]
    else:
        specs = [FamilySpec(kind, n, seed=args.seed) for n in range(lo, hi + 1)]
    for spec in specs:
        spec.validate()
    if not specs:
        raise SplitdomError("size ranges produced no instances")
    return specs


def _verify_two_trees(args) -> int:
    lo, hi = _parse_range(args.n)
    beta = ParameterId.beta_s
    certificates = []
    for n in range(lo, hi + 1):
        count = 0
        bad = 0
        for g in enumerate_two_trees(n):
            count += 1
            outcomes = evaluate_claims(g, {ClaimId.P1})
            certs = outcomes[ClaimId.P1].certificates
            if certs:
                bad += 1
                certificates.extend(certs)
        verdict = "pass" if bad == 0 else "FAIL"
        print(f"2tree n={n}: {count} labeled graphs, {beta.key} undefined on all: {verdict}")
    if args.emit_violations and certificates:
        with open(args.emit_violations, "w", encoding="ascii") as fh:
            for cert in certificates:
                fh.write(cert.to_json_line() + "\n")
    return 1 if certificates else 0


def cmd_family(args) -> int:
    kind = FamilyKind(args.kind)
    if kind is FamilyKind.TWO_TREE:
        if args.verify:
            return _verify_two_trees(args)
        raise SplitdomError("2tree family has no formula table; use --verify or gen")
    specs = _family_instances(args)
    certificates = []
    mismatch = False
    for spec in specs:
        g = generate(spec)
        table = compute_table(g)
        for ev in sorted(expected_values(spec), key=lambda e: e.pid.key):
            computed = table.value(ev.pid)
            if not args.verify:
                print(f"{g.id}\t{ev.pid.key}\tcomputed={computed}")
                continue
            if not ev.in_range:
                verdict = "n/a"
            elif computed == ev.expected:
                verdict = "pass"
            else:
                verdict = "FAIL"
                mismatch = True
                cert = verify_family_formula(spec, ev.pid)
                if cert is not None:
                    certificates.append(cert)
            print(
                f"{g.id}\t{ev.pid.key}\tformula[{ev.formula}]={ev.expected}\t"
                f"computed={computed}\tvalidity[{ev.validity}]\t{verdict}"
            )
    if args.emit_violations and certificates:
        with open(args.emit_violations, "w", encoding="ascii") as fh:
            for cert in certificates:
                fh.write(cert.to_json_line() + "\n")
    return 1 if mismatch else 0


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = FamilyKind(args.kind)
    lines: list[str] = []
    if kind is FamilyKind.TWO_TREE:
        lo, hi = _parse_range(args.n)
        for n in range(lo, hi + 1):
            lines.extend(to_graph6(g) for g in enumerate_two_trees(n))
    else:
        for spec in _family_instances(args):
            lines.append(to_graph6(generate(spec)))
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitdom",
        description="Exact split/nonsplit domination, independence, and "
                    "irredundance parameters of small graphs, with corpus-scale "
                    "claim verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute parameters for input graphs")
    p.add_argument("--graph", required=True, help="input file, or - for stdin")
    p.add_argument("--format", choices=["g6", "edges"], default="g6")
    p.add_argument("--params", default="all",
                   help="comma-separated parameter keys, or 'all'")
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--out", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("scan", help="verify claims over a graph6 corpus")
    p.add_argument("--corpus", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--claims", default="all")
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get(JOBS_ENV, "1")))
    p.add_argument("--emit-violations", metavar="FILE",
                   help="write certificates as JSON lines")
    p.add_argument("--relations", metavar="FILE",
                   help="write the pairwise parameter relation table (exploratory)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="instantiate families and verify formulas")
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in FamilyKind])
    p.add_argument("--n", required=True, help="size or range A..B")
    p.add_argument("--m", help="bipartite second size or range A..B")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--emit-violations", metavar="FILE")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("gen", help="write family instances as graph6 lines")
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in FamilyKind])
    p.add_argument("--n", required=True, help="size or range A..B")
    p.add_argument("--m", help="bipartite second size or range A..B")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="output file, or - for stdout")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SplitdomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

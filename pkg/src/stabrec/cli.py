"""Command-line front end: report, sweep, verify, export.

Exit codes: 0 success, 1 usage or guard error, 2 method disagreement.
JSON output is versioned ("schema": 1); every numeric field is an exact
integer.  Sweep rows run concurrently (RECINFO_THREADS caps the pool) with
deterministic output ordering.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from . import entropy, models, pauli, recinfo, regions, verify

SCHEMA_VERSION = 1

CLOSED_FORMS = {
    "toric2": lambda R: 2,
    "toric3": lambda R: 1,
    "xcube": lambda R: 6 * (R + 1),
    "haah": lambda R: 12 * R - 2,
    "cluster1": lambda R: 0,
    "cluster2": lambda R: 4,
    "cluster3": lambda R: None,
}


@dataclass
class RunRequest:
    command: str
    model: str = ""
    L: int = 0
    bc: str = "pbc"
    region: str = ""
    methods: str = "all"
    window: int | None = None
    fmt: str = "json"

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(d: dict) -> "RunRequest":
        return RunRequest(**d)


def parse_region(code, desc: str) -> regions.Region:
    """Compact region strings: cube:R, cuboid:R1xR2xR3, square:R, segment:R,
    smooth:R, solidtorus:R1xR2xR3:AXIS:LEN."""
    parts = desc.split(":")
    kind = parts[0]
    if kind in ("cube", "square", "segment"):
        return regions.cuboid_region(code, extents=int(parts[1]))
    if kind == "cuboid":
        ext = tuple(int(x) for x in parts[1].split("x"))
        return regions.cuboid_region(code, extents=ext)
    if kind == "smooth":
        return regions.smooth_cluster_region(code, int(parts[1]))
    if kind == "solidtorus":
        ext = tuple(int(x) for x in parts[1].split("x"))
        axis = {"x": 0, "y": 1, "z": 2}[parts[2]] if len(parts) > 2 else 2
        tlen = int(parts[3]) if len(parts) > 3 else None
        return regions.solid_torus_region(code, ext, axis=axis, tunnel_len=tlen)
    raise ValueError(f"unknown region descriptor {desc!r}")


def _report_payload(req: RunRequest, include_generators: bool) -> dict:
    code = models.build(models.ModelSpec(req.model, req.L, req.bc))
    region = parse_region(code, req.region)
    erep = entropy.entanglement_entropy(code, region)
    payload = {
        "schema": SCHEMA_VERSION,
        "request": req.to_dict(),
        "entropy": erep.to_dict(),
    }
    methods = req.methods.split(",") if req.methods != "all" else ["def", "bound", "nlss"]
    rrep = recinfo.compute_report(code, region, window=req.window, include_generators=include_generators)
    ri = rrep.to_dict()
    if "def" not in methods:
        ri.pop("mu_definition")
    if "bound" not in methods:
        ri.pop("mu_bound")
    if "nlss" not in methods:
        ri.pop("mu_nlss")
    payload["recinfo"] = ri
    if include_generators:
        gens = []
        for g in rrep.nlss_generators:
            rel = recinfo.gauss_law_report(g, code, region)
            gens.append(
                {
                    "side": g.side,
                    "pauli_type": g.pauli_type,
                    "operator": pauli.render(g.operator, code),
                    "generating_set": [code.labels[i] for i in g.generating_set],
                    "gauss_law": None
                    if rel.trivial
                    else {
                        "bulk": [code.labels[i] for i in rel.bulk_indices],
                        "boundary_operator": pauli.render(rel.boundary_operator, code),
                    },
                }
            )
        payload["generators"] = gens
    payload["agreement"] = rrep.agreement
    return payload


def cmd_report(args) -> int:
    req = RunRequest(
        command="report",
        model=args.model,
        L=args.L,
        bc=args.bc,
        region=args.region,
        methods=args.methods,
        window=args.window,
        fmt=args.format,
    )
    try:
        payload = _report_payload(req, args.generators)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for section in ("entropy", "recinfo"):
            for k, v in payload[section].items():
                print(f"{k}\t{v}")
    return 0 if payload["agreement"] else 2


def _sweep_row(model: str, R: int, L: int | None):
    L = L or 2 * R + 4
    code = models.build(models.ModelSpec(model, L))
    ext = (R,) * code.dim
    region = regions.cuboid_region(code, extents=ext)
    rep = recinfo.compute_report(code, region)
    form = CLOSED_FORMS.get(model, lambda R: None)(R)
    match = None if form is None else (rep.mu_definition == form == rep.mu_nlss)
    return {
        "model": model,
        "L": L,
        "R": R,
        "s_a": rep.s_a,
        "min_cut": rep.min_cut,
        "mu_definition": rep.mu_definition,
        "mu_bound": rep.mu_bound,
        "mu_nlss": rep.mu_nlss,
        "closed_form": form,
        "match": match,
    }


def cmd_sweep(args) -> int:
    model_list = args.models.split(",")
    lo, hi = (int(x) for x in args.R.split("..")) if ".." in args.R else (int(args.R),) * 2
    jobs = [(m, R) for m in model_list for R in range(lo, hi + 1)]
    workers = int(os.environ.get("RECINFO_THREADS", "0")) or min(8, len(jobs))
    try:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda j: _sweep_row(j[0], j[1], args.L), jobs))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rows.sort(key=lambda r: (r["model"], r["R"]))
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, "rows": rows}, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
        print(buf.getvalue(), end="")
    else:
        cols = list(rows[0].keys())
        print(" | ".join(cols))
        for r in rows:
            print(" | ".join(str(r[c]) for c in cols))
    bad = any(r["match"] is False for r in rows)
    disagree = any(r["mu_definition"] != r["mu_nlss"] for r in rows)
    return 2 if (bad or disagree) else 0


def cmd_verify(args) -> int:
    results = verify.run_rows(include_conjectures=args.include_conjectures)
    blocking_fail = False
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        tag = " (conjecture)" if res.conjecture else ""
        print(f"[{status}] {res.name}{tag}  ({res.seconds:.1f}s)")
        if res.error:
            print(f"    error: {res.error}")
        for c in res.checks:
            if not c.ok or args.verbose:
                mark = "ok" if c.ok else "MISMATCH"
                print(f"    {c.label}: got {c.got}, want {c.want} [{mark}]")
        if not res.ok and not res.conjecture:
            blocking_fail = True
    return 1 if blocking_fail else 0


def cmd_export(args) -> int:
    try:
        code = models.build(models.ModelSpec(args.model, args.L, args.bc))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(models.export_table(code))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stabrec",
        description="Exact stabilizer-code workbench: entropy and recoverable information",
    )
    sub = p.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("report", help="entropy + recoverable-information report")
    rp.add_argument("--model", required=True, choices=models.MODELS)
    rp.add_argument("--L", type=int, required=True)
    rp.add_argument("--bc", default="pbc", choices=("pbc", "obc"))
    rp.add_argument("--region", required=True)
    rp.add_argument("--methods", default="all")
    rp.add_argument("--window", type=int, default=None)
    rp.add_argument("--format", default="json", choices=("json", "table"))
    rp.add_argument("--generators", action="store_true", help="list surface stabilizers and Gauss laws")
    rp.set_defaults(fn=cmd_report)

    sp = sub.add_parser("sweep", help="tabulate mu over a range of region sizes")
    sp.add_argument("--models", required=True)
    sp.add_argument("--R", required=True, help="single size or lo..hi")
    sp.add_argument("--L", type=int, default=None)
    sp.add_argument("--format", default="table", choices=("table", "csv", "json"))
    sp.set_defaults(fn=cmd_sweep)

    vp = sub.add_parser("verify", help="reproduce all closed-form results")
    vp.add_argument("--include-conjectures", action="store_true")
    vp.add_argument("--verbose", action="store_true")
    vp.set_defaults(fn=cmd_verify)

    ep = sub.add_parser("export", help="plain-text stabilizer table")
    ep.add_argument("--model", required=True, choices=models.MODELS)
    ep.add_argument("--L", type=int, required=True)
    ep.add_argument("--bc", default="pbc", choices=("pbc", "obc"))
    ep.set_defaults(fn=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

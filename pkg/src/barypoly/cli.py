"""Command-line front door.

Commands: validate, analyze, sweep, examples, oracle-check.  All output is
machine-readable (JSON, or CSV for sweeps) and byte-deterministic for given
inputs and flags.  Exit codes: 0 ok, 1 input/validation error, 2 point
outside the polytope, 3 internal invariant failure (oracle disagreement).
"""

import argparse
import itertools
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import coordinates as co
from . import oracle as orc
from . import probes
from .errors import BarypolyError, ParseError
from .fixtures import fixture_document, fixture_names
from .linalg import fr
from .polytope import Location, Polytope, load_polytope, locate
from .report import AnalysisReport, LambdaVertexEntry, format_float
from .simplex import convex_membership

_SEED_ENV = "BARYPOLY_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("ParseError", message)
        raise SystemExit(1)


def _emit_error(code, detail):
    print(json.dumps({"error": code, "detail": str(detail)}))


def _parse_rationals(text):
    toks = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        return tuple(fr(t) for t in toks)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational list {text!r}: {exc}") from exc


def _analysis_report(p: Polytope, point) -> tuple:
    """(report, location) after the full pipeline at an inside point."""
    start = time.perf_counter()
    loc = locate(p, point)
    if loc.tag == Location.OUTSIDE:
        return None, loc
    tau = co.feasible_tau(p, point)
    nb = co.nullbasis(p)
    lam = co.lambda_vertices(p, point)
    gam = co.gamma_polytope(p, point, tau, nb, lam)
    entries = []
    for v, supp in zip(lam.vertices, lam.vertex_supports):
        support = tuple(sorted(supp))
        zeros = tuple(j for j in range(1, p.n + 1) if j not in supp)
        entries.append(LambdaVertexEntry(lam=v.lam, support=support, zeros=zeros))
    elapsed = time.perf_counter() - start
    rep = AnalysisReport(
        polytope_dim=p.d,
        polytope_vertices=p.vertices,
        point=tuple(point),
        location=loc.tag.value,
        tau=tau.lam,
        nbasis=gam.nbasis,
        lambda_vertices=tuple(entries),
        gamma_vertices=gam.vertices,
        dim=lam.dim,
        theorem_count_match=lam.theorem_count_match,
        timing=elapsed,
    )
    return rep, loc


def run_validate(path) -> int:
    p = load_polytope(path)
    print(json.dumps({
        "valid": True,
        "n": p.n,
        "dim": p.d,
        "kernel_dim": p.kernel_dim(),
    }, indent=2))
    return 0


def run_analyze(path, point_text) -> int:
    p = load_polytope(path)
    point = _parse_rationals(point_text)
    if len(point) != p.d:
        raise ParseError(f"point must have {p.d} coordinates")
    rep, loc = _analysis_report(p, point)
    if rep is None:
        a, b = loc.separator
        print(json.dumps({
            "error": "Outside",
            "detail": "point is outside the polytope",
            "certificate": {"normal": [str(x) for x in a], "offset": str(b)},
        }, indent=2))
        return 2
    print(rep.to_json())
    return 0


def _grid_points(p: Polytope, k: int):
    los = [min(v[l] for v in p.vertices) for l in range(p.d)]
    his = [max(v[l] for v in p.vertices) for l in range(p.d)]
    axes = []
    for lo, hi in zip(los, his):
        span = hi - lo
        axes.append([lo + span * Fraction(i + 1, k + 1) for i in range(k)])
    return [tuple(c) for c in itertools.product(*axes)]


def _load_points(path, d):
    try:
        with open(path) as fh:
            doc = json.load(fh, parse_float=Fraction)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if isinstance(doc, dict):
        doc = doc.get("points")
    if not isinstance(doc, list):
        raise ParseError("points file must hold a list of points")
    pts = []
    for i, row in enumerate(doc):
        if not isinstance(row, list) or len(row) != d:
            raise ParseError(f"point {i + 1} must list {d} coordinates")
        pts.append(tuple(fr(x) for x in row))
    return pts


def _census_cells(p, point):
    lam = co.lambda_vertices(p, point)
    return [str(len(lam.vertices)), str(lam.dim),
            "true" if lam.theorem_count_match else "false"]


def _sweep_row(p, mode, point, h, t0, steps):
    width = 3 if mode == "census" else 3 + steps
    cells = []
    error = ""
    try:
        cells += _census_cells(p, point)
        if mode == "continuity":
            rep = probes.continuity_probe(p, point, h, t0=t0, steps=steps)
            cells += [format_float(s.distance) for s in rep.steps]
        elif mode == "semidiff":
            zero_set = _pick_selection(p, point)
            rep = probes.semidiff_probe(p, point, zero_set, h, t0=t0, steps=steps)
            cells += [format_float(s.distance) for s in rep.steps]
    except BarypolyError as exc:
        error = exc.code
    cells += [""] * (width - len(cells))
    return ",".join([str(x) for x in point] + cells + [error])


def _pick_selection(p, point):
    """First zero pattern (lexicographic) whose coordinates are feasible at
    the point, preferring strictly positive complements."""
    first_feasible = None
    k = p.kernel_dim()
    for combo in itertools.combinations(range(1, p.n + 1), k):
        try:
            sc = co.simplicial_coords(p, point, combo)
        except BarypolyError:
            continue
        if not sc.feasible:
            continue
        if first_feasible is None:
            first_feasible = combo
        strict = all(sc.sigma[j - 1] > 0
                     for j in range(1, p.n + 1) if j not in set(combo))
        if strict:
            return frozenset(combo)
    if first_feasible is None:
        raise ParseError("no feasible selection pattern at this point")
    return frozenset(first_feasible)


def run_sweep(path, mode, grid=None, points_file=None, t0="1/8", steps=8,
              h=None, workers=1) -> int:
    p = load_polytope(path)
    if (grid is None) == (points_file is None):
        raise ParseError("exactly one of --grid or --points is required")
    pts = _grid_points(p, grid) if grid is not None else _load_points(points_file, p.d)
    t0_frac = fr(t0)
    hvec = None
    if mode in ("continuity", "semidiff"):
        if h is None:
            raise ParseError(f"--h is required for mode {mode}")
        hvec = _parse_rationals(h)
        if len(hvec) != p.d:
            raise ParseError(f"direction must have {p.d} coordinates")
    header = [f"p{i + 1}" for i in range(p.d)]
    header += ["vertex_count", "dim", "theorem_count_match"]
    if mode in ("continuity", "semidiff"):
        header += [f"dist_{k}" for k in range(steps)]
    header.append("error")
    lines = [",".join(header)]
    row = lambda pt: _sweep_row(p, mode, pt, hvec, t0_frac, steps)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            lines.extend(pool.map(row, pts))
    else:
        lines.extend(map(row, pts))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def run_examples(name) -> int:
    if name is None:
        print("\n".join(fixture_names()))
        return 0
    try:
        doc = fixture_document(name)
    except KeyError as exc:
        raise ParseError(exc.args[0]) from exc
    print(json.dumps(doc, indent=2))
    return 0


def run_oracle_check(path, point_text, samples) -> int:
    p = load_polytope(path)
    point = _parse_rationals(point_text)
    if len(point) != p.d:
        raise ParseError(f"point must have {p.d} coordinates")
    loc = locate(p, point)
    if loc.tag == Location.OUTSIDE:
        _emit_error("Infeasible", "point is outside the polytope")
        return 2
    seed = int(os.environ.get(_SEED_ENV, "0"))
    lam = co.lambda_vertices(p, point)
    ora = orc.dd_vertices(p, point)
    agree = orc.vertices_agree(ora.vertices, lam.vertex_arrays())
    samples_ok = True
    for s in orc.random_feasible_sample(p, point, samples, seed):
        feas = (all(x >= 0 for x in s.lam)
                and convex_membership(list(ora.vertices), s.lam) is not None)
        samples_ok = samples_ok and feas
    print(json.dumps({
        "agreement": agree,
        "method": ora.method,
        "vertex_count": len(lam.vertices),
        "lambda_vertices": [[str(x) for x in v] for v in lam.vertex_arrays()],
        "oracle_vertices": [[str(x) for x in v] for v in ora.vertices],
        "samples": samples,
        "samples_feasible": samples_ok,
        "seed": seed,
    }, indent=2))
    return 0 if (agree and samples_ok) else 3


def _build_parser():
    ap = _Parser(prog="barypoly",
                 description="Exact coordinate-polytope analysis for convex polytopes")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a polytope file")
    v.add_argument("file")

    a = sub.add_parser("analyze", help="full analysis at one point")
    a.add_argument("file")
    a.add_argument("--point", required=True, help="comma-separated rationals")

    s = sub.add_parser("sweep", help="batch census or probe runs, CSV on stdout")
    s.add_argument("file")
    s.add_argument("--mode", required=True,
                   choices=["census", "continuity", "semidiff"])
    s.add_argument("--grid", type=int, default=None,
                   help="k interior grid points per axis over the bounding box")
    s.add_argument("--points", default=None, help="JSON file with sample points")
    s.add_argument("--t0", default="1/8", help="initial step (rational)")
    s.add_argument("--steps", type=int, default=8)
    s.add_argument("--h", default=None, help="probe direction, comma-separated")
    s.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("examples", help="print a built-in polytope file")
    e.add_argument("name", nargs="?", default=None)

    o = sub.add_parser("oracle-check",
                       help="cross-check enumeration against the oracle")
    o.add_argument("file")
    o.add_argument("--point", required=True)
    o.add_argument("--samples", type=int, default=10)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if ns.command == "validate":
            return run_validate(ns.file)
        if ns.command == "analyze":
            return run_analyze(ns.file, ns.point)
        if ns.command == "sweep":
            return run_sweep(ns.file, ns.mode, grid=ns.grid,
                             points_file=ns.points, t0=ns.t0, steps=ns.steps,
                             h=ns.h, workers=ns.workers)
        if ns.command == "examples":
            return run_examples(ns.name)
        if ns.command == "oracle-check":
            return run_oracle_check(ns.file, ns.point, ns.samples)
        raise AssertionError(ns.command)
    except BarypolyError as exc:
        _emit_error(exc.code, exc)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

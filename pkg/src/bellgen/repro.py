"""Scripted verification scenarios at desk scale.

Each scenario writes a JSON report plus TSV curves (and a rendered figure
where there is one) under an output directory, prints a human summary, and
returns pass/fail against fixed thresholds.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import local, quantum
from .core import apply_transform, parse_transform, render
from .iterate import (
    caf,
    decompose,
    emabk,
    i3322,
    iterate_2m,
    mabk,
    sliwa,
    sliwa4,
    sliwa4_q,
    sliwa4_variants,
    sliwa5,
    sliwa5_q,
    sliwa5_variants,
)

SCENARIOS = (
    "fig1",
    "sm1_counterexample",
    "dual_use",
    "sliwa_bounds",
    "sliwa_tightness",
    "sliwa4_tables",
    "i3322_tightness",
    "eq13",
)

FIG1_GRID = 199
VIOLATION_EPS = 1e-7


@dataclass
class ScenarioResult:
    name: str
    passed: bool
    summary: str
    report: dict
    files: list


def _write_report(outdir, name, report):
    path = Path(outdir) / f"{name}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report, indent=2, default=str) + "\n")
    return [str(path)]


def _write_tsv(outdir, name, rows, header=("theta", "value")):
    path = Path(outdir) / f"{name}.tsv"
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["\t".join(header)]
    lines += ["\t".join(f"{x:.12g}" if isinstance(x, float) else str(x) for x in row)
              for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return [str(path)]


def _render_curves(outdir, name, curves, hlines=(), title=""):
    """Render sweep curves to a PNG next to the TSV data."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, pts in curves:
        ax.plot([t for t, _ in pts], [v for _, v in pts], label=label, lw=1.2)
    for y in hlines:
        ax.axhline(y, color="gray", lw=0.8, ls="--")
    ax.set_xlabel("state angle (rad)")
    ax.set_ylabel("optimized value")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    path = Path(outdir) / f"{name}.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [str(path)]


def _sweep_one(args):
    name, functional, grid, restarts, seed = args
    return name, quantum.ghz_sweep(functional, grid, restarts=restarts, seed=seed)


def _violation_interval(points, eps=VIOLATION_EPS):
    over = [t for t, v in points if v > 1 + eps]
    return (min(over), max(over)) if over else None


def run_fig1(outdir, seed=0, restarts=8, threads=None):
    """Sweep the three-party families over the GGHZ angle grid."""
    grid = [k * (math.pi / 2) / (FIG1_GRID + 1) for k in range(1, FIG1_GRID + 1)]
    jobs = [
        ("mabk3", mabk(3), grid, restarts, seed),
        ("caf3", caf(3), grid, restarts, seed),
        ("emabk3", emabk(3), grid, restarts, seed),
    ]
    threads = threads or os.cpu_count() or 1
    if threads > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            curves = dict(pool.map(_sweep_one, jobs))
    else:
        curves = dict(map(_sweep_one, jobs))

    step = grid[1] - grid[0]
    report = {"grid_points": FIG1_GRID, "grid_step": step, "seed": seed}
    checks = []
    files = []
    for name, target_max in (("mabk3", 2.0), ("caf3", math.sqrt(2)), ("emabk3", 2.0)):
        pts = curves[name]
        values = [v for _, v in pts]
        peak = max(values)
        argmax = pts[values.index(peak)][0]
        interval = _violation_interval(pts)
        report[name] = {
            "max": peak,
            "argmax_theta": argmax,
            "violation_interval": interval,
            "max_target": target_max,
        }
        checks.append(abs(peak - target_max) <= 1e-4)
        files += _write_tsv(outdir, f"fig1_{name}", pts)

    # the MABK curve must exceed the bound exactly on the grid points inside
    # (pi/12, 5pi/12); the other two on every interior grid point
    lo, hi = math.pi / 12, 5 * math.pi / 12
    inside = {t for t in grid if lo < t < hi}
    over_mabk = {t for t, v in curves["mabk3"] if v > 1 + VIOLATION_EPS}
    sym_diff = over_mabk.symmetric_difference(inside)
    endpoint_err = max(
        abs(min(over_mabk) - lo), abs(max(over_mabk) - hi)) if over_mabk else math.inf
    report["mabk3"]["violating_points"] = len(over_mabk)
    report["mabk3"]["expected_inside"] = len(inside)
    report["mabk3"]["endpoint_error"] = endpoint_err
    checks.append(not sym_diff)
    checks.append(endpoint_err <= step)
    for name in ("caf3", "emabk3"):
        over = sum(1 for _, v in curves[name] if v > 1 + VIOLATION_EPS)
        report[name]["violating_points"] = over
        checks.append(over == FIG1_GRID)

    files += _render_curves(
        outdir, "fig1", [(n, curves[n]) for n in ("mabk3", "caf3", "emabk3")],
        hlines=(1.0,), title="GGHZ-state violation profiles")
    files += _write_report(outdir, "fig1", report)
    passed = all(checks)
    summary = (
        f"maxima {report['mabk3']['max']:.6f}/{report['caf3']['max']:.6f}/"
        f"{report['emabk3']['max']:.6f}; mabk3 violates on "
        f"{report['mabk3']['violating_points']} points "
        f"(expected {report['mabk3']['expected_inside']})"
    )
    return ScenarioResult("fig1", passed, summary, report, files)


def split_counterexample():
    """Four-party functional whose restrictions are all facets while the
    assembled inequality is not: the first catalog entry doubled against its
    own first-setting sign flip (the (+-) piece equals the (++) one)."""
    base = sliwa(1)
    flip = apply_transform(
        base, parse_transform(base.scenario, "flip C1"))
    return iterate_2m(base, base, flip)


def run_sm1_counterexample(outdir, seed=0, **_):
    """Bound-1 but non-facet four-party inequality with all-facet pieces."""
    b4 = split_counterexample()
    bound = local.lhv_bound(b4)
    tight = local.is_tight(b4)
    pieces = decompose(b4)
    piece_reports = {}
    for s, piece in pieces.items():
        pb = local.lhv_bound(piece)
        pt = local.is_tight(piece)
        piece_reports["".join("+" if x > 0 else "-" for x in s)] = {
            "bound": str(pb.lhv_bound),
            "is_facet": pt.is_facet,
            "affine_rank": pt.affine_rank,
            "dimension": pt.dimension,
        }
    report = {
        "functional": render(b4),
        "bound": str(bound.lhv_bound),
        "dimension": tight.dimension,
        "affine_rank": tight.affine_rank,
        "is_facet": tight.is_facet,
        "pieces": piece_reports,
    }
    passed = (
        bound.lhv_bound == 1
        and not tight.is_facet
        and all(p["bound"] == "1" and p["is_facet"] for p in piece_reports.values())
    )
    files = _write_report(outdir, "sm1_counterexample", report)
    summary = (
        f"bound {bound.lhv_bound}, rank {tight.affine_rank}/{tight.dimension - 1},"
        f" facet={tight.is_facet}; all four pieces facets="
        f"{all(p['is_facet'] for p in piece_reports.values())}"
    )
    return ScenarioResult("sm1_counterexample", passed, summary, report, files)


def run_dual_use(outdir, seed=0, **_):
    """Extended-MABK checks for 3..6 parties."""
    report = {}
    passed = True
    for n in range(3, 7):
        rep = quantum.verify_dual_use(n, seed=seed)
        report[n] = {
            "peak_value": rep.peak_value,
            "peak_target": rep.peak_target,
            "grid_violations": f"{rep.grid_violations}/{rep.grid_points}",
            "contraction_max_err": rep.contraction_max_err,
            "ok": rep.ok,
        }
        passed = passed and rep.ok
    files = _write_report(outdir, "dual_use", report)
    summary = "; ".join(
        f"n={n}: peak {r['peak_value']:.6f} ok={r['ok']}" for n, r in report.items()
    )
    return ScenarioResult("dual_use", passed, summary, report, files)


def run_sliwa_bounds(outdir, **_):
    """Every catalog entry has classical bound exactly 1."""
    rows = []
    passed = True
    for k in range(1, 47):
        b = local.lhv_bound(sliwa(k))
        ok = b.lhv_bound == 1
        passed = passed and ok
        rows.append((k, str(b.lhv_bound), b.saturating_count, ok))
    files = _write_tsv(outdir, "sliwa_bounds", rows,
                       header=("entry", "bound", "saturators", "ok"))
    files += _write_report(outdir, "sliwa_bounds", {"all_bounds_one": passed})
    return ScenarioResult(
        "sliwa_bounds", passed,
        f"{sum(1 for r in rows if r[3])}/46 entries at bound 1",
        {"rows": rows}, files)


def run_sliwa_tightness(outdir, **_):
    """Every catalog entry is a facet of the (3,2,2) local polytope."""
    rows = []
    passed = True
    for k in range(1, 47):
        rep = local.is_tight(sliwa(k))
        passed = passed and rep.is_facet
        rows.append((k, rep.affine_rank, rep.dimension, rep.is_facet))
    files = _write_tsv(outdir, "sliwa_tightness", rows,
                       header=("entry", "affine_rank", "dimension", "is_facet"))
    files += _write_report(outdir, "sliwa_tightness", {"all_facets": passed})
    return ScenarioResult(
        "sliwa_tightness", passed,
        f"{sum(1 for r in rows if r[3])}/46 facets in dimension 26",
        {"rows": rows}, files)


def _table_job(args):
    kind, k, v, seed = args
    if kind == "4":
        f = sliwa4(k, v)
        q = sliwa4_q(k, v)
        from .data.extensions import EXTENSIONS

        notes = EXTENSIONS[k][v].get("notes", ())
    else:
        f = sliwa5(v)
        q = sliwa5_q(v)
        notes = ()
    bound = local.lhv_bound(f).lhv_bound
    tight = local.is_tight(f).is_facet
    entry = {
        "bound": str(bound),
        "is_facet": tight,
        "q_target": None if q is None else q[0],
    }
    status = "ok" if bound == 1 and tight else "FAIL"
    if q is not None:
        target, expr, printed_decimal = q
        if target < 1:
            # a recorded target below the classical bound cannot be met by
            # any quantum model; record for review instead of optimizing
            entry["q_status"] = "review (target below classical bound)"
        elif "q_unreliable" in notes:
            # the recorded value is inconsistent with the row's own
            # polynomial; keep it on record but do not fail against it
            entry["q_seesaw"] = quantum.seesaw(f, 2, restarts=24, seed=seed).value
            entry["q_status"] = "review (recorded value inconsistent with row)"
        else:
            tol = 5e-3 if printed_decimal else 1e-4
            got = quantum.seesaw(
                f, 2, restarts=24, seed=seed, warm_from_pieces=True).value
            # a few rows have hard landscapes; escalate deterministically
            # before concluding anything
            if got < target - tol:
                got = max(got, quantum.seesaw(
                    f, 2, restarts=60, seed=seed + 101,
                    warm_from_pieces=True).value)
            if got < target - tol:
                got = max(got, quantum.seesaw(
                    f, 3, restarts=40, seed=seed + 202).value)
            entry["q_seesaw"] = got
            entry["q_tol"] = tol
            if abs(got - target) <= tol:
                entry["q_status"] = "ok"
            elif got > target:
                entry["q_status"] = "review (see-saw exceeds printed value)"
            else:
                entry["q_status"] = "FAIL"
                status = "FAIL"
    if status == "FAIL":
        entry["status"] = "FAIL"
    return (kind, k, v), entry


def run_sliwa4_tables(outdir, seed=0, threads=None, **_):
    """Rebuild every recorded extension row; check normalization, tightness,
    and the recorded quantum value via see-saw."""
    jobs = []
    for k in range(1, 47):
        for v in sliwa4_variants(k):
            jobs.append(("4", k, v, seed))
    for v in sliwa5_variants():
        jobs.append(("5", 3, v, seed))
    threads = threads or os.cpu_count() or 1
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(_table_job, jobs))
    else:
        results = dict(map(_table_job, jobs))
    rows = []
    passed = True
    n_q_ok = 0
    n_review = 0
    for (kind, k, v), entry in sorted(results.items()):
        ok = entry["bound"] == "1" and entry["is_facet"] and "status" not in entry
        passed = passed and ok
        qs = entry.get("q_status", "-")
        n_q_ok += qs == "ok"
        n_review += qs.startswith("review")
        rows.append((f"{'sliwa4' if kind == '4' else 'sliwa5'}({k},{v})",
                     entry["bound"], entry["is_facet"],
                     entry.get("q_target"), entry.get("q_seesaw"), qs))
    files = _write_tsv(outdir, "sliwa4_tables", rows,
                       header=("row", "bound", "facet", "q_target", "q_seesaw",
                               "q_status"))
    report = {f"{kind}:{k}:{v}": entry for (kind, k, v), entry in sorted(results.items())}
    files += _write_report(outdir, "sliwa4_tables", report)
    summary = (f"{len(rows)} rows; all bound-1 facets={passed}; "
               f"quantum targets matched {n_q_ok}, flagged for review {n_review}")
    return ScenarioResult("sliwa4_tables", passed, summary, report, files)


def run_i3322_tightness(outdir, **_):
    """The three-setting family stays a bound-1 facet for 2..4 parties."""
    report = {}
    passed = True
    for n in (2, 3, 4):
        f = i3322(n)
        bound = local.lhv_bound(f).lhv_bound
        rep = local.is_tight(f)
        report[n] = {
            "bound": str(bound),
            "dimension": rep.dimension,
            "affine_rank": rep.affine_rank,
            "is_facet": rep.is_facet,
        }
        passed = passed and bound == 1 and rep.is_facet
    files = _write_report(outdir, "i3322_tightness", report)
    summary = "; ".join(
        f"n={n}: dim {r['dimension']} facet={r['is_facet']}" for n, r in report.items())
    return ScenarioResult("i3322_tightness", passed, summary, report, files)


def run_eq13(outdir, seed=0, **_):
    """See-saw value of the first four-party extension: 4*sqrt(2) - 3."""
    f = sliwa4(1, 1)
    target = 4 * math.sqrt(2) - 3
    result = quantum.seesaw(f, 2, restarts=50, seed=seed)
    report = {
        "value": result.value,
        "target": target,
        "lower_tol": 1e-4,
        "upper_tol": 1e-3,
    }
    passed = target - 1e-4 <= result.value <= target + 1e-3
    files = _write_report(outdir, "eq13", report)
    return ScenarioResult(
        "eq13", passed, f"see-saw {result.value:.8f} vs target {target:.8f}",
        report, files)


_RUNNERS = {
    "fig1": run_fig1,
    "sm1_counterexample": run_sm1_counterexample,
    "dual_use": run_dual_use,
    "sliwa_bounds": run_sliwa_bounds,
    "sliwa_tightness": run_sliwa_tightness,
    "sliwa4_tables": run_sliwa4_tables,
    "i3322_tightness": run_i3322_tightness,
    "eq13": run_eq13,
}


def run_scenario(name, outdir="reports", seed=0, threads=None):
    """Run one verification scenario; writes reports under outdir."""
    if name not in _RUNNERS:
        raise ValueError(f"unknown scenario {name!r}; choose from {SCENARIOS}")
    result = _RUNNERS[name](outdir, seed=seed, threads=threads)
    return result

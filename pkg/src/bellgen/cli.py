"""Command-line surface over functional files.

Commands read the line-oriented text format (`-` is standard input) and
write the same format, TSV, or report files, so pipelines compose.  Exit
codes: 0 success, 1 a check failed, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

from . import local, quantum, repro
from .core import FormatError, parse, parse_transform, render
from .iterate import (
    apply_transform,
    caf,
    check_constraints,
    decompose,
    emabk,
    i3322,
    iterate,
    iterate_2m,
    iterate_3m,
    iterate_sym,
    mabk,
    sliwa,
    sliwa4,
    sliwa4_variants,
    sliwa5,
    sliwa5_variants,
)

FAMILIES = ("mabk", "caf", "emabk", "i3322", "sliwa", "sliwa4", "sliwa5")


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_functional(path):
    try:
        return parse(_read_text(path))
    except FormatError as exc:
        raise SystemExit(f"{path}: {exc}")
    except OSError as exc:
        raise SystemExit(str(exc))


def _write_text(path, text):
    if path == "-" or path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _sign_key(s):
    return "".join("p" if x > 0 else "m" for x in s)


def cmd_bound(args):
    f = _read_functional(args.file)
    report = local.lhv_bound(f, max_vertices=args.max_vertices)
    print(f"bound {report.lhv_bound}")
    print(f"saturators {report.saturating_count}")
    return 0


def cmd_tight(args):
    f = _read_functional(args.file)
    report = local.is_tight(f, max_vertices=args.max_vertices)
    print(f"dimension {report.dimension}")
    print(f"affine_rank {report.affine_rank}")
    print(f"facet {'true' if report.is_facet else 'false'}")
    return 0 if report.is_facet else 1


def cmd_decompose(args):
    f = _read_functional(args.file)
    pieces = decompose(f)
    ok = check_constraints(pieces)
    if args.outdir is None:
        # block stream on stdout so `decompose | iterate -` is the identity
        blocks = []
        for s, piece in sorted(pieces.items(), reverse=True):
            blocks.append(f"# piece {_sign_key(s)}\n" + render(piece))
        sys.stdout.write("\n".join(blocks))
        print(f"constraints {'satisfied' if ok else 'violated'}", file=sys.stderr)
        return 0 if ok else 1
    os.makedirs(args.outdir, exist_ok=True)
    for s, piece in sorted(pieces.items(), reverse=True):
        path = os.path.join(args.outdir, f"piece_{_sign_key(s)}.txt")
        _write_text(path, render(piece))
        print(f"wrote {path}")
    print(f"constraints {'satisfied' if ok else 'violated'}")
    return 0 if ok else 1


def cmd_iterate(args):
    text = _read_text(args.spec_file)
    if "scenario" in text:
        # a block stream as produced by `decompose`
        from .core import parse_blocks

        pieces = {}
        for comment, functional in parse_blocks(text):
            if not comment or not comment.startswith("piece "):
                print("blocks need `# piece <signs>` headers", file=sys.stderr)
                return 2
            signs = tuple(1 if c == "p" else -1 for c in comment.split()[1])
            pieces[signs] = functional
        try:
            result = iterate(pieces)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        _write_text(args.output, render(result))
        return 0
    spec = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition("=")
        spec[key.strip()] = value.strip()
    variant = spec.pop("formula", "general")
    try:
        if variant == "general":
            pieces = {
                tuple(1 if c == "p" else -1 for c in key): _read_functional(path)
                for key, path in spec.items()
            }
            result = iterate(pieces)
        elif variant == "2m":
            result = iterate_2m(*(_read_functional(spec[k]) for k in ("pp", "pm", "mp")))
        elif variant == "sym":
            result = iterate_sym(*(_read_functional(spec[k]) for k in ("pp", "pm")))
        elif variant == "3m":
            result = iterate_3m(
                *(_read_functional(spec[k]) for k in ("ppp", "ppm", "pmp", "mmm")))
        else:
            print(f"unknown formula {variant!r}", file=sys.stderr)
            return 2
    except KeyError as exc:
        print(f"piece file missing for {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _write_text(args.output, render(result))
    return 0


def cmd_family(args):
    name = args.name
    try:
        if name == "mabk":
            f = mabk(int(args.args[0]))
        elif name == "caf":
            f = caf(int(args.args[0]))
        elif name == "emabk":
            f = emabk(int(args.args[0]))
        elif name == "i3322":
            f = i3322(int(args.args[0]))
        elif name == "sliwa":
            f = sliwa(int(args.args[0]))
        elif name == "sliwa4":
            k, v = (int(x) for x in args.args[:2])
            if v not in sliwa4_variants(k):
                print(f"entry {k} has rows {sliwa4_variants(k)}", file=sys.stderr)
                return 2
            f = sliwa4(k, v)
        elif name == "sliwa5":
            v = int(args.args[0])
            if v not in sliwa5_variants():
                print(f"available rows: {sliwa5_variants()}", file=sys.stderr)
                return 2
            f = sliwa5(v)
        else:
            return 2
    except (IndexError, ValueError) as exc:
        print(f"bad arguments for {name}: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"no such entry: {exc}", file=sys.stderr)
        return 2
    _write_text(args.output, render(f))
    return 0


def cmd_qmax(args):
    f = _read_functional(args.file)
    result = quantum.seesaw_parallel(
        f, d=args.dim, restarts=args.restarts, seed=args.seed,
        threads=args.threads or 1)
    print(f"value {result.value:.12f}")
    if args.model:
        import numpy as np

        with open(args.model, "w") as fh:
            state = result.model.state
            fh.write("# state (real imag per amplitude)\n")
            for amp in state:
                fh.write(f"{amp.real:.12g} {amp.imag:.12g}\n")
            for i, ops in enumerate(result.model.observables):
                for j, op in enumerate(ops, 1):
                    fh.write(f"# observable party {i} setting {j}\n")
                    for row in np.asarray(op):
                        fh.write(" ".join(
                            f"{z.real:.12g}{z.imag:+.12g}j" for z in row) + "\n")
        print(f"model {args.model}")
    return 0


def cmd_sweep(args):
    f = _read_functional(args.file)
    grid = [k * (math.pi / 2) / (args.grid + 1) for k in range(1, args.grid + 1)]
    points = quantum.ghz_sweep(f, grid, restarts=args.restarts, seed=args.seed)
    lines = ["theta\tvalue"] + [f"{t:.12g}\t{v:.12g}" for t, v in points]
    _write_text(args.output, "\n".join(lines) + "\n")
    if args.plot:
        from pathlib import Path

        from .repro import _render_curves

        target = Path(args.plot)
        _render_curves(target.parent if str(target.parent) != "" else ".",
                       target.stem, [("sweep", points)], hlines=(1.0,))
    values = [v for _, v in points]
    peak = max(values)
    over = [t for t, v in points if v > 1 + repro.VIOLATION_EPS]
    summary = [f"# max {peak:.9f} at theta {points[values.index(peak)][0]:.9f}"]
    if over:
        summary.append(f"# violation interval [{over[0]:.9f}, {over[-1]:.9f}]"
                       " at grid resolution")
    else:
        summary.append("# no violation on the grid")
    print("\n".join(summary), file=sys.stderr)
    return 0


def cmd_transform(args):
    f = _read_functional(args.file)
    try:
        t = parse_transform(f.scenario, args.expr)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    _write_text(args.output, render(apply_transform(f, t)))
    return 0


def cmd_reproduce(args):
    try:
        result = repro.run_scenario(
            args.scenario, outdir=args.outdir, seed=args.seed, threads=args.threads)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"{result.name}: {'PASS' if result.passed else 'FAIL'} -- {result.summary}")
    for path in result.files:
        print(f"  {path}")
    return 0 if result.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bellgen",
        description="Construct and verify multipartite Bell inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="exact classical bound by vertex enumeration")
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=1 << 30)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("tight", help="facet test on the local polytope")
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=1 << 30)
    p.set_defaults(fn=cmd_tight)

    p = sub.add_parser("decompose", help="restrictions per sign vector of the last party")
    p.add_argument("file")
    p.add_argument("-o", "--outdir", default=None)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("iterate", help="assemble an (n+1)-party functional from pieces")
    p.add_argument("spec_file", help="lines `<signs>=<file>` or `formula=2m|sym|3m`"
                                     " with pp=/pm=/mp=/ppp=... entries")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_iterate)

    p = sub.add_parser("family", help="named generators and catalog entries")
    p.add_argument("name", choices=FAMILIES)
    p.add_argument("args", nargs="*")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("qmax", help="see-saw lower bound on the quantum value")
    p.add_argument("file")
    p.add_argument("--dim", type=int, default=2, choices=(2, 3, 4))
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.add_argument("--model", default=None, help="write the optimizing model here")
    p.set_defaults(fn=cmd_qmax)

    p = sub.add_parser("sweep", help="optimized value along the GGHZ angle grid")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=199)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--plot", default=None, help="also render the curve to this PNG")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("transform", help="apply a symmetry-group element")
    p.add_argument("file")
    p.add_argument("expr", help="e.g. 'swap A B; perm A 2 1; flip C1; neg'")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("reproduce", help="run a scripted verification scenario")
    p.add_argument("scenario", choices=repro.SCENARIOS)
    p.add_argument("-o", "--outdir", default=os.environ.get("BELLGEN_OUTDIR", "reports"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=os.cpu_count())
    p.set_defaults(fn=cmd_reproduce)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

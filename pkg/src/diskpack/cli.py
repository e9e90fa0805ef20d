"""Command-line driver: instance generation, solving, decomposition dumps,
pairing enumeration, brute-force oracle, solution verification, and small
regression benches.

File formats: point sets are CSV with one ``x,y`` pair per line (values are
anything :class:`fractions.Fraction` accepts, so both ``0.35`` and ``7/20``
parse exactly; ``#`` starts a comment).  Results are JSON with sorted keys,
so identical inputs and seeds give byte-identical output.  Decompositions
can additionally be rendered as SVG.

Exit codes: 0 success, 1 infeasible request or failed verification, 2 input
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence

from diskpack.arcs import PairingError, enumerate_kzz_free
from diskpack.dp import solve
from diskpack.oracle import OracleLimitError, max_cycle_packing, verify_solution
from diskpack.scdecomp import build_sc_decomposition
from diskpack.structure import clean
from diskpack.udg import DuplicatePointError, Point, UnitDiskGraph, build_udg


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def read_points(path: str) -> List[Point]:
    pts: List[Point] = []
    try:
        with open(path, newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                if len(row) != 2:
                    raise InputError(
                        f"{path}:{lineno}: expected 'x,y', got {row!r}"
                    )
                try:
                    x, y = Fraction(row[0].strip()), Fraction(row[1].strip())
                except (ValueError, ZeroDivisionError) as exc:
                    raise InputError(f"{path}:{lineno}: {exc}") from exc
                pts.append(Point.of(x, y))
    except OSError as exc:
        raise InputError(str(exc)) from exc
    if not pts:
        raise InputError(f"{path}: no points")
    return pts


def load_graph(path: str) -> UnitDiskGraph:
    try:
        return build_udg(read_points(path))
    except DuplicatePointError as exc:
        raise InputError(f"{path}: {exc}") from exc


def write_text(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def generate_points(
    n: int, seed: int, box: float, dist: str
) -> List[Point]:
    """Seeded random points with denominator 4096 (exact arithmetic stays
    fast); clustered mode draws around n//8 Gaussian centers."""
    rng = random.Random(seed)
    centers = None
    if dist == "clustered":
        k = max(1, n // 8)
        centers = [(rng.uniform(0, box), rng.uniform(0, box)) for _ in range(k)]
    pts: List[Point] = []
    seen = set()
    while len(pts) < n:
        if centers:
            cx, cy = rng.choice(centers)
            x, y = cx + rng.gauss(0, 0.4), cy + rng.gauss(0, 0.4)
        else:
            x, y = rng.uniform(0, box), rng.uniform(0, box)
        p = (Fraction(round(x * 4096), 4096), Fraction(round(y * 4096), 4096))
        if p in seen:
            continue
        seen.add(p)
        pts.append(Point.of(*p))
    return pts


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    pts = generate_points(args.n, args.seed, args.box, args.dist)
    lines = [f"{p.x},{p.y}\n" for p in pts]
    write_text(args.output, "".join(lines))
    return 0


def cmd_solve(args) -> int:
    g = load_graph(args.points)
    res = solve(
        g,
        args.k,
        mode=args.mode,
        z=args.z,
        salt=args.salt,
        dense_c=args.dense_c,
    )
    write_text(args.output, res.to_json() + "\n")
    return 0 if res.ok else 1


def cmd_decompose(args) -> int:
    g = load_graph(args.points)
    res = clean(g)
    if res.graph.n == 0:
        write_text(args.output, dump_json({"empty": True}))
        if args.svg:
            write_text(args.svg, _svg(g, None, []))
        return 0
    sc = build_sc_decomposition(res.graph, salt=args.salt)
    doc = json.loads(sc.to_json())
    doc["kept"] = res.kept
    write_text(args.output, dump_json(doc))
    if args.svg:
        leaf = _leaf_assignment(sc)
        write_text(args.svg, _svg(res.graph, sc, leaf))
    return 0


def cmd_arcs(args) -> int:
    try:
        pairings = enumerate_kzz_free(args.m, args.z)
    except PairingError as exc:
        raise InputError(str(exc)) from exc
    doc = {"m": args.m, "z": args.z, "count": len(pairings)}
    if not args.count_only:
        doc["pairings"] = [[list(p) for p in pr.pairs] for pr in pairings]
    write_text(args.output, dump_json(doc))
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args.points)
    try:
        value, one, _ = max_cycle_packing(g, limit=args.limit)
    except OracleLimitError as exc:
        raise InputError(str(exc)) from exc
    write_text(args.output, dump_json({"value": value, "cycles": one}))
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.points)
    try:
        with open(args.solution) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.solution}: {exc}") from exc
    cycles = doc["cycles"] if isinstance(doc, dict) else doc
    if not isinstance(cycles, list) or not all(
        isinstance(c, list) and all(isinstance(v, int) for v in c)
        for c in cycles
    ):
        raise InputError(f"{args.solution}: expected a list of vertex lists")
    ok = verify_solution(g, cycles)
    write_text(args.output, dump_json({"valid": ok, "count": len(cycles)}))
    return 0 if ok else 1


def cmd_bench(args) -> int:
    if args.suite == "width":
        rows = _bench_width(args.sizes or [30, 60, 90, 120], args.seed)
        header = "n,l,width,K\n"
    else:
        rows = _bench_runtime(args.sizes or [1, 2, 4, 8], args.seed)
        header = "k,n,value,seconds\n"
    body = "".join(",".join(str(x) for x in row) + "\n" for row in rows)
    write_text(args.output, header + body)
    if args.plot:
        write_text(args.plot, _plot_svg(header, rows))
    return 0


def _bench_width(sizes: Sequence[int], seed: int):
    rows = []
    for i, n in enumerate(sizes):
        g = clean(build_udg(generate_points(n, seed + i, 2.5, "clustered"))).graph
        if g.n == 0:
            continue
        sc = build_sc_decomposition(g)
        ell = g.n
        w = sc.width()
        rows.append((n, ell, round(w, 4), round(w / math.sqrt(ell), 4)))
    return rows


def _triangle_chain(k: int) -> UnitDiskGraph:
    pts = []
    for i in range(k):
        bx = Fraction(4 * i)
        pts += [
            Point.of(bx, 0),
            Point.of(bx + Fraction(9, 10), 0),
            Point.of(bx + Fraction(9, 20), Fraction(7, 10)),
        ]
    return build_udg(pts)


def _bench_runtime(ks: Sequence[int], seed: int):
    rows = []
    for k in ks:
        g = _triangle_chain(k)
        t0 = time.perf_counter()
        res = solve(g, k)
        dt = time.perf_counter() - t0
        rows.append((k, g.n, res.value, round(dt, 4)))
    return rows


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def _leaf_assignment(sc) -> List[int]:
    return [sc.pos[sc.q[v]] for v in range(sc.g.n)]


def _svg(g: UnitDiskGraph, sc, leaf: List[int]) -> str:
    xs = [float(g.coords(v)[0]) for v in range(g.n)] or [0.0]
    ys = [float(g.coords(v)[1]) for v in range(g.n)] or [0.0]
    pad = 0.6
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    scale = 120.0

    def sx(x):
        return round((x - x0) * scale, 2)

    def sy(y):
        return round((h - (y - y0)) * scale, 2)  # flip: SVG y grows downward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{round(w * scale)}" '
        f'height="{round(h * scale)}" viewBox="0 0 {round(w * scale)} '
        f'{round(h * scale)}">'
    ]
    for u, v in g.edges:
        ux, uy = map(float, g.coords(u))
        vx, vy = map(float, g.coords(v))
        out.append(
            f'<line x1="{sx(ux)}" y1="{sy(uy)}" x2="{sx(vx)}" y2="{sy(vy)}" '
            'stroke="#999" stroke-width="1.5"/>'
        )
    for v in range(g.n):
        px, py = map(float, g.coords(v))
        color = _PALETTE[leaf[v] % len(_PALETTE)] if leaf else "#333"
        out.append(
            f'<circle cx="{sx(px)}" cy="{sy(py)}" r="5" fill="{color}">'
            f"<title>v{v}</title></circle>"
        )
    if sc is not None:
        out.append(
            f'<text x="8" y="16" font-size="13" fill="#333">width='
            f"{round(sc.width(), 3)} nodes={len(sc.nodes)}</text>"
        )
    out.append("</svg>\n")
    return "\n".join(out)


def _plot_svg(header: str, rows) -> str:
    """Minimal scatter of the last column against the first."""
    cols = header.strip().split(",")
    if not rows:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10"/>\n'
    xs = [float(r[0]) for r in rows]
    ys = [float(r[-1]) for r in rows]
    W, H, M = 420, 300, 40
    xr = max(xs) - min(xs) or 1.0
    yr = max(ys) - min(ys) or 1.0

    def px(x):
        return round(M + (x - min(xs)) / xr * (W - 2 * M), 1)

    def py(y):
        return round(H - M - (y - min(ys)) / yr * (H - 2 * M), 1)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}">',
        f'<line x1="{M}" y1="{H - M}" x2="{W - M}" y2="{H - M}" stroke="#000"/>',
        f'<line x1="{M}" y1="{M}" x2="{M}" y2="{H - M}" stroke="#000"/>',
        f'<text x="{W // 2}" y="{H - 8}" font-size="12" text-anchor="middle">'
        f"{cols[0]}</text>",
        f'<text x="12" y="{H // 2}" font-size="12" transform="rotate(-90 12 '
        f'{H // 2})" text-anchor="middle">{cols[-1]}</text>',
    ]
    pts = " ".join(f"{px(x)},{py(y)}" for x, y in zip(xs, ys))
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f77b4"/>')
    for x, y in zip(xs, ys):
        out.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="3" fill="#1f77b4"/>')
    out.append("</svg>\n")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diskpack",
        description="Cycle packing on unit disk graphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def out_flag(p):
        p.add_argument("-o", "--output", default="-", help="output file or -")

    p = sub.add_parser("gen", help="generate a seeded random point set (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=float, default=3.0)
    p.add_argument("--dist", choices=["uniform", "clustered"], default="uniform")
    out_flag(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="pack k vertex-disjoint cycles")
    p.add_argument("--points", required=True, help="points CSV")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["standard", "refined"], default="standard")
    p.add_argument("--z", type=int, default=3)
    p.add_argument("--salt", type=int, default=0)
    p.add_argument("--dense-c", type=int, default=None,
                   help="override the dense-shortcut threshold multiplier")
    out_flag(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decompose", help="emit the surface-cut decomposition")
    p.add_argument("--points", required=True)
    p.add_argument("--salt", type=int, default=0)
    p.add_argument("--svg", default=None, help="also render an SVG here")
    out_flag(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("arcs", help="enumerate K_{z,z}-free circular pairings")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    out_flag(p)
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("oracle", help="brute-force optimum (small instances)")
    p.add_argument("--points", required=True)
    p.add_argument("--limit", type=int, default=16)
    out_flag(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a solution JSON against points")
    p.add_argument("--points", required=True)
    p.add_argument("--solution", required=True,
                   help="JSON: list of cycles or {'cycles': ...}")
    out_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="regression suites (CSV + optional plot)")
    p.add_argument("--suite", choices=["width", "runtime"], required=True)
    p.add_argument("--sizes", type=int, nargs="+", default=None,
                   help="instance sizes (width) or k values (runtime)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", default=None, help="write an SVG plot here")
    out_flag(p)
    p.set_defaults(func=cmd_bench)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

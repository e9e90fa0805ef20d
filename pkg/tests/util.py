"""Shared helpers for the test suite: seeded instance generators."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from diskpack.udg import Point, build_udg


def random_points(n, seed, box=3.0, cluster=False):
    """Deterministic random point set with limited denominators (keeps the
    exact arithmetic fast)."""
    rng = random.Random(seed)
    pts = []
    seen = set()
    centers = None
    if cluster:
        k = max(1, n // 8)
        centers = [
            (rng.uniform(0, box), rng.uniform(0, box)) for _ in range(k)
        ]
    while len(pts) < n:
        if centers:
            cx, cy = rng.choice(centers)
            x = cx + rng.gauss(0, 0.4)
            y = cy + rng.gauss(0, 0.4)
        else:
            x = rng.uniform(0, box)
            y = rng.uniform(0, box)
        p = (Fraction(round(x * 4096), 4096), Fraction(round(y * 4096), 4096))
        if p in seen:
            continue
        seen.add(p)
        pts.append(Point(p[0], p[1]))
    return pts


def random_udg(n, seed, box=3.0, cluster=False):
    return build_udg(random_points(n, seed, box=box, cluster=cluster))


def outer_face(pg, coords):
    """Index of the unique clockwise (negative signed area) face walk."""
    neg = []
    for f, walk in enumerate(pg.faces):
        area2 = 0
        for d in walk:
            x1, y1 = coords[pg.tail[d]]
            x2, y2 = coords[pg.head[d]]
            area2 += x1 * y2 - x2 * y1
        if area2 < 0:
            neg.append(f)
    assert len(neg) == 1, neg
    return neg[0]


def random_triangulation(n, seed):
    """Random sphere triangulation: Delaunay triangulation of random points
    with the outer face closed off by one extra vertex.  Returns a
    triangulated PlaneGraph."""
    import numpy as np
    from scipy.spatial import Delaunay

    from diskpack.planegraph import PlaneGraph

    rng = np.random.default_rng(seed)
    pts = rng.uniform(0.0, 10.0, size=(n, 2))
    tri = Delaunay(pts)
    edges = set()
    for simplex in tri.simplices:
        for i in range(3):
            a, b = int(simplex[i]), int(simplex[(i + 1) % 3])
            edges.add((min(a, b), max(a, b)))
    coords = [(Fraction(float(x)), Fraction(float(y))) for x, y in pts]
    pg = PlaneGraph.from_coords(coords, sorted(edges))
    pg.check()
    if pg.is_triangulated():
        return pg
    out = outer_face(pg, coords)
    pg2, _ = pg.triangulate_with_aux(faces={out})
    pg2.check()
    assert pg2.is_triangulated()
    return pg2


def tube_triangulation(length):
    """Sphere triangulation of large diameter: `length` nested concentric
    triangles joined by triangulated bands (a long triangulated tube).  The
    innermost and outermost triangles are faces, so no extra vertex is
    needed and the graph diameter grows linearly with `length`."""
    from diskpack.planegraph import PlaneGraph

    dirs = [(1, 0), (0, 1), (-1, -1)]
    coords = []
    for i in range(length):
        r = Fraction(2) ** i
        for dx, dy in dirs:
            coords.append((r * dx, r * dy))
    edges = []
    for i in range(length):
        base = 3 * i
        for k in range(3):
            edges.append((base + k, base + (k + 1) % 3))
            if i + 1 < length:
                edges.append((base + k, base + 3 + k))
                edges.append((base + k, base + 3 + (k + 1) % 3))
    pg = PlaneGraph.from_coords(coords, edges)
    pg.check()
    assert pg.is_triangulated()
    return pg


def hex_tube_triangulation(length):
    """Sphere triangulation shaped like a long hexagonal tube: `length`
    nested hexagons joined by triangulated bands, with the two hexagonal cap
    faces closed by one auxiliary hub vertex each.  Vertex ids: ring i lane k
    is 6*i + k; the two hubs come last (inner hub first)."""
    from diskpack.planegraph import PlaneGraph

    dirs = [(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]
    coords = []
    for i in range(length):
        r = Fraction(2) ** i
        for dx, dy in dirs:
            coords.append((r * dx, r * dy))
    edges = []
    for i in range(length):
        base = 6 * i
        for k in range(6):
            edges.append((base + k, base + (k + 1) % 6))
            if i + 1 < length:
                edges.append((base + k, base + 6 + k))
                edges.append((base + k, base + 6 + (k + 1) % 6))
    pg = PlaneGraph.from_coords(coords, edges)
    pg.check()
    caps = [f for f in range(len(pg.faces)) if len(pg.faces[f]) == 6]
    assert len(caps) == 2
    pg2, _ = pg.triangulate_with_aux(faces=set(caps))
    pg2.check()
    assert pg2.is_triangulated()
    return pg2


def ladder_tube_instance(length):
    """Hexagonal tube with lane costs arranged so that the level tree keeps
    two long spines (lanes 0 and 3) apart; the widest balanced fundamental
    cycle is then a deep "ladder" through both spines, which makes the
    level-set cycle sequence reachable.  Returns (graph, c, b)."""
    pg = hex_tube_triangulation(length)
    c = [0] * pg.n
    b = [1] * pg.n
    for i in range(length):
        for k in range(6):
            v = 6 * i + k
            if k in (0, 3):
                c[v] = 4
            elif i == 0:
                c[v] = 1  # cheap ring-0 crossing anchors both spines at root
            else:
                c[v] = 6
    c[pg.n - 2] = c[pg.n - 1] = 4  # cap hubs
    return pg, c, b


def blocked_ladder_instance(length, band=10, heavy=20, cost_bump=8):
    """Ladder tube with a mid-tube band of rings whose non-spine lanes are
    slightly more expensive (so no cheapest level cycle lands in the band)
    and which carries a large share of the balance weight.  Level cycles
    below the band see less than 1/3 of the weight and cycles above it more
    than 2/3, so only the region-between-consecutive-cycles machinery can
    produce a balanced separator.  Returns (graph, c, b)."""
    pg, c, b = ladder_tube_instance(length)
    i0 = length // 2
    for i in range(i0, i0 + band):
        for k in range(6):
            v = 6 * i + k
            if k not in (0, 3):
                c[v] = cost_bump
            b[v] = heavy
    return pg, c, b


def random_weights(n, seed, lo=1, hi=4):
    rng = random.Random(seed)
    return [rng.randint(lo, hi) for _ in range(n)]


def annulus_spiral(theta_out, theta_in, winding, segments=None):
    """Polyline from angle `theta_out` on the radius-2 circle to angle
    `theta_in` on the radius-1 circle, winding `winding` extra full turns;
    the radius decreases and the angle changes monotonically along it."""
    total = theta_in + 2 * math.pi * winding - theta_out
    if segments is None:
        segments = max(24, 16 * (abs(winding) + 1))
    pts = []
    for i in range(segments + 1):
        s = i / segments
        r = 2 - s
        a = theta_out + s * total
        pts.append((r * math.cos(a), r * math.sin(a)))
    return pts

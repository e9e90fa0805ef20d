"""Unit disk graphs: construction, straight-line crossings, icf property."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from diskpack.geometry import Pt, dist2, frac, segment_intersection, segments_properly_cross


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point":
        return Point(frac(x), frac(y))

    def xy(self) -> Pt:
        return (self.x, self.y)


class DuplicatePointError(ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(f"duplicate points at indices {i} and {j}")
        self.indices = (i, j)


class UnitDiskGraph:
    """Points in the plane with edges between pairs at distance <= 1.

    Immutable after construction.  Vertex order is the input order; edges are
    stored as sorted index pairs.
    """

    def __init__(self, points: Sequence[Point], edges: Sequence[Tuple[int, int]]):
        self.points: List[Point] = list(points)
        self.edges: List[Tuple[int, int]] = sorted(
            (min(u, v), max(u, v)) for (u, v) in edges
        )
        self.edge_set = frozenset(self.edges)
        self.adj: List[List[int]] = [[] for _ in self.points]
        for u, v in self.edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
        for nbrs in self.adj:
            nbrs.sort()

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def coords(self, v: int) -> Pt:
        return self.points[v].xy()

    def induced(self, keep: Sequence[int]) -> "UnitDiskGraph":
        keep = sorted(set(keep))
        remap = {v: i for i, v in enumerate(keep)}
        kset = set(keep)
        edges = [
            (remap[u], remap[v]) for (u, v) in self.edges if u in kset and v in kset
        ]
        return UnitDiskGraph([self.points[v] for v in keep], edges)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [[str(p.x), str(p.y)] for p in self.points],
                "edges": [list(e) for e in self.edges],
            }
        )


@dataclass(frozen=True)
class SegmentCrossing:
    edge_a: Tuple[int, int]
    edge_b: Tuple[int, int]
    point: Point


def build_udg(points: Sequence[Point]) -> UnitDiskGraph:
    """Exact distance-threshold graph over distinct points."""
    pts = list(points)
    if not pts:
        raise ValueError("need at least one point")
    seen = {}
    for i, p in enumerate(pts):
        key = (p.x, p.y)
        if key in seen:
            raise DuplicatePointError(seen[key], i)
        seen[key] = i
    n = len(pts)
    arr = np.array([[float(p.x), float(p.y)] for p in pts])
    edges = []
    # Float prefilter with a safety margin, exact check on survivors.
    for i in range(n):
        d = arr[i + 1 :] - arr[i]
        cand = np.nonzero((d * d).sum(axis=1) <= 1.0 + 1e-9)[0]
        a = pts[i].xy()
        for off in cand:
            j = i + 1 + int(off)
            if dist2(a, pts[j].xy()) <= 1:
                edges.append((i, j))
    return UnitDiskGraph(pts, edges)


def find_crossings(g: UnitDiskGraph) -> List[SegmentCrossing]:
    """All properly crossing edge pairs of the straight-line drawing.

    Pairs sharing an endpoint are excluded by the proper-crossing predicate.
    Each unordered pair is reported once, in lexicographic edge order.
    """
    m = g.m
    if m < 2:
        return []
    segs = [(g.coords(u), g.coords(v)) for (u, v) in g.edges]
    lo = np.array([[min(float(a[0]), float(b[0])), min(float(a[1]), float(b[1]))] for a, b in segs])
    hi = np.array([[max(float(a[0]), float(b[0])), max(float(a[1]), float(b[1]))] for a, b in segs])
    eps = 1e-9
    out: List[SegmentCrossing] = []
    for i in range(m - 1):
        # Bounding-box overlap prefilter against all later edges.
        ok = np.nonzero(
            (lo[i + 1 :, 0] <= hi[i, 0] + eps)
            & (hi[i + 1 :, 0] >= lo[i, 0] - eps)
            & (lo[i + 1 :, 1] <= hi[i, 1] + eps)
            & (hi[i + 1 :, 1] >= lo[i, 1] - eps)
        )[0]
        a, b = segs[i]
        ei = g.edges[i]
        for off in ok:
            j = i + 1 + int(off)
            ej = g.edges[j]
            if ei[0] in ej or ei[1] in ej:
                continue
            c, d = segs[j]
            p = segment_intersection(a, b, c, d)
            if p is not None:
                out.append(SegmentCrossing(ei, ej, Point(p[0], p[1])))
    return out


def check_icf(g: UnitDiskGraph, crossings: Optional[List[SegmentCrossing]] = None):
    """Every crossing pair must have three of its four endpoints forming a
    triangle.  Returns (ok, witnesses) where witnesses lists violating
    crossings."""
    if crossings is None:
        crossings = find_crossings(g)
    bad = []
    for cr in crossings:
        x, xp = cr.edge_a
        y, yp = cr.edge_b
        quad = [x, xp, y, yp]
        found = False
        for skip in range(4):
            tri = [quad[t] for t in range(4) if t != skip]
            if (
                g.has_edge(tri[0], tri[1])
                and g.has_edge(tri[1], tri[2])
                and g.has_edge(tri[0], tri[2])
            ):
                found = True
                break
        if not found:
            bad.append(cr)
    return (len(bad) == 0), bad

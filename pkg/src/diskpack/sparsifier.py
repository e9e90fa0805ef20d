"""Planar sparsifier of a unit disk graph over its grid map.

The sparsifier H is a planar straight-line arrangement in sqrt(2)-scaled
space consisting of

  * the boundary edges of every cell within dual distance alpha of a cell
    holding a G-vertex of degree >= 3 (the "covered" cells), and
  * every G-edge whose two endpoints both have degree <= 2,

with every crossing between a G-edge and a grid segment promoted to a
vertex ("cross" kind).  Two such G-edges never cross each other (a crossing
would force a triangle and hence an endpoint of degree >= 3); this is
asserted at build time.  Grid segments are axis-aligned unit segments and
only meet at corners.

`connectify` augments H with a virtual bounding square and rightward bridge
segments until it is connected; `contract_to_h3` peels dangling trees (kept
as forbidden curves) and contracts maximal degree-2 chains into single
edges, yielding the small plane multigraph H3 whose vertices all have
degree >= 3 in H.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import log2
from typing import Dict, List, Optional, Sequence, Set, Tuple

from diskpack.geometry import QF, qf_orient
from diskpack.gridmap import GridMap, MapConstants, compute_constants, neighboring_cells
from diskpack.planegraph import PlaneGraph

QPt = Tuple[QF, QF]

VK_CORNER = "corner"
VK_GVERTEX = "gvertex"
VK_CROSS = "cross"
VK_VIRTUAL = "virtual"

EK_GRID = "grid"
EK_GEDGE = "gedge"
EK_VIRTUAL = "virtual"


class SparsifierError(RuntimeError):
    pass


class MapSparsifier:
    """Planar arrangement: exact coordinates, vertex/edge kinds, back-links.

    vref[v]: corner -> (i, j) grid corner; gvertex -> G vertex id;
    cross -> (g_edge, side_key); virtual -> tag string.
    eref[e]: grid -> side_key ("H"/"V", i, j); gedge -> original G edge
    (u, v); virtual -> tag string.
    """

    def __init__(self):
        self.coords: List[QPt] = []
        self.vkind: List[str] = []
        self.vref: List[object] = []
        self.edges: List[Tuple[int, int]] = []
        self.ekind: List[str] = []
        self.eref: List[object] = []
        self._by_key: Dict[object, int] = {}
        self.diagnostics: dict = {}

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def m(self) -> int:
        return len(self.edges)

    def add_vertex(self, key, coord: QPt, kind: str, ref) -> int:
        vid = self._by_key.get(key)
        if vid is None:
            vid = len(self.coords)
            self._by_key[key] = vid
            self.coords.append(coord)
            self.vkind.append(kind)
            self.vref.append(ref)
        return vid

    def add_edge(self, u: int, v: int, kind: str, ref) -> int:
        if u == v:
            raise SparsifierError("degenerate sparsifier edge")
        eid = len(self.edges)
        self.edges.append((u, v))
        self.ekind.append(kind)
        self.eref.append(ref)
        return eid

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> List[List[Tuple[int, int]]]:
        """adj[v] = list of (neighbor, edge id)."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj

    def plane(self) -> PlaneGraph:
        return PlaneGraph.from_coords(self.coords, self.edges)

    def components(self) -> List[List[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for w, _ in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    # -- export ---------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [
                    {
                        "x": float(p[0]),
                        "y": float(p[1]),
                        "exact": [[str(p[0].a), str(p[0].b)], [str(p[1].a), str(p[1].b)]],
                        "kind": self.vkind[v],
                    }
                    for v, p in enumerate(self.coords)
                ],
                "edges": [
                    {"u": u, "v": v, "kind": self.ekind[e]}
                    for e, (u, v) in enumerate(self.edges)
                ],
            }
        )

    def to_svg(self, width: int = 800) -> str:
        return _svg(self.coords, self.edges, self.ekind, width)


def _svg(coords, edges, ekind, width):
    if not coords:
        return '<svg xmlns="http://www.w3.org/2000/svg"/>'
    xs = [float(p[0]) for p in coords]
    ys = [float(p[1]) for p in coords]
    x0, x1 = min(xs) - 0.5, max(xs) + 0.5
    y0, y1 = min(ys) - 0.5, max(ys) + 0.5
    scale = width / max(x1 - x0, y1 - y0, 1e-9)
    h = int((y1 - y0) * scale) + 1

    def pt(v):
        return (xs[v] - x0) * scale, h - (ys[v] - y0) * scale

    color = {EK_GRID: "#888", EK_GEDGE: "#c33", EK_VIRTUAL: "#3a3"}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{h}">'
    ]
    for e, (u, v) in enumerate(edges):
        (ax, ay), (bx, by) = pt(u), pt(v)
        parts.append(
            f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
            f'stroke="{color.get(ekind[e], "#00f")}" stroke-width="1"/>'
        )
    for v in range(len(coords)):
        cx, cy = pt(v)
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="1.5" fill="#000"/>')
    parts.append("</svg>")
    return "".join(parts)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _side_of_cell(cell, which):
    i, j = cell
    return {
        "bottom": ("H", i, j),
        "top": ("H", i, j + 1),
        "left": ("V", i, j),
        "right": ("V", i + 1, j),
    }[which]


def _side_corners(side):
    axis, i, j = side
    if axis == "H":
        return (i, j), (i + 1, j)
    return (i, j), (i, j + 1)


def build_sparsifier(
    g, gmap: GridMap, consts: Optional[MapConstants] = None
) -> MapSparsifier:
    """The sparsifier of g over its grid map (see module docstring)."""
    if consts is None:
        consts = compute_constants(gmap)
    alpha = consts.alpha
    sp = MapSparsifier()

    covered: Set[Tuple[int, int]] = set()
    for v in range(g.n):
        if g.degree(v) >= 3:
            covered.update(neighboring_cells(gmap.cell_of[v], alpha))
    sides: Set[tuple] = set()
    for cell in covered:
        for which in ("bottom", "top", "left", "right"):
            sides.add(_side_of_cell(cell, which))

    low_edges = [
        (u, v) for (u, v) in g.edges if g.degree(u) <= 2 and g.degree(v) <= 2
    ]
    _assert_low_edges_disjoint(g, low_edges)

    def corner_vertex(i, j):
        return sp.add_vertex(("c", i, j), gmap.cell_corner(i, j), VK_CORNER, (i, j))

    dx, dy = gmap.offset
    crosses_on_side: Dict[tuple, List[Tuple[QF, int]]] = {}
    for ge in low_edges:
        u, v = ge
        a, b = gmap.scaled[u], gmap.scaled[v]
        ca, cb = gmap.cell_of[u], gmap.cell_of[v]
        hits: List[Tuple[QF, QPt, tuple]] = []
        for axis, off in ((0, dx), (1, dy)):
            lo, hi = ca[axis], cb[axis]
            denom = b[axis] - a[axis]
            for k in range(min(lo, hi) + 1, max(lo, hi) + 1):
                t = (QF.of(Fraction(k) + off) - a[axis]) / denom
                p = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                if axis == 0:
                    side = ("V", k, (p[1] - dy).floor())
                else:
                    side = ("H", (p[0] - dx).floor(), k)
                if side in sides:
                    hits.append((t, p, side))
        hits.sort(key=lambda e: e[0])
        chain = [sp.add_vertex(("g", u), a, VK_GVERTEX, u)]
        for t, p, side in hits:
            vid = sp.add_vertex(("x", p), p, VK_CROSS, (ge, side))
            crosses_on_side.setdefault(side, []).append(
                (p[1] if side[0] == "V" else p[0], vid)
            )
            chain.append(vid)
        chain.append(sp.add_vertex(("g", v), b, VK_GVERTEX, v))
        for x, y in zip(chain, chain[1:]):
            sp.add_edge(x, y, EK_GEDGE, ge)

    for side in sorted(sides):
        (i1, j1), (i2, j2) = _side_corners(side)
        chain = [corner_vertex(i1, j1)]
        for _, vid in sorted(crosses_on_side.get(side, ()), key=lambda e: e[0]):
            chain.append(vid)
        chain.append(corner_vertex(i2, j2))
        for x, y in zip(chain, chain[1:]):
            sp.add_edge(x, y, EK_GRID, side)

    per_cell: Dict[Tuple[int, int], int] = {}
    for v in range(sp.n):
        cell = gmap.locate_scaled(sp.coords[v])
        per_cell[cell] = per_cell.get(cell, 0) + 1
    sp.diagnostics["max_vertices_per_cell"] = max(per_cell.values(), default=0)
    sp.diagnostics["alpha"] = alpha
    sp.diagnostics["covered_cells"] = len(covered)

    bad = count_proper_crossings(sp.coords, sp.edges)
    if bad:
        raise SparsifierError(f"sparsifier arrangement still has {bad} crossings")
    return sp


def _assert_low_edges_disjoint(g, low_edges):
    """No two degree-<=2 G-edges cross: a crossing would force a triangle on
    three of the four endpoints, giving one of them degree >= 3."""
    segs = [(g.coords(u), g.coords(v)) for (u, v) in low_edges]
    from diskpack.geometry import segments_properly_cross

    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if set(low_edges[i]) & set(low_edges[j]):
                continue
            if segments_properly_cross(*segs[i], *segs[j]):
                raise SparsifierError(
                    f"degree-<=2 edges {low_edges[i]} and {low_edges[j]} cross"
                )


def count_proper_crossings(coords: Sequence[QPt], edges) -> int:
    """Proper crossings among straight segments (float prefilter, exact test)."""
    m = len(edges)
    if m < 2:
        return 0
    fl = [(float(p[0]), float(p[1])) for p in coords]
    boxes = []
    for u, v in edges:
        (ax, ay), (bx, by) = fl[u], fl[v]
        boxes.append((min(ax, bx), min(ay, by), max(ax, bx), max(ay, by)))
    eps = 1e-9
    count = 0
    order = sorted(range(m), key=lambda e: boxes[e][0])
    for ii in range(m):
        i = order[ii]
        for jj in range(ii + 1, m):
            j = order[jj]
            if boxes[j][0] > boxes[i][2] + eps:
                break
            if boxes[j][1] > boxes[i][3] + eps or boxes[j][3] < boxes[i][1] - eps:
                continue
            eu, ev = edges[i], edges[j]
            if set(eu) & set(ev):
                continue
            a, b = coords[eu[0]], coords[eu[1]]
            c, d = coords[ev[0]], coords[ev[1]]
            o1, o2 = qf_orient(a, b, c), qf_orient(a, b, d)
            o3, o4 = qf_orient(c, d, a), qf_orient(c, d, b)
            if o1 * o2 < 0 and o3 * o4 < 0:
                count += 1
    return count


# ---------------------------------------------------------------------------
# Connectivity: virtual bounding square + rightward bridges
# ---------------------------------------------------------------------------


def connectify(sp: MapSparsifier) -> MapSparsifier:
    """Adds a virtual bounding square around everything, then joins each
    remaining component from its maximal (x, y) vertex by a +x ray to the
    first point of the arrangement hit (an edge interior, subdivided by a
    virtual vertex, or an existing vertex).  Virtual vertices and edges are
    tagged and never count as G-edges."""
    out = MapSparsifier()
    out.diagnostics = dict(sp.diagnostics)
    for v in range(sp.n):
        out.add_vertex(("o", v), sp.coords[v], sp.vkind[v], sp.vref[v])
    for e, (u, v) in enumerate(sp.edges):
        out.add_edge(u, v, sp.ekind[e], sp.eref[e])

    if out.n:
        xs = [p[0] for p in out.coords]
        ys = [p[1] for p in out.coords]
        x0, x1 = min(xs) - 2, max(xs) + 2
        y0, y1 = min(ys) - 2, max(ys) + 2
    else:
        x0 = y0 = QF.of(0)
        x1 = y1 = QF.of(1)
    sq = [
        out.add_vertex(("sq", i), p, VK_VIRTUAL, f"square{i}")
        for i, p in enumerate(((x0, y0), (x1, y0), (x1, y1), (x0, y1)))
    ]
    for i in range(4):
        out.add_edge(sq[i], sq[(i + 1) % 4], EK_VIRTUAL, "square")

    # Union-find over components.
    parent = list(range(out.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for u, v in out.edges:
        union(u, v)

    bridges = 0
    while True:
        roots: Dict[int, List[int]] = {}
        for v in range(out.n):
            roots.setdefault(find(v), []).append(v)
        if len(roots) == 1:
            break
        anchor_root = find(sq[0])
        comp = min(
            (vs for r, vs in roots.items() if r != anchor_root),
            key=lambda vs: min(vs),
        )
        comp_set = set(comp)
        src = max(comp, key=lambda v: (out.coords[v][0], out.coords[v][1]))
        hit = _first_hit_right(out, src, comp_set)
        if hit is None:
            raise SparsifierError("bridge ray escaped the bounding square")
        kind, where, eid, pt = hit
        if kind == "vertex":
            out.add_edge(src, where, EK_VIRTUAL, "bridge")
            union(src, where)
        else:
            w = out.add_vertex(("b", bridges), pt, VK_VIRTUAL, "bridge-sub")
            parent.append(w)
            a, b = out.edges[eid]
            out.edges[eid] = (a, w)
            out.add_edge(w, b, out.ekind[eid], out.eref[eid])
            out.add_edge(src, w, EK_VIRTUAL, "bridge")
            union(w, a)
            union(src, w)
        bridges += 1
    out.diagnostics["bridges"] = bridges
    bad = count_proper_crossings(out.coords, out.edges)
    if bad:
        raise SparsifierError(f"connectified arrangement has {bad} crossings")
    return out


def _first_hit_right(sp: MapSparsifier, src: int, comp_set: Set[int]):
    """First intersection of the open ray (+x from src) with the arrangement
    minus src's component.  Returns ("vertex", vid, None, pt) or
    ("edge", None, eid, pt)."""
    x0, y0 = sp.coords[src]
    best = None  # (x, kind-order, payload)
    for v in range(sp.n):
        if v in comp_set:
            continue
        px, py = sp.coords[v]
        if py == y0 and px > x0:
            if best is None or px < best[0]:
                best = (px, 0, ("vertex", v, None, (px, py)))
    for eid, (u, v) in enumerate(sp.edges):
        if u in comp_set or v in comp_set:
            continue
        (ax, ay), (bx, by) = sp.coords[u], sp.coords[v]
        s1, s2 = (ay - y0).sign(), (by - y0).sign()
        if s1 * s2 >= 0:
            continue  # endpoint hits are covered by the vertex scan
        t = (y0 - ay) / (by - ay)
        x = ax + t * (bx - ax)
        if x > x0 and (best is None or x < best[0]):
            best = (x, 1, ("edge", None, eid, (x, QF.of(0) + y0)))
    return None if best is None else best[2]


# ---------------------------------------------------------------------------
# Contraction to H3
# ---------------------------------------------------------------------------


@dataclass
class ForbiddenCurve:
    """A peeled dangling tree of the arrangement, touching the rest only at
    its anchor vertex."""

    anchor: int
    vertices: List[int]
    edges: List[int]


@dataclass
class ContractedSparsifier:
    sp: MapSparsifier
    pg: PlaneGraph
    hvert: List[int]  # H3 index -> H vertex id
    chains: List[List[int]]  # H3 edge -> H vertex path (endpoints included)
    chain_edges: List[List[int]]  # H3 edge -> H edge ids along the chain
    forbidden: List[ForbiddenCurve]
    designated: List[int] = field(default_factory=list)

    def coords(self) -> List[QPt]:
        return [self.sp.coords[v] for v in self.hvert]

    def uncontract_edges(self) -> Set[int]:
        """H edge ids reproduced by expanding all chains."""
        out: Set[int] = set()
        for eids in self.chain_edges:
            out.update(eids)
        return out

    def to_json(self) -> str:
        coords = self.coords()
        return json.dumps(
            {
                "vertices": [
                    {"x": float(p[0]), "y": float(p[1]), "h_vertex": hv}
                    for p, hv in zip(coords, self.hvert)
                ],
                "edges": [
                    {"u": u, "v": v, "chain": self.chains[e]}
                    for e, (u, v) in enumerate(self.pg.edges)
                ],
                "forbidden": [
                    {"anchor": fc.anchor, "vertices": fc.vertices}
                    for fc in self.forbidden
                ],
            }
        )

    def to_svg(self, width: int = 800) -> str:
        return _svg(
            self.coords(), self.pg.edges, [EK_GRID] * len(self.pg.edges), width
        )


def contract_to_h3(sp: MapSparsifier) -> ContractedSparsifier:
    """Peel dangling trees into forbidden curves, then contract maximal
    degree-2 chains of the remaining 2-core into single edges.

    H3 vertices are the core vertices of H-degree >= 3 (degree in H, before
    peeling), plus designated vertices added so that every chain has two
    distinct endpoints: two on each pure-cycle component, and the middle of
    any chain that would close into a self-loop."""
    adj = sp.adjacency()
    deg = sp.degrees()

    # Peel to the 2-core, remembering what was removed.
    alive = [True] * sp.n
    cur = deg[:]
    stack = [v for v in range(sp.n) if cur[v] <= 1]
    removed_order = []
    while stack:
        v = stack.pop()
        if not alive[v] or cur[v] > 1:
            continue
        alive[v] = False
        removed_order.append(v)
        for w, _ in adj[v]:
            if alive[w]:
                cur[w] -= 1
                if cur[w] <= 1:
                    stack.append(w)

    forbidden: List[ForbiddenCurve] = []
    removed = {v for v in range(sp.n) if not alive[v]}
    claimed: Set[int] = set()
    for a in range(sp.n):
        if not alive[a]:
            continue
        tree_v: List[int] = []
        tree_e: List[int] = []
        stack2 = [w for w, eid in adj[a] if w in removed]
        seeds = {w for w in stack2}
        if not seeds:
            continue
        seen_local: Set[int] = set()
        for w, eid in adj[a]:
            if w in removed:
                tree_e.append(eid)
        while stack2:
            v = stack2.pop()
            if v in seen_local:
                continue
            seen_local.add(v)
            if v in claimed:
                raise SparsifierError("dangling tree touches two core vertices")
            claimed.add(v)
            tree_v.append(v)
            for w, eid in adj[v]:
                if w in removed and w not in seen_local:
                    tree_e.append(eid)
                    stack2.append(w)
        forbidden.append(ForbiddenCurve(a, sorted(tree_v), sorted(set(tree_e))))
    unreached = removed - claimed
    if unreached:
        # Whole acyclic components (possible before connectify): keep them as
        # anchor-free curves, anchored at their own smallest vertex.
        comps_left: Set[int] = set(unreached)
        while comps_left:
            s = min(comps_left)
            cvs, ces = [s], []
            stack2 = [s]
            comps_left.discard(s)
            while stack2:
                v = stack2.pop()
                for w, eid in adj[v]:
                    if w in comps_left:
                        comps_left.discard(w)
                        cvs.append(w)
                        ces.append(eid)
                        stack2.append(w)
            forbidden.append(ForbiddenCurve(s, sorted(cvs), sorted(set(ces))))

    core_adj: List[List[Tuple[int, int]]] = [[] for _ in range(sp.n)]
    for eid, (u, v) in enumerate(sp.edges):
        if alive[u] and alive[v]:
            core_adj[u].append((v, eid))
            core_adj[v].append((u, eid))

    branch: Set[int] = {v for v in range(sp.n) if alive[v] and deg[v] >= 3}
    designated: List[int] = []

    def walk_chain(start, first):
        """Follow the chain from branch vertex `start` through core edge
        `first` until the next branch vertex."""
        verts = [start]
        eids = []
        w, eid = first
        while True:
            verts.append(w)
            eids.append(eid)
            if w in branch:
                return verts, eids
            nxt = [(x, e2) for x, e2 in core_adj[w] if e2 != eid]
            assert len(nxt) == 1, (w, core_adj[w])
            w, eid = nxt[0]

    while True:
        # Pure-cycle core components get two designated branch vertices.
        seen = [False] * sp.n
        changed = False
        for s in range(sp.n):
            if not alive[s] or seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack3 = [s]
            has_branch = False
            while stack3:
                v = stack3.pop()
                if v in branch:
                    has_branch = True
                for w, _ in core_adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack3.append(w)
            if not has_branch:
                picks = sorted(comp)[:2]
                branch.update(picks)
                designated.extend(picks)
                changed = True
        if changed:
            continue
        # Split chains that close into self-loops at their middle vertex.
        loop_fix = None
        for v in sorted(branch):
            for w, eid in core_adj[v]:
                verts, eids = walk_chain(v, (w, eid))
                if verts[-1] == v and len(verts) > 2:
                    internal = verts[1:-1]
                    loop_fix = internal[len(internal) // 2]
                    break
            if loop_fix is not None:
                break
        if loop_fix is None:
            break
        branch.add(loop_fix)
        designated.append(loop_fix)

    hvert = sorted(branch)
    h3_of = {v: i for i, v in enumerate(hvert)}
    chains: List[List[int]] = []
    chain_edges: List[List[int]] = []
    edges3: List[Tuple[int, int]] = []
    dart_at: Dict[Tuple[int, int], int] = {}  # (vertex, first core edge) -> dart
    seen_first: Dict[Tuple[int, int], int] = {}
    for v in hvert:
        for w, eid in core_adj[v]:
            if (v, eid) in seen_first:
                continue
            verts, eids = walk_chain(v, (w, eid))
            e3 = len(edges3)
            edges3.append((h3_of[v], h3_of[verts[-1]]))
            chains.append(verts)
            chain_edges.append(eids)
            seen_first[(v, eids[0])] = e3
            seen_first[(verts[-1], eids[-1])] = e3
            dart_at[(v, eids[0])] = 2 * e3
            dart_at[(verts[-1], eids[-1])] = 2 * e3 + 1
    # Rotation at each H3 vertex from the angular order of chain starts in H.
    from diskpack.geometry import angle_key

    rot: List[List[int]] = []
    for v in hvert:
        items = []
        for w, eid in core_adj[v]:
            dxy = (
                sp.coords[w][0] - sp.coords[v][0],
                sp.coords[w][1] - sp.coords[v][1],
            )
            items.append((angle_key(*dxy), dart_at[(v, eid)]))
        items.sort(key=lambda t: t[0])
        rot.append([d for _, d in items])
    pg = PlaneGraph(len(hvert), edges3, rot)
    return ContractedSparsifier(
        sp, pg, hvert, chains, chain_edges, forbidden, designated
    )


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


def vertex_weight(gmap: GridMap, alpha: int, qpt: QPt) -> float:
    """1 plus the total clique weight of the alpha-neighborhood of the cell
    containing the point."""
    cell = gmap.locate_scaled(qpt)
    return 1.0 + sum(
        log2(1 + gmap.count(c2)) for c2 in neighboring_cells(cell, alpha)
    )


def all_h_weights(sp: MapSparsifier, gmap: GridMap, alpha: int) -> List[float]:
    return [vertex_weight(gmap, alpha, p) for p in sp.coords]


def h_weights(h3: ContractedSparsifier, gmap: GridMap, alpha: int) -> List[float]:
    return [vertex_weight(gmap, alpha, h3.sp.coords[v]) for v in h3.hvert]

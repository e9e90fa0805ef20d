"""Surface-cut decomposition: noose hierarchy of the full arrangement H with
per-node vertex assignments and cut sets for the input disk graph.

The contracted host H3 gets a surface decomposition (quad pieces, see
:mod:`diskpack.surface`).  This module lifts that hierarchy back to the full
arrangement H and refines it until every leaf holds exactly one H edge:

* Every contracted edge expands to its chain of H edges; every pendant tree
  rides with the quad of the chain dart angularly preceding its attachment
  gap.  Boundary curves of the lifted pieces pass through H only at core
  vertices, so lifted boundary vertex sets equal the contracted ones.
* Lifted leaves are subdivided further.  A pendant tree is split off first as
  a "tube" piece whose boundary touches H only at the anchor; tubes and the
  remaining chain are then peeled one edge at a time, each cut touching two
  path vertices, so boundary sets stay small (anchor/frontier vertices only).

Every piece produced this way is the union of the leaves below one tree node,
and the leaves are created in depth-first order; pieces are therefore stored
as half-open intervals over a global leaf order of H edges, making membership
tests O(1).

G-vertices are attached to quads deterministically: a G-vertex that is also
an arrangement vertex goes with its minimum incident H edge; any other vertex
is located in its containing H face by an exact ray cast and grouped per
(face, grid cell) onto one boundary edge of that face touching the cell
(grid-side edges preferred, since they carry no G endpoints).  This encodes a
legal drawing choice: within a face, the radial sectors of a quad may bulge
to swallow any finite point set.

Cut sets are computed from per-edge crossing tokens.  A G-edge that is part
of the arrangement (both endpoints of degree <= 2) interacts with a piece
boundary only at arrangement vertices on it; any other G-edge crosses a fixed
sequence of H edges and traverses a fixed sequence of H faces, and is counted
as cut whenever consecutive stations of that sequence are split by the piece,
or a traversed face is not entirely inside it.  The rule over-approximates
(a chord through a mixed face may be avoidable by the drawing) but never
misses a forced crossing; enumeration downstream only shrinks when the rule
is tightened, never breaks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from diskpack.geometry import QF, angle_key, qf_orient
from diskpack.gridmap import (
    GridMap,
    MapConstants,
    build_map,
    cell_distance,
    compute_constants,
)
from diskpack.planegraph import PlaneGraph
from diskpack.sparsifier import (
    EK_GEDGE,
    EK_GRID,
    VK_GVERTEX,
    ContractedSparsifier,
    all_h_weights,
    build_sparsifier,
    connectify,
    contract_to_h3,
    h_weights,
)
from diskpack.surface import SurfaceDecomposition, build_surface_decomposition


class SCDecompositionError(RuntimeError):
    pass


def _qf_between(a, b, p) -> bool:
    """p lies on segment ab, given that p is already on the line through it."""
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


# ---------------------------------------------------------------------------
# Nodes
# ---------------------------------------------------------------------------


@dataclass
class SCNode:
    """One piece of the hierarchy: the H edges at leaf positions [lo, hi)."""

    lo: int
    hi: int
    parent: int
    kind: str
    bd: FrozenSet[int]  # H vertex ids on the piece boundary
    children: List[int] = field(default_factory=list)
    weight: float = 0.0  # sum of boundary vertex weights


@dataclass
class EdgeTokens:
    """Fixed interaction data of one G-edge with the arrangement.

    kind "low": stations = [q(a)] + H pieces of the edge + [q(b)];
    interior = arrangement vertices strictly inside the edge.
    kind "free": stations = [q(a), crossed H edges..., q(b)];
    faces[i] = H face traversed between stations i and i+1.
    """

    kind: str
    stations: List[int]
    faces: List[int] = field(default_factory=list)
    interior: List[int] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Exact point location
# ---------------------------------------------------------------------------


def locate_face(hpg: PlaneGraph, coords, flt, p, direction: int = 1) -> int:
    """H face containing point p, by exact horizontal ray cast.

    The ray is shot in +x (direction=1) or -x (direction=-1) and treated as
    infinitesimally above y = p.y (half-open rule: edges incident to the ray
    count iff their lower endpoint is at or below it and their upper endpoint
    strictly above).  Ties at a vertex on the ray are broken by edge slope,
    which matches the geometry of the shifted ray.  Raises if p lies on the
    arrangement.
    """
    px, py = p
    fpx, fpy = float(px), float(py)
    eps = 1e-7
    best_key = None
    best_dart = -1
    for e, (u, v) in enumerate(hpg.edges):
        uy, vy = flt[u][1], flt[v][1]
        if (uy > fpy + eps and vy > fpy + eps) or (
            uy < fpy - eps and vy < fpy - eps
        ):
            continue
        if direction > 0 and max(flt[u][0], flt[v][0]) < fpx - eps:
            continue
        if direction < 0 and min(flt[u][0], flt[v][0]) > fpx + eps:
            continue
        s1 = (coords[u][1] - py).sign()
        s2 = (coords[v][1] - py).sign()
        if s1 <= 0 < s2:
            dart = 2 * e
            lo_v, hi_v = u, v
        elif s2 <= 0 < s1:
            dart = 2 * e + 1
            lo_v, hi_v = v, u
        else:
            continue
        ax, ay = coords[lo_v]
        bx, by = coords[hi_v]
        dy = by - ay
        t = (py - ay) / dy
        x0 = ax + t * (bx - ax)
        dxs = (x0 - px).sign()
        if dxs == 0:
            raise SCDecompositionError("point lies on the arrangement")
        if direction > 0 and dxs < 0:
            continue
        if direction < 0 and dxs > 0:
            continue
        slope = (bx - ax) / dy
        key = (x0, slope)
        if best_key is None:
            better = True
        elif direction > 0:
            better = key[0] < best_key[0] or (
                key[0] == best_key[0] and key[1] < best_key[1]
            )
        else:
            better = key[0] > best_key[0] or (
                key[0] == best_key[0] and key[1] > best_key[1]
            )
        if better:
            best_key = key
            best_dart = dart
    if best_dart < 0:
        raise SCDecompositionError("ray cast found no arrangement edge")
    # An upward dart has the -x side on its left.
    return hpg.face_of[best_dart if direction > 0 else best_dart ^ 1]


def _gap_face(hpg: PlaneGraph, coords, v: int, target) -> int:
    """Face of the angular gap at arrangement vertex v toward point target."""
    dx = target[0] - coords[v][0]
    dy = target[1] - coords[v][1]
    kb = angle_key(dx, dy)
    ring = hpg.rot[v]
    best = None
    best_key = None
    for d in ring:
        w = hpg.head[d]
        kd = angle_key(coords[w][0] - coords[v][0], coords[w][1] - coords[v][1])
        if kd == kb:
            raise SCDecompositionError(
                "edge direction coincides with an arrangement edge"
            )
        if kd < kb and (best_key is None or kd > best_key):
            best, best_key = d, kd
    if best is None:
        # Direction precedes every dart: the gap wraps around from the last.
        best = max(
            ring,
            key=lambda d: angle_key(
                coords[hpg.head[d]][0] - coords[v][0],
                coords[hpg.head[d]][1] - coords[v][1],
            ),
        )
    return hpg.face_of[best]


# ---------------------------------------------------------------------------
# Vertex assignment
# ---------------------------------------------------------------------------


def _edge_touches_cell(sp, hpg, gmap: GridMap, e: int, cell) -> bool:
    if sp.ekind[e] == EK_GRID:
        axis, i, j = sp.eref[e]
        if axis == "H":
            return cell in ((i, j), (i, j - 1))
        return cell in ((i, j), (i - 1, j))
    ci, cj = cell
    x0, y0 = gmap.cell_corner(ci, cj)
    x1, y1 = x0 + 1, y0 + 1
    u, v = hpg.edges[e]
    a, b = sp.coords[u], sp.coords[v]

    def inside(p):
        return x0 <= p[0] <= x1 and y0 <= p[1] <= y1

    if inside(a) or inside(b):
        return True
    corners = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for i2 in range(4):
        c, d = corners[i2], corners[(i2 + 1) % 4]
        o1 = qf_orient(a, b, c)
        o2 = qf_orient(a, b, d)
        o3 = qf_orient(c, d, a)
        o4 = qf_orient(c, d, b)
        if o1 * o2 <= 0 and o3 * o4 <= 0:
            if o1 == o2 == 0:
                # Collinear: require interval overlap on both axes.
                if max(min(a[0], b[0]), min(c[0], d[0])) <= min(
                    max(a[0], b[0]), max(c[0], d[0])
                ) and max(min(a[1], b[1]), min(c[1], d[1])) <= min(
                    max(a[1], b[1]), max(c[1], d[1])
                ):
                    return True
                continue
            return True
    return False


def _pick_quad(sp, hpg, gmap: GridMap, f: int, cell) -> int:
    """Deterministic quad for the free G-vertices of (face f, cell)."""
    cand = sorted({d >> 1 for d in hpg.faces[f]})
    touching = [e for e in cand if _edge_touches_cell(sp, hpg, gmap, e, cell)]
    pool = touching if touching else cand
    # Prefer edges without G endpoints so leaf vertex sets stay in few cells.
    return min(pool, key=lambda e: (0 if sp.ekind[e] != EK_GEDGE else 1, e))


# ---------------------------------------------------------------------------
# The decomposition object
# ---------------------------------------------------------------------------


class SCDecomposition:
    def __init__(
        self,
        g,
        gmap: GridMap,
        consts: MapConstants,
        sp,
        hpg: PlaneGraph,
        h3: ContractedSparsifier,
        sd3: SurfaceDecomposition,
        cw: List[float],
    ):
        self.g = g
        self.gmap = gmap
        self.consts = consts
        self.sp = sp
        self.hpg = hpg
        self.h3 = h3
        self.sd3 = sd3
        self.cw = cw
        self.nodes: List[SCNode] = []
        self.leaf_order: List[int] = []
        self.pos: List[int] = []
        self.leaf_node: List[int] = []  # leaf position -> node id
        self.fc_assign: List[int] = []  # forbidden curve index -> H3 edge
        self.q: List[int] = []  # G vertex -> quad (H edge id)
        self.free_face: Dict[int, int] = {}  # free G vertex -> H face
        self.tokens: List[EdgeTokens] = []
        self.cut_of: List[List[int]] = []
        self.cells_of: List[Set[Tuple[int, int]]] = []

    # -- piece accessors ----------------------------------------------------

    @property
    def root(self) -> int:
        return 0

    def piece(self, t: int) -> FrozenSet[int]:
        nd = self.nodes[t]
        return frozenset(self.leaf_order[nd.lo : nd.hi])

    def in_piece(self, t: int, e: int) -> bool:
        nd = self.nodes[t]
        return nd.lo <= self.pos[e] < nd.hi

    def leaves(self) -> List[int]:
        return [i for i, nd in enumerate(self.nodes) if not nd.children]

    def depth(self) -> int:
        depth = [0] * len(self.nodes)
        for i, nd in enumerate(self.nodes):
            if i:
                depth[i] = depth[nd.parent] + 1
        return max(depth)

    def vertices_of(self, t: int) -> List[int]:
        nd = self.nodes[t]
        return [
            v
            for v in range(self.g.n)
            if nd.lo <= self.pos[self.q[v]] < nd.hi
        ]

    def cut(self, t: int) -> List[int]:
        return self.cut_of[t]

    def node_width(self, t: int) -> float:
        return sum(self.gmap.clique_weight(c) for c in self.cells_of[t])

    def width(self) -> float:
        return max(
            (self.node_width(t) for t in range(len(self.nodes))), default=0.0
        )

    def noose_width(self) -> float:
        return max(nd.weight for nd in self.nodes)

    # -- construction -------------------------------------------------------

    def _new_node(self, parent: int, kind: str, bd) -> int:
        nid = len(self.nodes)
        self.nodes.append(
            SCNode(
                lo=len(self.leaf_order),
                hi=-1,
                parent=parent,
                kind=kind,
                bd=frozenset(bd),
            )
        )
        if parent >= 0:
            self.nodes[parent].children.append(nid)
        return nid

    def _emit_leaf(self, nid: int, e: int):
        self.leaf_order.append(e)
        self.nodes[nid].hi = len(self.leaf_order)

    def _expand_tree(self, nid: int, fc):
        """Peel a pendant tree one edge at a time, deepest leaves first."""
        anchor = fc.anchor
        edges = sorted(fc.edges)
        if len(edges) == 1:
            self._emit_leaf(nid, edges[0])
            return
        adj: Dict[int, List[Tuple[int, int]]] = {}
        for e in edges:
            u, v = self.hpg.edges[e]
            adj.setdefault(u, []).append((v, e))
            adj.setdefault(v, []).append((u, e))
        depth = {anchor: 0}
        queue = [anchor]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for y, _ in adj.get(x, ()):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    queue.append(y)
        remaining = set(edges)
        deg = {v: len(ns) for v, ns in adj.items()}
        bd = set(self.nodes[nid].bd)
        cur = nid
        while len(remaining) > 1:
            leaf_vs = [v for v, d in deg.items() if d == 1 and v != anchor]
            w = max(leaf_vs, key=lambda v: (depth[v], -v))
            u, e = next(
                (x, e2) for x, e2 in adj[w] if e2 in remaining
            )
            child_a = self._new_node(cur, "tree-peel", {u, w})
            self._emit_leaf(child_a, e)
            remaining.discard(e)
            deg[w] -= 1
            deg[u] -= 1
            bd = {x for x in bd if deg.get(x, 0) > 0}
            bd.add(u)
            child_b = self._new_node(cur, "tree-rest", bd)
            cur = child_b
        e = next(iter(remaining))
        self._emit_leaf(cur, e)

    def _expand_chain(self, nid: int, e3: int):
        ce = self.h3.chain_edges[e3]
        cv = self.h3.chains[e3]
        cur = nid
        for i in range(len(ce) - 1):
            child_a = self._new_node(cur, "chain-peel", {cv[i], cv[i + 1]})
            self._emit_leaf(child_a, ce[i])
            child_b = self._new_node(cur, "chain-rest", {cv[i + 1], cv[-1]})
            cur = child_b
        self._emit_leaf(cur, ce[-1])

    def _expand_block(self, nid: int, e3: int, trees: List):
        """Subdivide a lifted leaf: tube per pendant tree, then the chain."""
        cur = nid
        for fc in trees:
            tube = self._new_node(cur, "tree-tube", {fc.anchor})
            self._expand_tree(tube, fc)
            rest_bd = {self.h3.chains[e3][0], self.h3.chains[e3][-1]}
            rest = self._new_node(cur, "lift-rest", rest_bd)
            cur = rest
        self._expand_chain(cur, e3)

    def _build_tree(self):
        sd3 = self.sd3
        h3 = self.h3
        # Which pendant trees ride with which contracted edge.
        trees_of: Dict[int, List] = {}
        for idx, e3 in enumerate(self.fc_assign):
            trees_of.setdefault(e3, []).append(h3.forbidden[idx])
        for e3 in trees_of:
            trees_of[e3].sort(key=lambda fc: (fc.anchor, min(fc.edges)))

        # Depth-first over the contracted surface tree; explicit stack so
        # chain peeling depth never hits the recursion limit.
        stack: List[Tuple[int, int]] = [(0, -1)]
        while stack:
            i3, parent = stack.pop()
            nd3 = sd3.nodes[i3]
            bd = {h3.hvert[v] for v in nd3.boundary}
            nid = self._new_node(parent, nd3.kind, bd)
            if nd3.children:
                for c in reversed(nd3.children):
                    stack.append((c, nid))
            else:
                (e3,) = nd3.piece
                self._expand_block(nid, e3, trees_of.get(e3, []))
        # Close intervals bottom-up: nodes are created parent-first and
        # children left-to-right, so a parent ends where its last child does.
        for i in reversed(range(len(self.nodes))):
            nd = self.nodes[i]
            if nd.children:
                nd.hi = self.nodes[nd.children[-1]].hi

        self.pos = [0] * len(self.hpg.edges)
        for p, e in enumerate(self.leaf_order):
            self.pos[e] = p
        self.leaf_node = [0] * len(self.leaf_order)
        for i, nd in enumerate(self.nodes):
            if not nd.children:
                if nd.hi != nd.lo + 1:
                    raise SCDecompositionError("leaf spans several edges")
                self.leaf_node[nd.lo] = i
        for nd in self.nodes:
            nd.weight = sum(self.cw[v] for v in nd.bd)

    # -- G vertex assignment -------------------------------------------------

    def _assign_vertices(self):
        g, sp, hpg, gmap = self.g, self.sp, self.hpg, self.gmap
        hv_of_g: Dict[int, Optional[int]] = {}
        for hv in range(sp.n):
            if sp.vkind[hv] == VK_GVERTEX:
                hv_of_g[sp.vref[hv]] = hv
        self.hv_of_g = hv_of_g
        flt = [(float(p[0]), float(p[1])) for p in sp.coords]
        self._flt = flt
        choice: Dict[Tuple[int, Tuple[int, int]], int] = {}
        self.q = [0] * g.n
        for v in range(g.n):
            if g.degree(v) == 0:
                raise SCDecompositionError(
                    f"vertex {v} is isolated; remove degree-0 vertices first"
                )
            hv = hv_of_g.get(v)
            if hv is not None:
                self.q[v] = min(d >> 1 for d in hpg.rot[hv])
                continue
            p = gmap.scaled[v]
            f = locate_face(hpg, sp.coords, flt, p)
            self.free_face[v] = f
            key = (f, gmap.cell_of[v])
            if key not in choice:
                choice[key] = _pick_quad(sp, hpg, gmap, f, gmap.cell_of[v])
            self.q[v] = choice[key]

    # -- edge tokens ---------------------------------------------------------

    def _build_tokens(self):
        g, sp, hpg = self.g, self.sp, self.hpg
        low_pieces: Dict[Tuple[int, int], List[int]] = {}
        for e in range(sp.m):
            if sp.ekind[e] == EK_GEDGE:
                low_pieces.setdefault(tuple(sp.eref[e]), []).append(e)
        # Float boxes of H edges for the crossing prefilter.
        flt = self._flt
        hx0 = np.array([min(flt[u][0], flt[v][0]) for u, v in hpg.edges])
        hx1 = np.array([max(flt[u][0], flt[v][0]) for u, v in hpg.edges])
        hy0 = np.array([min(flt[u][1], flt[v][1]) for u, v in hpg.edges])
        hy1 = np.array([max(flt[u][1], flt[v][1]) for u, v in hpg.edges])
        eps = 1e-9
        self.tokens = []
        for a, b in g.edges:
            ge = (a, b)
            if ge in low_pieces:
                pieces = low_pieces[ge]
                ends = {self.hv_of_g[a], self.hv_of_g[b]}
                interior = sorted(
                    {
                        w
                        for e in pieces
                        for w in hpg.edges[e]
                        if w not in ends
                    }
                )
                stations = [self.q[a]] + sorted(pieces) + [self.q[b]]
                self.tokens.append(
                    EdgeTokens("low", stations, interior=interior)
                )
                continue
            self.tokens.append(self._free_tokens(a, b, hx0, hx1, hy0, hy1, eps))

    def _free_tokens(self, a, b, hx0, hx1, hy0, hy1, eps) -> EdgeTokens:
        sp, hpg, gmap = self.sp, self.hpg, self.gmap
        coords = sp.coords
        pa, pb = gmap.scaled[a], gmap.scaled[b]
        fa = (float(pa[0]), float(pa[1]))
        fb = (float(pb[0]), float(pb[1]))
        ha = self.hv_of_g.get(a)
        hb = self.hv_of_g.get(b)
        skip = {
            d >> 1
            for hv in (ha, hb)
            if hv is not None
            for d in hpg.rot[hv]
        }
        cand = np.nonzero(
            (hx0 <= max(fa[0], fb[0]) + eps)
            & (hx1 >= min(fa[0], fb[0]) - eps)
            & (hy0 <= max(fa[1], fb[1]) + eps)
            & (hy1 >= min(fa[1], fb[1]) - eps)
        )[0]
        hits: List[Tuple[QF, int, int]] = []  # (t, H edge, sign of a side)
        for e in map(int, cand):
            if e in skip:
                continue
            cu, cv = hpg.edges[e]
            C, D = coords[cu], coords[cv]
            o1 = qf_orient(pa, pb, C)
            o2 = qf_orient(pa, pb, D)
            o3 = qf_orient(C, D, pa)
            o4 = qf_orient(C, D, pb)
            if o1 * o2 < 0 and o3 * o4 < 0:
                # Exact crossing parameter along ab from the signed areas.
                a1 = (D[0] - C[0]) * (pa[1] - C[1]) - (D[1] - C[1]) * (
                    pa[0] - C[0]
                )
                a2 = (D[0] - C[0]) * (pb[1] - C[1]) - (D[1] - C[1]) * (
                    pb[0] - C[0]
                )
                t = a1 / (a1 - a2)
                hits.append((t, e, o3))
            elif (
                (o1 == 0 and _qf_between(pa, pb, C))
                or (o2 == 0 and _qf_between(pa, pb, D))
                or (o3 == 0 and _qf_between(C, D, pa))
                or (o4 == 0 and _qf_between(C, D, pb))
            ):
                raise SCDecompositionError(
                    f"degenerate contact between G edge ({a},{b}) "
                    f"and arrangement edge {e}"
                )
        hits.sort(key=lambda h: h[0])

        if ha is not None:
            f_prev = _gap_face(hpg, coords, ha, pb)
        else:
            f_prev = self.free_face[a]
        stations = [self.q[a]]
        faces = []
        for _, e, o3 in hits:
            near = 2 * e if o3 > 0 else 2 * e + 1
            if hpg.face_of[near] != f_prev:
                raise SCDecompositionError(
                    f"face sequence broken at G edge ({a},{b}), H edge {e}"
                )
            faces.append(f_prev)
            stations.append(e)
            f_prev = hpg.face_of[near ^ 1]
        if hb is not None:
            f_end = _gap_face(hpg, coords, hb, pa)
        else:
            f_end = self.free_face[b]
        if f_prev != f_end:
            raise SCDecompositionError(
                f"face sequence of G edge ({a},{b}) does not reach {b}"
            )
        faces.append(f_prev)
        stations.append(self.q[b])
        return EdgeTokens("free", stations, faces=faces)

    # -- cut sets ------------------------------------------------------------

    def _fires(self, t: int, tok: EdgeTokens) -> bool:
        nd = self.nodes[t]
        lo, hi = nd.lo, nd.hi
        pos = self.pos
        mem = [lo <= pos[e] < hi for e in tok.stations]
        if any(m != mem[0] for m in mem):
            return True
        if tok.kind == "low":
            return any(v in nd.bd for v in tok.interior)
        for i, f in enumerate(tok.faces):
            if mem[i] or mem[i + 1]:
                if not (lo <= self._fmin[f] and self._fmax[f] < hi):
                    return True
        return False

    def _compute_cuts(self):
        hpg = self.hpg
        nfaces = len(hpg.faces)
        self._fmin = [0] * nfaces
        self._fmax = [0] * nfaces
        for f in range(nfaces):
            ps = [self.pos[d >> 1] for d in hpg.faces[f]]
            self._fmin[f] = min(ps)
            self._fmax[f] = max(ps)
        self.cut_of = [[] for _ in self.nodes]
        self.cells_of = [set() for _ in self.nodes]
        gmap = self.gmap
        for idx, (a, b) in enumerate(self.g.edges):
            tok = self.tokens[idx]
            path: List[int] = []
            seen = set()
            for v in (a, b):
                t = self.leaf_node[self.pos[self.q[v]]]
                while t >= 0 and t not in seen:
                    seen.add(t)
                    path.append(t)
                    t = self.nodes[t].parent
            for t in path:
                if self._fires(t, tok):
                    self.cut_of[t].append(idx)
                    self.cells_of[t].add(gmap.cell_of[a])
                    self.cells_of[t].add(gmap.cell_of[b])

    # -- invariants ----------------------------------------------------------

    def check(self, c3_limit: int = 2, c4_limit: int = 8) -> dict:
        """Structural checks plus the four cell-interaction properties.

        C1: every G-vertex is assigned strictly inside one leaf quad.
        C2: the leaf intervals partition both H edges and G vertices.
        C3: each leaf's G-vertices lie in at most c3_limit grid cells.
        C4: each grid cell's G-vertices spread over at most c4_limit leaves.
        """
        nodes = self.nodes
        assert nodes[0].lo == 0 and nodes[0].hi == len(self.leaf_order)
        assert sorted(self.leaf_order) == list(range(len(self.hpg.edges)))
        for i, nd in enumerate(nodes):
            if nd.children:
                assert len(nd.children) == 2, (i, nd.children)
                c0, c1 = (nodes[c] for c in nd.children)
                assert c0.lo == nd.lo and c0.hi == c1.lo and c1.hi == nd.hi
                assert all(nodes[c].parent == i for c in nd.children)
            else:
                assert nd.hi == nd.lo + 1
        # C1 / C2: total assignment; free vertices strictly inside a face.
        assert len(self.q) == self.g.n
        for v, f in self.free_face.items():
            assert self.q[v] in {d >> 1 for d in self.hpg.faces[f]}
        # C3.
        leaf_cells: Dict[int, Set] = {}
        for v in range(self.g.n):
            ln = self.leaf_node[self.pos[self.q[v]]]
            leaf_cells.setdefault(ln, set()).add(self.gmap.cell_of[v])
        c3 = max((len(s) for s in leaf_cells.values()), default=0)
        assert c3 <= c3_limit, f"leaf vertex set spans {c3} cells"
        # C4.
        cell_leaves: Dict[Tuple[int, int], Set[int]] = {}
        for v in range(self.g.n):
            ln = self.leaf_node[self.pos[self.q[v]]]
            cell_leaves.setdefault(self.gmap.cell_of[v], set()).add(ln)
        c4 = max((len(s) for s in cell_leaves.values()), default=0)
        assert c4 <= c4_limit, f"cell vertices spread over {c4} leaves"
        # Pendant trees were attached at a chain through their anchor.
        for idx, e3 in enumerate(self.fc_assign):
            assert self.h3.forbidden[idx].anchor in self.h3.chains[e3]
        return {"c3": c3, "c4": c4, "nodes": len(nodes), "depth": self.depth()}

    def check_cut_locality(self) -> int:
        """Every cut edge has both endpoint cells within the map constant of
        some boundary vertex of the node.  Returns the number of node/edge
        pairs checked; raises AssertionError on a violation."""
        alpha = self.consts.alpha
        gmap = self.gmap
        checked = 0
        for t, cut in enumerate(self.cut_of):
            if not cut:
                continue
            bd_cells = [
                gmap.locate_scaled(self.sp.coords[v]) for v in self.nodes[t].bd
            ]
            assert bd_cells, f"node {t} has cut edges but empty boundary"
            for idx in cut:
                a, b = self.g.edges[idx]
                ca, cb = gmap.cell_of[a], gmap.cell_of[b]
                ok = any(
                    cell_distance(ca, cv) <= alpha
                    and cell_distance(cb, cv) <= alpha
                    for cv in bd_cells
                )
                assert ok, (
                    f"cut edge {(a, b)} of node {t} is not local to its "
                    f"boundary"
                )
                checked += 1
        return checked

    # -- export --------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "leaf_order": self.leaf_order,
                "nodes": [
                    {
                        "lo": nd.lo,
                        "hi": nd.hi,
                        "parent": nd.parent,
                        "kind": nd.kind,
                        "boundary": sorted(nd.bd),
                        "weight": nd.weight,
                        "cut": self.cut_of[t],
                        "width": self.node_width(t),
                    }
                    for t, nd in enumerate(self.nodes)
                ],
                "assignment": list(self.q),
                "width": self.width(),
                "noose_width": self.noose_width(),
            }
        )


# ---------------------------------------------------------------------------
# Pendant tree attachment
# ---------------------------------------------------------------------------


def assign_forbidden(h3: ContractedSparsifier, hpg: PlaneGraph) -> List[int]:
    """Contracted edge carrying each pendant tree: the chain whose dart at
    the anchor angularly precedes the tree's attachment gap."""
    chain_of_edge: Dict[int, int] = {}
    for e3, eids in enumerate(h3.chain_edges):
        for e in eids:
            chain_of_edge[e] = e3
    out: List[int] = []
    for fc in h3.forbidden:
        a = fc.anchor
        tree_edges = set(fc.edges)
        ring = hpg.rot[a]
        idx = next(
            (i for i, d in enumerate(ring) if (d >> 1) in tree_edges), None
        )
        if idx is None:
            raise SCDecompositionError(
                f"pendant tree anchored at {a} has no dart there"
            )
        e3 = None
        for step in range(1, len(ring) + 1):
            d = ring[(idx - step) % len(ring)]
            e = d >> 1
            if e in chain_of_edge:
                e3 = chain_of_edge[e]
                break
        if e3 is None:
            raise SCDecompositionError(
                f"pendant tree anchor {a} touches no contracted chain"
            )
        out.append(e3)
    return out


# ---------------------------------------------------------------------------
# Builder
# ---------------------------------------------------------------------------


def build_sc_decomposition(
    g,
    *,
    salt: int = 0,
    base_threshold: int = 16,
    rank_threshold: int = 100,
    gmap: Optional[GridMap] = None,
) -> SCDecomposition:
    """Full pipeline: grid map, arrangement, contraction, surface
    decomposition of the contracted host, lift and refinement."""
    if gmap is None:
        gmap = build_map(g, salt)
    consts = compute_constants(gmap)
    sp = connectify(build_sparsifier(g, gmap, consts))
    h3 = contract_to_h3(sp)
    c3 = h_weights(h3, gmap, consts.alpha)
    sd3 = build_surface_decomposition(
        h3.pg, c3, base_threshold=base_threshold, rank_threshold=rank_threshold
    )
    hpg = sp.plane()
    cw = all_h_weights(sp, gmap, consts.alpha)
    sc = SCDecomposition(g, gmap, consts, sp, hpg, h3, sd3, cw)
    sc.fc_assign = assign_forbidden(h3, hpg)
    sc._build_tree()
    sc._assign_vertices()
    sc._build_tokens()
    sc._compute_cuts()
    return sc

"""Balanced, small-weight cycle separators for weighted plane triangulations.

Input: a triangulated `PlaneGraph` (every face a triangle, including the
outer one, i.e. a sphere triangulation) with two nonnegative vertex weight
vectors: `c` (cost: the returned separator cycle should be cheap under c)
and `b` (balance: removing the cycle must leave every component with at
most 8/9 of the total b-weight).

The guarantee: the returned separator is a simple cycle of c-weight at most
10 * sqrt(sum c(v)^2) whose removal leaves components of b-weight at most
(8/9) * b(total).

The construction:
  1. If one vertex carries >= 1/9 of the b-weight, any face triangle at it
     works.
  2. Otherwise search for a fundamental cycle of a min-cost-path tree (the
     "level tree") that is 2/3-balanced; if it is also cheap, done.
  3. Otherwise sweep level sets of the tree: the boundary of the component
     (around the high endpoint u) of the complement of the union of
     low-level faces is a simple cycle for each level; picking one cheap
     cycle per spaced level interval yields a sequence of vertex-disjoint
     cycles of tiny total cost.  Either one of them is balanced, or two
     consecutive ones sandwich the balance midpoint and a boundary of a
     region between them (split by the fundamental cycle) is balanced and
     cheap.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from diskpack.planegraph import PlaneGraph


class SeparatorError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Level tree
# ---------------------------------------------------------------------------


@dataclass
class LevelTree:
    root: int
    lv: List[float]
    parent: List[int]
    parent_dart: List[int]
    depth: List[int]
    tree_edges: Set[int]


def build_level_tree(h: PlaneGraph, c: Sequence[float], root: int) -> LevelTree:
    """Min-cost path tree where a path's cost is the sum of vertex costs
    including both endpoints; lv(v) is the cost of the cheapest root-v path."""
    n = h.n
    lv = [math.inf] * n
    parent = [-1] * n
    parent_dart = [-1] * n
    depth = [0] * n
    lv[root] = c[root]
    pq = [(lv[root], root)]
    done = [False] * n
    while pq:
        dist, v = heapq.heappop(pq)
        if done[v]:
            continue
        done[v] = True
        for d in h.rot[v]:
            w = h.head[d]
            nd = dist + c[w]
            if nd < lv[w]:
                lv[w] = nd
                parent[w] = v
                parent_dart[w] = d
                depth[w] = depth[v] + 1
                heapq.heappush(pq, (nd, w))
    if any(not done[v] for v in range(n)):
        raise SeparatorError("graph is not connected")
    tree_edges = {parent_dart[v] // 2 for v in range(n) if v != root}
    return LevelTree(root, lv, parent, parent_dart, depth, tree_edges)


# ---------------------------------------------------------------------------
# Fundamental cycle separator
# ---------------------------------------------------------------------------


@dataclass
class FundamentalCycle:
    tree: LevelTree
    u: int
    v: int
    edge: int
    lca: int
    vertices: List[int]
    edge_ids: List[int]


def _cycle_of_nontree_edge(h: PlaneGraph, lt: LevelTree, eid: int) -> FundamentalCycle:
    a, b = h.edges[eid]
    pa, pb = [a], [b]
    x, y = a, b
    while lt.depth[x] > lt.depth[y]:
        x = lt.parent[x]
        pa.append(x)
    while lt.depth[y] > lt.depth[x]:
        y = lt.parent[y]
        pb.append(y)
    while x != y:
        x = lt.parent[x]
        y = lt.parent[y]
        pa.append(x)
        pb.append(y)
    # pa: a..lca, pb: b..lca
    vertices = pa + list(reversed(pb[:-1]))
    edge_ids = [eid]
    for path in (pa, pb):
        for w in path[:-1]:
            edge_ids.append(lt.parent_dart[w] // 2)
    return FundamentalCycle(lt, a, b, eid, x, vertices, edge_ids)


def _component_weights(h: PlaneGraph, b: Sequence[float], removed: Set[int]) -> List[float]:
    seen = [False] * h.n
    out = []
    for s in range(h.n):
        if seen[s] or s in removed:
            continue
        total = 0.0
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            total += b[v]
            for d in h.rot[v]:
                w = h.head[d]
                if not seen[w] and w not in removed:
                    seen[w] = True
                    stack.append(w)
        out.append(total)
    return out


def _nontree_edge_order(h: PlaneGraph, lt: LevelTree, b: Sequence[float]) -> List[int]:
    """Order non-tree edges by how balanced their fundamental cycle looks.

    The non-tree edges form a spanning tree of the dual (faces); removing
    one splits the faces exactly into the inside/outside of its fundamental
    cycle.  Vertex b-weight assigned to an arbitrary incident face gives a
    subtree-sum estimate of the split, off by at most the cycle's own
    weight; candidates are then verified exactly in this order."""
    nf = len(h.faces)
    total = float(sum(b))
    fw = [0.0] * nf
    for v in range(h.n):
        if h.rot[v]:
            fw[h.face_of[h.rot[v][0]]] += b[v]
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(nf)]
    nontree = [i for i in range(len(h.edges)) if i not in lt.tree_edges]
    for eid in nontree:
        f1, f2 = h.face_of[2 * eid], h.face_of[2 * eid + 1]
        adj[f1].append((f2, eid))
        adj[f2].append((f1, eid))
    # Rooted subtree sums over the dual tree.
    parent_edge = [-1] * nf
    order = []
    seen = [False] * nf
    seen[0] = True
    stack = [0]
    while stack:
        f = stack.pop()
        order.append(f)
        for g, eid in adj[f]:
            if not seen[g]:
                seen[g] = True
                parent_edge[g] = eid
                stack.append(g)
    sub = fw[:]
    parent_face = {}
    for f in order:
        for g, eid in adj[f]:
            if parent_edge[g] == eid and g != 0:
                parent_face[g] = f
    for f in reversed(order):
        if f != 0 and f in parent_face:
            sub[parent_face[f]] += sub[f]
    score: Dict[int, float] = {}
    for f in range(nf):
        eid = parent_edge[f]
        if eid >= 0:
            score[eid] = abs(sub[f] - total / 2.0)
    return sorted(nontree, key=lambda e: (score.get(e, total), e))


def fundamental_cycle_separator(
    h: PlaneGraph,
    c: Sequence[float],
    b: Sequence[float],
    root: int = 0,
    prefer: str = "first",
) -> FundamentalCycle:
    """A fundamental cycle of the level tree leaving every component of the
    complement with at most 2/3 of the b-weight.

    prefer="first" takes the first balanced candidate in a balance-guided
    order; prefer="deep" scans candidates whose fundamental cycle spans the
    widest level range (top level minus meeting-point level) first, which
    favours cycles reaching far from the root."""
    lt = build_level_tree(h, c, root)
    total = float(sum(b))
    order = _nontree_edge_order(h, lt, b)
    if prefer == "deep":
        def span(eid):
            fc = _cycle_of_nontree_edge(h, lt, eid)
            return max(lt.lv[fc.u], lt.lv[fc.v]) - lt.lv[fc.lca]

        order.sort(key=lambda e: -span(e))
    for eid in order:
        fc = _cycle_of_nontree_edge(h, lt, eid)
        comps = _component_weights(h, b, set(fc.vertices))
        if all(3 * w <= 2 * total + 1e-9 for w in comps):
            return fc
    raise SeparatorError("no balanced fundamental cycle found")


# ---------------------------------------------------------------------------
# Face-set boundaries and regions
# ---------------------------------------------------------------------------


def trace_face_set_boundary(h: PlaneGraph, faces_in: Set[int]) -> List[List[int]]:
    """Closed dart walks bounding a set of faces, each keeping the set on its
    left.  Successor of boundary dart d at v=head(d): sweep clockwise from
    fnext(d) while the face on the right stays inside the set."""
    boundary = {
        d
        for f in faces_in
        for d in h.faces[f]
        if h.face_of[d ^ 1] not in faces_in
    }
    walks = []
    unused = set(boundary)
    while unused:
        d0 = min(unused)
        walk = [d0]
        unused.discard(d0)
        d = d0
        while True:
            e = h.fnext(d)
            while h.face_of[e ^ 1] in faces_in:
                e = h.rot_prev[e]
            assert e in boundary
            if e == d0:
                break
            walk.append(e)
            unused.discard(e)
            d = e
        walks.append(walk)
    return walks


def region_faces(h: PlaneGraph, cycle_edges: Set[int], start_face: int) -> Set[int]:
    """Faces reachable from start_face without crossing the given edges."""
    seen = {start_face}
    stack = [start_face]
    while stack:
        f = stack.pop()
        for d in h.faces[f]:
            if (d >> 1) in cycle_edges:
                continue
            g = h.face_of[d ^ 1]
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def _verts_of_faces(h: PlaneGraph, faces: Set[int]) -> Set[int]:
    return {h.tail[d] for f in faces for d in h.faces[f]}


def _walk_vertices(h: PlaneGraph, walk: List[int]) -> List[int]:
    return [h.tail[d] for d in walk]


# ---------------------------------------------------------------------------
# Level-set cycle sweep
# ---------------------------------------------------------------------------


class CycleSweep:
    """For a level ell, the union of closed faces of level < ell is a
    "low" region; the boundary of the component of its complement containing
    the high endpoint u is a simple cycle separating u from the root side."""

    def __init__(self, h: PlaneGraph, c, lt: LevelTree, u: int, r: int):
        self.h = h
        self.c = c
        self.lt = lt
        self.u = u
        self.r = r
        self.face_lv = [
            min(lt.lv[h.tail[d]] for d in walk) for walk in h.faces
        ]
        self.u_face = h.face_of[h.rot[u][0]]

    def face_levels(self) -> List[float]:
        return sorted(set(self.face_lv))

    def evaluate(self, ell: float) -> Optional[dict]:
        h = self.h
        if self.face_lv[self.u_face] < ell:
            return None
        X = {self.u_face}
        stack = [self.u_face]
        while stack:
            f = stack.pop()
            for d in h.faces[f]:
                g = h.face_of[d ^ 1]
                if g not in X and self.face_lv[g] >= ell:
                    X.add(g)
                    stack.append(g)
        # The root must be strictly inside the low region: otherwise this
        # level does not separate u from r and is skipped.
        xverts = _verts_of_faces(h, X)
        if self.r in xverts:
            return None
        walks = trace_face_set_boundary(h, X)
        if len(walks) != 1:
            return None
        verts = _walk_vertices(h, walks[0])
        if len(set(verts)) != len(verts):
            return None
        weight = float(sum(self.c[v] for v in verts))
        return {
            "ell": ell,
            "faces": X,
            "darts": walks[0],
            "vertices": verts,
            "weight": weight,
        }


# ---------------------------------------------------------------------------
# Main entry point
# ---------------------------------------------------------------------------


@dataclass
class SeparatorResult:
    vertices: List[int]
    kind: str
    weight: float
    max_component_fraction: float
    diagnostics: dict = field(default_factory=dict)
    sequence: Optional[dict] = None


def _audit_cycle(h: PlaneGraph, c, b, verts: List[int], total: float):
    """(is_simple_cycle, weight, max component b-fraction)."""
    k = len(verts)
    if k < 2 or len(set(verts)) != k:
        return False, 0.0, 1.0
    if k == 2:
        # Needs two parallel edges between the pair to bound a disk.
        pair = 0
        for d in h.rot[verts[0]]:
            if h.head[d] == verts[1]:
                pair += 1
        if pair < 2:
            return False, 0.0, 1.0
    else:
        for i in range(k):
            a, bb = verts[i], verts[(i + 1) % k]
            if all(h.head[d] != bb for d in h.rot[a]):
                return False, 0.0, 1.0
    weight = float(sum(c[v] for v in verts))
    comps = _component_weights(h, b, set(verts))
    frac = max(comps, default=0.0) / total if total > 0 else 0.0
    return True, weight, frac


def balanced_small_separator(
    h: PlaneGraph,
    c: Sequence[float],
    b: Sequence[float],
    root: int = 0,
    sequence_threshold: float = 8.0,
    prefer: str = "first",
) -> SeparatorResult:
    """Simple cycle of c-weight <= 10*sqrt(sum c^2) whose removal leaves
    every component with at most 8/9 of the b-weight.

    The level-set cycle sequence is built only when the balanced fundamental
    cycle weighs more than sequence_threshold * sqrt(sum c^2); lowering the
    threshold forces the sequence machinery (used by its dedicated checks).
    """
    if not h.is_triangulated():
        raise SeparatorError("input must be a triangulated plane graph")
    n = h.n
    total = float(sum(b))
    cstar = math.sqrt(float(sum(cv * cv for cv in c)))
    diagnostics: dict = {"cstar": cstar, "total_b": total}

    def finish(verts, kind, sequence=None):
        ok, weight, frac = _audit_cycle(h, c, b, verts, total)
        if not ok:
            raise SeparatorError(f"{kind} separator is not a simple cycle")
        if total > 0 and frac > 8.0 / 9.0 + 1e-9:
            raise SeparatorError(f"{kind} separator unbalanced ({frac})")
        if weight > 10.0 * cstar + 1e-9:
            raise SeparatorError(f"{kind} separator too heavy ({weight})")
        return SeparatorResult(verts, kind, weight, frac, diagnostics, sequence)

    # 1. Heavy vertex: any incident face triangle.
    if total > 0:
        w = max(range(n), key=lambda v: (b[v], -v))
        if 9 * b[w] >= total:
            f = h.face_of[h.rot[w][0]]
            verts = h.face_vertices(f)
            if len(set(verts)) == len(verts):
                diagnostics["heavy_vertex"] = w
                return finish(verts, "face-triangle")

    # 2. Balanced fundamental cycle of the level tree.
    fc = fundamental_cycle_separator(h, c, b, root=root, prefer=prefer)
    s_weight = float(sum(c[v] for v in fc.vertices))
    diagnostics["fundamental_weight"] = s_weight
    if s_weight <= sequence_threshold * cstar:
        return finish(fc.vertices, "fundamental")

    # 3. Level-set cycle sequence.
    lt = fc.tree
    u, v = (fc.u, fc.v) if lt.lv[fc.u] >= lt.lv[fc.v] else (fc.v, fc.u)
    x = fc.lca
    lmin, lmax = lt.lv[x], lt.lv[u]
    t = math.floor((lmax - lmin) / cstar - 1.0)
    diagnostics["t"] = t
    if t < 3:
        # Too shallow for the sweep; the fundamental cycle is then already
        # within the 10*cstar budget (its weight is at most 2(lmax-lmin)+cstar).
        diagnostics["shallow"] = True
        return finish(fc.vertices, "fundamental")

    sweep = CycleSweep(h, c, lt, u, root)
    levels = sweep.face_levels()
    # Best (cheapest) valid level cycle per length-cstar interval.  The odd
    # intervals j <= t-2 give the pairwise-disjoint sequence whose total
    # weight is at most cstar; the sandwich below uses the cycles of *all*
    # intervals so that consecutive chain entries (sentinels included) are
    # close in level, which keeps the cross-region pieces of the fundamental
    # cycle cheap.
    seq = []
    chain_cycles = []
    for j in range(1, t + 1):
        lo = lmin + (j - 1) * cstar
        hi = lo + cstar
        cands = sorted({lo, hi} | {fl for fl in levels if lo < fl <= hi})
        best = None
        for ell in cands:
            res = sweep.evaluate(ell)
            if res is not None and (best is None or res["weight"] < best["weight"]):
                best = res
        if j % 2 == 1 and j <= t - 2:
            if best is None:
                raise SeparatorError(f"no valid level cycle in interval {j}")
            seq.append(best)
        if best is not None:
            chain_cycles.append(best)

    seq_verts = [set(e["vertices"]) for e in seq]
    sequence = {
        "cstar": cstar,
        "cycles": [e["vertices"] for e in seq],
        "levels": [e["ell"] for e in seq],
        "weights": [e["weight"] for e in seq],
        "total_weight": float(sum(e["weight"] for e in seq)),
        "pairwise_disjoint": all(
            not (seq_verts[i] & seq_verts[j])
            for i in range(len(seq))
            for j in range(i + 1, len(seq))
        ),
    }
    diagnostics["sequence_size"] = len(seq)

    r_face = h.face_of[h.rot[root][0]]

    # Side of each cycle containing the root; regions nest along the sweep.
    entries = []
    for e in chain_cycles:
        cedges = {d >> 1 for d in e["darts"]}
        fr = region_faces(h, cedges, r_face)
        assert sweep.u_face not in fr
        cverts = set(e["vertices"])
        br = float(
            sum(b[w] for w in _verts_of_faces(h, fr) if w not in cverts)
        )
        bc = float(sum(b[w] for w in cverts))
        entries.append(
            {"verts": e["vertices"], "faces_r": fr, "br": br, "bc": bc}
        )
        other = total - br - bc
        if 3 * br <= 2 * total + 1e-9 and 3 * other <= 2 * total + 1e-9:
            return finish(e["vertices"], "sequence-cycle", sequence)

    # Sandwich: consecutive entries (with sentinels) around the 2/3 point.
    front = {"verts": [], "faces_r": set(), "br": 0.0, "bc": 0.0}
    back = {
        "verts": [u],
        "faces_r": set(range(len(h.faces))),
        "br": total - float(b[u]),
        "bc": float(b[u]),
    }
    chain = [front] + entries + [back]
    idx = next(i for i, e in enumerate(chain) if 3 * e["br"] > 2 * total)
    C1, C2 = chain[idx - 1], chain[idx]
    assert 3 * C1["br"] < total + 1e-9

    R_faces = C2["faces_r"] - C1["faces_r"]
    c2_verts = set(C2["verts"])

    # Split by the fundamental cycle S.
    s_edges = set(fc.edge_ids)
    side0 = region_faces(h, s_edges, h.face_of[2 * fc.edge])
    R1 = {f for f in R_faces if f in side0}
    R2 = R_faces - R1

    pi = [w for w in fc.vertices if w not in c2_verts and any(
        h.face_of[d] in R_faces for d in h.rot[w]
    )]
    b_pi = float(sum(b[w] for w in pi))
    diagnostics["b_pi"] = b_pi

    def make_candidate(faces):
        if not faces:
            return None
        walks = trace_face_set_boundary(h, faces)
        if len(walks) != 1:
            return None
        verts = _walk_vertices(h, walks[0])
        if len(set(verts)) != len(verts):
            return None
        interior = float(
            sum(b[w] for w in _verts_of_faces(h, faces) if w not in set(verts))
        )
        return {"verts": verts, "interior_b": interior}

    cand = {
        1: make_candidate(R1),
        2: make_candidate(R2),
        3: make_candidate(R1 | C1["faces_r"]),
        4: make_candidate(R2 | C1["faces_r"]),
    }
    bR1 = cand[1]["interior_b"] if cand[1] else 0.0
    bR2 = cand[2]["interior_b"] if cand[2] else 0.0
    diagnostics["bR1"], diagnostics["bR2"] = bR1, bR2

    if 3 * bR1 >= total:
        order, case = [1, 2, 3, 4], "region-third"
    elif 3 * bR2 >= total:
        order, case = [2, 1, 4, 3], "region-third"
    elif 9 * b_pi >= total:
        order, case = [1, 2, 3, 4], "path-heavy"
    elif bR1 >= bR2:
        order, case = [3, 4, 1, 2], "region-ninth"
    else:
        order, case = [4, 3, 2, 1], "region-ninth"
    diagnostics["case"] = case

    for i in order:
        if cand[i] is None:
            continue
        verts = cand[i]["verts"]
        ok, weight, frac = _audit_cycle(h, c, b, verts, total)
        if ok and frac <= 8.0 / 9.0 + 1e-9 and weight <= 10.0 * cstar + 1e-9:
            diagnostics["region_index"] = i
            if i != order[0]:
                diagnostics["fallback"] = True
            return finish(verts, "region-boundary", sequence)
    raise SeparatorError("no region boundary met the separator guarantees")

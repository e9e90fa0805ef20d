"""Solution structure: cleaning, dense-case cycle extraction, packedness cap.

A unit disk graph whose straight-line drawing has the triangle-at-every-
crossing property becomes sparse after *cleaning* (recursively deleting
vertices of degree at most one, which destroys no cycle).  If the cleaned
graph still has many vertices of degree at least three, the instance is
dense enough that k vertex-disjoint cycles can be produced directly:

1. while the drawing has a crossing, the crossing's endpoints contain a
   triangle; remove its three vertices and repeat (each round yields one
   cycle);
2. once the residual drawing is crossing-free it is a plane graph; after
   pruning degree-<=1 vertices, properly 5-colour its face-adjacency (dual)
   graph, take the largest colour class, and read vertex-disjoint cycles
   off those face boundaries.

Faces in one colour class share no edge, but they may still share vertices
(around a high-degree vertex two non-consecutive faces touch only there),
so step 2 filters the class greedily for vertex-disjointness; the threshold
constant is conservative enough to absorb the loss.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

from diskpack.gridmap import MapConstants
from diskpack.planegraph import PlaneGraph
from diskpack.udg import UnitDiskGraph, find_crossings


class StructureError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Cleaning
# ---------------------------------------------------------------------------


@dataclass
class CleanResult:
    graph: UnitDiskGraph
    kept: List[int]  # new vertex id -> original vertex id
    removed: List[int]  # original ids, in removal order

    def to_original(self, cycles: Sequence[Sequence[int]]) -> List[List[int]]:
        return [[self.kept[v] for v in cyc] for cyc in cycles]


def clean(g: UnitDiskGraph) -> CleanResult:
    """Recursively delete vertices of degree at most one.

    No cycle passes through a deleted vertex, so the cycle structure (and in
    particular the maximum number of vertex-disjoint cycles) is unchanged.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] <= 1)
    removed: List[int] = []
    while queue:
        v = queue.popleft()
        if not alive[v] or deg[v] > 1:
            continue
        alive[v] = False
        removed.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    kept = [v for v in range(g.n) if alive[v]]
    return CleanResult(graph=g.induced(kept), kept=kept, removed=removed)


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------


def packedness_constant(consts: MapConstants) -> int:
    """Per-cell cap on vertices of cell-straddling solution cycles: if more
    than 3*beta^2 such vertices met one cell, three with neighbour cells in
    common could be rerouted into triangles, contradicting minimality."""
    return 3 * consts.beta * consts.beta


def dense_threshold_constant(consts: MapConstants) -> int:
    """Conservative multiplier c: more than c*k vertices of degree >= 3
    after cleaning forces a yes-instance.  Accounting: <= 3k vertices fall
    to triangle harvesting, each removed vertex has <= 4*beta planar
    neighbours, the pruning forest loses O(k) branch vertices, and Euler
    counting caps the pruned plane residual at 10k."""
    return 36 * consts.beta + 13


# ---------------------------------------------------------------------------
# Planar 5-colouring
# ---------------------------------------------------------------------------


def five_color(n: int, adj: Sequence[Set[int]]) -> List[int]:
    """Proper 5-colouring of a loopless planar graph.

    Recursive contraction argument, run iteratively: a planar graph has a
    vertex v of degree <= 5; if deg(v) <= 4 delete it, otherwise two of its
    neighbours u, w are non-adjacent (else v's neighbourhood holds K_5) and
    merging them while deleting v keeps a planar minor.  Undoing the
    operations assigns colours; v always sees <= 4 distinct colours.
    """
    live: Set[int] = set(range(n))
    nbr: List[Set[int]] = [set(a) for a in adj]
    for v in range(n):
        if v in nbr[v]:
            raise StructureError("self-loop cannot be properly coloured")
    # Each op records the removed vertex's neighbour set *at removal time*
    # (neighbours are merge representatives, not original endpoints).
    ops: List[Tuple[int, int, int, Tuple[int, ...]]] = []
    while live:
        v = min(live, key=lambda x: (len(nbr[x]), x))
        snap = tuple(sorted(nbr[v]))
        if len(nbr[v]) <= 4:
            for w in nbr[v]:
                nbr[w].discard(v)
            live.discard(v)
            ops.append((v, -1, -1, snap))
            continue
        if len(nbr[v]) >= 6:
            raise StructureError("minimum degree above 5; graph not planar")
        ns = sorted(nbr[v])
        pair = None
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                if ns[j] not in nbr[ns[i]]:
                    pair = (ns[i], ns[j])
                    break
            if pair:
                break
        if pair is None:
            raise StructureError("degree-5 vertex with K5 neighbourhood")
        u, w = pair
        for x in nbr[v]:
            nbr[x].discard(v)
        live.discard(v)
        # Merge w into u.
        for x in nbr[w]:
            nbr[x].discard(w)
            if x != u:
                nbr[x].add(u)
                nbr[u].add(x)
        live.discard(w)
        ops.append((v, u, w, snap))
    color = [-1] * n
    # Replay in reverse.  Every snapshot neighbour survives this op, so it is
    # removed by a later op and already coloured here; the merged pair (u, w)
    # shares a colour, so v sees at most 4 distinct colours in its snapshot.
    for v, u, w, snap in reversed(ops):
        if u >= 0:
            color[w] = color[u]  # u outlives the merge, coloured already
        used = {color[x] for x in snap}
        for cc in range(5):
            if cc not in used:
                color[v] = cc
                break
        if color[v] < 0:
            raise AssertionError("no free colour")
    for a in range(n):
        for b in adj[a]:
            if color[a] == color[b]:
                raise StructureError("colouring verification failed")
    return color


# ---------------------------------------------------------------------------
# Dense extraction
# ---------------------------------------------------------------------------


def _triangle_at_crossing(g: UnitDiskGraph, cr) -> Optional[Tuple[int, int, int]]:
    quad = [cr.edge_a[0], cr.edge_a[1], cr.edge_b[0], cr.edge_b[1]]
    for skip in range(4):
        tri = [quad[t] for t in range(4) if t != skip]
        if (
            g.has_edge(tri[0], tri[1])
            and g.has_edge(tri[1], tri[2])
            and g.has_edge(tri[0], tri[2])
        ):
            return (tri[0], tri[1], tri[2])
    return None


def simple_cycle_from_walk(walk: Sequence[int]) -> Optional[List[int]]:
    """First simple cycle (length >= 3) contained in a closed vertex walk."""
    pos: Dict[int, int] = {}
    stack: List[int] = []
    for v in list(walk) + [walk[0]]:
        if v in pos:
            cyc = stack[pos[v] :]
            if len(cyc) >= 3:
                return cyc
            # Backtrack: drop the tail that retraced its steps.
            while stack and stack[-1] != v:
                pos.pop(stack.pop())
        else:
            pos[v] = len(stack)
            stack.append(v)
    return None


def dense_extract(
    g: UnitDiskGraph, k: int, *, c: Optional[int] = None, consts: Optional[MapConstants] = None
) -> Optional[List[List[int]]]:
    """k vertex-disjoint cycles if the cleaned graph is dense, else None.

    `g` must be cleaned (minimum degree >= 2).  If the number of degree->=3
    vertices is at most c*k the instance is not dense and None is returned;
    otherwise k cycles are found by triangle harvesting at crossings and, if
    the crossings run out, by 5-colouring the dual of the pruned planar
    residual.
    """
    if any(g.degree(v) <= 1 for v in range(g.n)):
        raise StructureError("dense_extract requires a cleaned graph")
    if c is None:
        if consts is None:
            raise StructureError("pass either c or map constants")
        c = dense_threshold_constant(consts)
    ell = sum(1 for v in range(g.n) if g.degree(v) >= 3)
    if ell <= c * k:
        return None

    cycles: List[List[int]] = []
    alive = sorted(range(g.n))
    cur = g
    ids = list(alive)  # current local id -> original id
    while len(cycles) < k:
        crossings = find_crossings(cur)
        tri = None
        for cr in crossings:  # lowest crossing index first
            tri = _triangle_at_crossing(cur, cr)
            if tri is not None:
                break
        if tri is None:
            break
        cycles.append([ids[v] for v in tri])
        keep = [v for v in range(cur.n) if v not in tri]
        ids = [ids[v] for v in keep]
        cur = cur.induced(keep)
    if len(cycles) == k:
        return cycles

    # Crossing-free residual: prune and read cycles off dual colour classes.
    res = clean(cur)
    sub = res.graph
    if sub.n == 0:
        raise StructureError("dense instance exhausted before k cycles")
    coords = [sub.coords(v) for v in range(sub.n)]
    pg = PlaneGraph.from_coords(coords, sub.edges)
    dual_adj: List[Set[int]] = [set() for _ in pg.faces]
    for e in range(len(pg.edges)):
        f1, f2 = pg.face_of[2 * e], pg.face_of[2 * e + 1]
        if f1 != f2:
            dual_adj[f1].add(f2)
            dual_adj[f2].add(f1)
    colors = five_color(len(pg.faces), dual_adj)
    counts = [0] * 5
    for col in colors:
        counts[col] += 1
    best = counts.index(max(counts))
    used: Set[int] = set()
    for f in range(len(pg.faces)):
        if colors[f] != best or len(cycles) >= k:
            continue
        cyc = simple_cycle_from_walk([pg.tail[d] for d in pg.faces[f]])
        if cyc is None or any(v in used for v in cyc):
            continue
        used.update(cyc)
        cycles.append([ids[res.kept[v]] for v in cyc])
    if len(cycles) < k:
        raise StructureError(
            f"threshold promised {k} cycles but only {len(cycles)} were found"
        )
    return cycles

"""Signature-based dynamic programming for cycle packing on the
surface-cut decomposition, plus boundary-crossing parity machinery.

The decomposition tree splits the vertex set recursively (every vertex
belongs to the piece of each ancestor of its assigned leaf).  For a node t
let V_t be its vertices and bcut(t) the edges with exactly one endpoint in
V_t; bcut(t) is contained in the decomposition's conservative cut(t), which
is what certifies that interfaces stay small.

A *signature* of a node is (L, R, P):
  L - the set of bcut(t) edges used by the partial solution (together with
      the outside world the solution induces vertex-disjoint paths/cycles),
  R - vertices reserved for cycles lying inside a single finer cell (finer
      cell of v = (grid cell of v, assigned leaf of v)); the packedness cap
      bounds, per finer cell, how many vertices may join L,
  P - a perfect pairing of the inside endpoints of L-paths, realized by
      vertex-disjoint paths through G[V_t].
The refined mode tags pairs with a boundary-crossing parity and prunes
pairings whose circular-arc crossing graph is not K_{z,z}-free; every such
pruning is counted, so a too-small z can never silently change the answer.

Tables map signatures to the maximum number of cycles fully contained in
G[V_t].  Leaves are solved by exhaustive search over realizable structures.
An internal node joins its two child tables: the children must agree on
shared boundary edges, the union of their structures (cut edges plus
pairing links) must remain a disjoint union of paths and cycles, newly
closed fully-inside cycles are counted, and the parent signature is forced
from the union — so child tables are joined directly, without enumerating
parent candidates.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from diskpack.arcs import CACGraph, is_kzz_free
from diskpack.gridmap import build_map, compute_constants
from diskpack.oracle import max_cycle_packing, verify_solution
from diskpack.scdecomp import SCDecomposition, build_sc_decomposition
from diskpack.structure import (
    clean,
    dense_extract,
    dense_threshold_constant,
    packedness_constant,
)


class DPError(RuntimeError):
    pass


class DPBudgetError(DPError):
    pass


# ---------------------------------------------------------------------------
# Boundary-crossing parity (annulus machinery)
# ---------------------------------------------------------------------------


def _orient(a, b, c):
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _proper_cross(a, b, c, d) -> bool:
    return (
        _orient(a, b, c) * _orient(a, b, d) < 0
        and _orient(c, d, a) * _orient(c, d, b) < 0
    )


@dataclass(frozen=True)
class ParityFrame:
    """Connector between the two boundary curves of an annular piece.

    `connector` is a polyline joining the curves, meeting them only at its
    endpoints and avoiding all path endpoints.  A path's crossing number is
    how often it properly crosses the connector; only its parity matters:
    two boundary-to-boundary paths whose endpoints interleave along the
    boundaries and whose crossing numbers have equal parity must cross.
    """

    connector: Tuple[Tuple[float, float], ...]

    def crossings(self, path: Sequence[Tuple[float, float]]) -> int:
        cnt = 0
        for i in range(len(path) - 1):
            for j in range(len(self.connector) - 1):
                if _proper_cross(
                    path[i], path[i + 1], self.connector[j], self.connector[j + 1]
                ):
                    cnt += 1
        return cnt


def crossing_parity(path: Sequence[Tuple[float, float]], frame: ParityFrame) -> int:
    """Parity (0 even / 1 odd) of the path's crossings with the connector."""
    return frame.crossings(path) % 2


def paths_cross(p1: Sequence, p2: Sequence) -> bool:
    """Geometric oracle: do two polylines properly cross anywhere?"""
    for i in range(len(p1) - 1):
        for j in range(len(p2) - 1):
            if _proper_cross(p1[i], p1[i + 1], p2[j], p2[j + 1]):
                return True
    return False


# ---------------------------------------------------------------------------
# Signatures and tables
# ---------------------------------------------------------------------------

PairKey = Tuple[int, int]
SigKey = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[PairKey, ...]]

# A component plan describes one path/cycle of a merged structure as an
# ordered list of steps: ("link", child_index, pair) expands to the child's
# route for that pair; ("edge", (u, v)) is a single shared cut edge.
Plan = List[Tuple]


def canon_pairing(pairs: Sequence[Sequence[int]]) -> Tuple[PairKey, ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))


@dataclass
class Entry:
    value: int
    # Leaf realization: explicit routes per pair and finished cycles.
    routes: Dict[PairKey, List[int]] = field(default_factory=dict)
    cycles: List[List[int]] = field(default_factory=list)
    # Internal realization: back-pointers plus stitched component plans.
    children: Optional[Tuple[SigKey, SigKey]] = None
    pair_plans: Dict[PairKey, Plan] = field(default_factory=dict)
    cycle_plans: List[Plan] = field(default_factory=list)


class DPSolver:
    """Bottom-up signature table computation over a decomposition."""

    def __init__(
        self,
        g,
        sc: SCDecomposition,
        *,
        mode: str = "standard",
        z: int = 3,
        cell_cap: Optional[int] = None,
        table_limit: int = 50_000,
        work_limit: int = 500_000,
        oracle_limit: int = 18,
        afford: float = 30_000.0,
    ):
        if mode not in ("standard", "refined"):
            raise DPError(f"unknown mode {mode!r}")
        self.g = g
        self.sc = sc
        self.mode = mode
        self.z = z
        self.table_limit = table_limit
        self.work_limit = work_limit
        self._work = 0
        self._work_cap = work_limit
        self.collapsed: List[int] = []  # subtrees solved directly as one leaf
        self.oracle_limit = oracle_limit
        self.kzz_pruned = 0  # refined mode: signatures dropped by the z test
        cap_default = packedness_constant(sc.consts)
        self.cell_cap = cap_default if cell_cap is None else min(cell_cap, cap_default)
        n_nodes = len(sc.nodes)
        leaf_of = [sc.leaf_node[sc.pos[sc.q[v]]] for v in range(g.n)]
        members: List[List[int]] = [[] for _ in range(n_nodes)]
        for v in range(g.n):
            t = leaf_of[v]
            while t != -1:
                members[t].append(v)
                t = sc.nodes[t].parent
        self.vt: List[FrozenSet[int]] = [frozenset(ms) for ms in members]
        self.bcut: List[List[int]] = [[] for _ in range(n_nodes)]
        for idx, (a, b) in enumerate(g.edges):
            for t in range(n_nodes):
                if (a in self.vt[t]) != (b in self.vt[t]):
                    self.bcut[t].append(idx)
        # Finer cell of a vertex: its grid cell split along leaf pieces.
        self.finer = [(sc.gmap.cell_of[v], leaf_of[v]) for v in range(g.n)]
        self.tables: List[Dict[SigKey, Entry]] = [dict() for _ in range(n_nodes)]
        self._plan_collapses(afford)

    def _direct_cost(self, t: int) -> float:
        """Rough size of node t's signature space when solved directly:
        every inside vertex independently picks 0, 1 or 2 of its boundary
        edges."""
        deg: Dict[int, int] = {}
        for e in self.bcut[t]:
            for v in self.g.edges[e]:
                if v in self.vt[t]:
                    deg[v] = deg.get(v, 0) + 1
        cost = 1.0
        for d in deg.values():
            cost *= 1 + d + d * (d - 1) // 2
            if cost > 1e15:
                return 1e15
        return cost

    def _plan_collapses(self, afford: float = 30_000.0):
        """Bottom-up cost estimate choosing which subtrees to solve directly
        as one leaf.  A subtree is collapsed when recursing into it looks
        much more expensive than its own (small) interface and it fits the
        exact base case."""
        n_nodes = len(self.sc.nodes)
        direct = [self._direct_cost(t) for t in range(n_nodes)]
        cost = [0.0] * n_nodes
        tab = [0.0] * n_nodes
        self.plan: Set[int] = set()
        for t in range(n_nodes - 1, -1, -1):
            ch = self.sc.nodes[t].children
            tab[t] = min(direct[t], float(self.table_limit))
            if not ch:
                cost[t] = direct[t]
                continue
            rec = sum(cost[c] for c in ch) + tab[ch[0]] * tab[ch[1]]
            if (
                rec > afford
                and len(self.vt[t]) <= self.oracle_limit
                and direct[t] < rec
            ):
                self.plan.add(t)
                cost[t] = direct[t]
            else:
                cost[t] = min(rec, 1e15)

    # -- shared helpers --------------------------------------------------------

    def _tick(self, n: int = 1):
        self._work += n
        if self._work > self._work_cap:
            raise DPBudgetError("per-node work budget exhausted")

    def _lambda_candidates(self, t: int) -> Iterator[Tuple[int, ...]]:
        """Subsets of bcut(t) keeping every vertex degree (inside and
        outside alike) at most 2 and respecting the per-finer-cell
        packedness cap, grown edge by edge with pruning."""
        edges = self.bcut[t]
        g = self.g
        vt = self.vt[t]
        cap = self.cell_cap

        def rec(i: int, acc: List[int], deg: Dict[int, int], cells: Dict):
            self._tick()
            if i == len(edges):
                yield tuple(acc)
                return
            yield from rec(i + 1, acc, deg, cells)
            e = edges[i]
            a, b = g.edges[e]
            if deg.get(a, 0) >= 2 or deg.get(b, 0) >= 2:
                return
            touched = []
            for v in (a, b):
                if v in vt and deg.get(v, 0) == 0:
                    c = self.finer[v]
                    if cells.get(c, 0) + 1 > cap:
                        for cc in touched:
                            cells[cc] -= 1
                        return
                    cells[c] = cells.get(c, 0) + 1
                    touched.append(c)
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
            acc.append(e)
            yield from rec(i + 1, acc, deg, cells)
            acc.pop()
            deg[a] -= 1
            deg[b] -= 1
            for cc in touched:
                cells[cc] -= 1

        yield from rec(0, [], {}, {})

    def _lambda_profile(self, t: int, lam: Sequence[int]):
        """Inside path endpoints (degree 1) and blocked interiors (degree 2)."""
        deg_in: Dict[int, int] = {}
        vt = self.vt[t]
        for e in lam:
            for v in self.g.edges[e]:
                if v in vt:
                    deg_in[v] = deg_in.get(v, 0) + 1
        ends = sorted(v for v, d in deg_in.items() if d == 1)
        blocked = {v for v, d in deg_in.items() if d == 2}
        return ends, blocked

    # -- refined-mode pairing test ---------------------------------------------

    def _pairing_kzz_ok(self, t: int, pairing: Tuple[PairKey, ...]) -> bool:
        """K_{z,z}-freeness of the pairing's crossing graph in the cyclic
        boundary order.  The piece boundary is treated as a single closed
        curve (so every pair carries parity "even"); the endpoint order
        along it is approximated by the angle around the endpoint centroid.
        """
        verts = sorted({v for p in pairing for v in p})
        if len(verts) < 4 * self.z:
            return True  # too few endpoints to build a K_{z,z}
        cx = sum(float(self.g.coords(v)[0]) for v in verts) / len(verts)
        cy = sum(float(self.g.coords(v)[1]) for v in verts) / len(verts)
        order = sorted(
            verts,
            key=lambda v: (
                math.atan2(
                    float(self.g.coords(v)[1]) - cy,
                    float(self.g.coords(v)[0]) - cx,
                ),
                v,
            ),
        )
        rank = {v: i + 1 for i, v in enumerate(order)}
        arcs = [tuple(sorted((rank[a], rank[b]))) for a, b in pairing]
        edges = []
        for i in range(len(arcs)):
            for j in range(i + 1, len(arcs)):
                a, b = arcs[i]
                c, d = arcs[j]
                if (a < c < b < d) or (c < a < d < b):
                    edges.append((i, j))
        return is_kzz_free(CACGraph(n=len(arcs), edges=tuple(edges)), self.z)

    # -- table entry recording -------------------------------------------------

    def _record(
        self,
        t,
        lam,
        pairing,
        value,
        *,
        routes=None,
        cycles=None,
        children=None,
        pair_plans=None,
        cycle_plans=None,
        reserved=(),
    ):
        if self.mode == "refined" and pairing:
            if not self._pairing_kzz_ok(t, pairing):
                self.kzz_pruned += 1
                return
        key: SigKey = (tuple(sorted(lam)), tuple(sorted(reserved)), pairing)
        cur = self.tables[t].get(key)
        if cur is not None and cur.value >= value:
            return
        self.tables[t][key] = Entry(
            value=value,
            routes=routes or {},
            cycles=cycles or [],
            children=children,
            pair_plans=pair_plans or {},
            cycle_plans=cycle_plans or [],
        )

    # -- leaf tables -----------------------------------------------------------

    def _free_cycle_value(self, verts: FrozenSet[int]):
        """Maximum cycle packing on leftover leaf vertices (with witness)."""
        if len(verts) < 3:
            return 0, []
        if len(verts) > self.oracle_limit:
            raise DPBudgetError(
                f"leaf residual of {len(verts)} vertices exceeds the exact "
                f"packing limit {self.oracle_limit}"
            )
        keep = sorted(verts)
        sub = self.g.induced(keep)
        value, one, _ = max_cycle_packing(sub, limit=self.oracle_limit)
        return value, [[keep[v] for v in cyc] for cyc in one]

    def _leaf_table(self, t: int):
        vt = self.vt[t]
        cache: Dict[FrozenSet[int], Tuple[int, List[List[int]]]] = {}

        def residual(free: FrozenSet[int]):
            got = cache.get(free)
            if got is None:
                got = self._free_cycle_value(free)
                cache[free] = got
            return got

        for lam in self._lambda_candidates(t):
            ends, blocked = self._lambda_profile(t, lam)
            if len(ends) % 2:
                continue
            base_free = set(vt - blocked - set(ends))
            self._pair_search(t, lam, set(ends), base_free, {}, residual)
            if len(self.tables[t]) > self.table_limit:
                raise DPBudgetError(
                    f"leaf table for node {t} exceeded {self.table_limit} entries"
                )

    def _pair_search(self, t, lam, unpaired, free, routes, residual):
        """DFS over systems of vertex-disjoint paths pairing up all of
        `unpaired` through `free` vertices; records one table entry per
        completed system (keeping the best residual value per signature)."""
        if not unpaired:
            value, cycles = residual(frozenset(free))
            self._record(
                t,
                lam,
                canon_pairing(list(routes.keys())),
                value,
                routes={p: list(r) for p, r in routes.items()},
                cycles=[list(c) for c in cycles],
            )
            return
        a = min(unpaired)
        g = self.g
        path = [a]

        # Paths may be restricted to chordless ones: shortcutting a path
        # along a chord keeps its endpoints and frees vertices, so some
        # best realization of every signature uses only chordless paths.
        def chord_free(w):
            return not any(g.has_edge(w, u) for u in path[:-1])

        def walk(cur):
            self._tick()
            for w in g.adj[cur]:
                if w in unpaired and w != a:
                    if not chord_free(w):
                        continue
                    pair = (min(a, w), max(a, w))
                    routes[pair] = path + [w]
                    self._pair_search(
                        t, lam, unpaired - {a, w}, free, routes, residual
                    )
                    del routes[pair]
                elif w in free:
                    if not chord_free(w):
                        continue
                    free.discard(w)
                    path.append(w)
                    walk(w)
                    path.pop()
                    free.add(w)

        walk(a)

    # -- merging ---------------------------------------------------------------

    def _merge_node(self, t: int):
        t1, t2 = self.sc.nodes[t].children
        shared = set(self.bcut[t1]) & set(self.bcut[t2])
        bt = set(self.bcut[t])
        index2: Dict[Tuple[int, ...], List[SigKey]] = {}
        for k2 in self.tables[t2]:
            proj = tuple(sorted(set(k2[0]) & shared))
            index2.setdefault(proj, []).append(k2)
        for k1, e1 in list(self.tables[t1].items()):
            proj = tuple(sorted(set(k1[0]) & shared))
            for k2 in index2.get(proj, ()):
                self._tick()
                self._try_merge(
                    t, k1, e1, k2, self.tables[t2][k2], bt, shared
                )
            if len(self.tables[t]) > self.table_limit:
                raise DPBudgetError(
                    f"table for node {t} exceeded {self.table_limit} entries"
                )

    def _try_merge(self, t, k1, e1, k2, e2, bt, shared):
        g = self.g
        vt = self.vt[t]
        lam_all = set(k1[0]) | set(k2[0])
        lam_parent = tuple(sorted(lam_all & bt))

        # Items of the merged structure; a vertex may carry at most two.
        # Inside items (pair links and shared cut edges) lie entirely in
        # V_t; the remaining items are the parent's own cut edges.
        incid: Dict[int, List[Tuple]] = {}

        def add(u, item, other):
            incid.setdefault(u, []).append((item, other))

        for e in lam_all:
            a, b = g.edges[e]
            add(a, ("edge", e, e in shared), b)
            add(b, ("edge", e, e in shared), a)
        for child, key in ((0, k1), (1, k2)):
            for a, b in key[2]:
                add(a, ("link", child, (a, b)), b)
                add(b, ("link", child, (a, b)), a)
        for items in incid.values():
            if len(items) > 2:
                return  # a vertex of degree three: not vertex-disjoint

        # Inside endpoints of the parent's own cut-edge paths.
        pdeg: Dict[int, int] = {}
        for e in lam_parent:
            for v in g.edges[e]:
                if v in vt:
                    pdeg[v] = pdeg.get(v, 0) + 1
        pend = {v for v, d in pdeg.items() if d == 1}

        def is_inside(item) -> bool:
            return item[0] == "link" or item[2]

        def inside_items(v):
            return [(it, other) for (it, other) in incid.get(v, ()) if is_inside(it)]

        def plan_step(item, u, v):
            if item[0] == "link":
                return ("link", item[1], item[2])
            return ("edge", (u, v))

        visited: Set[Tuple] = set()
        pair_plans: Dict[PairKey, Plan] = {}
        cycle_plans: List[Plan] = []
        cycles = 0

        def trace(start, first):
            """Follow inside items from `start` through `first`; returns the
            far endpoint, the step plan, and whether the walk closed up."""
            plan: Plan = []
            cur, (item, other) = start, first
            while True:
                visited.add(item)
                plan.append(plan_step(item, cur, other))
                cur = other
                nxt = None
                for cand, cand_other in incid.get(cur, ()):
                    if cand == item or not is_inside(cand):
                        continue
                    nxt = (cand, cand_other)
                    break
                if nxt is None:
                    return cur, plan, False
                if nxt[0] in visited:
                    return cur, plan, True
                item, other = nxt

        # Path components start at vertices carrying exactly one inside item.
        for v in sorted(incid):
            ins = inside_items(v)
            if len(ins) != 1 or ins[0][0] in visited:
                continue
            end, plan, closed = trace(v, ins[0])
            if closed:
                return  # malformed structure
            if v not in pend or end not in pend:
                return  # dangling inside endpoint: not mergeable
            pair = (min(v, end), max(v, end))
            if pair in pair_plans:
                return
            pair_plans[pair] = plan
        # Remaining unvisited inside items belong to fully-inside cycles.
        for v in sorted(incid):
            for item, other in inside_items(v):
                if item in visited:
                    continue
                end, plan, closed = trace(v, (item, other))
                if not closed or end != v:
                    return
                cycles += 1
                cycle_plans.append(plan)

        if {x for p in pair_plans for x in p} != pend:
            return  # some parent cut endpoint is not paired up inside

        self._record(
            t,
            lam_parent,
            canon_pairing(list(pair_plans.keys())),
            e1.value + e2.value + cycles,
            children=(k1, k2),
            pair_plans=pair_plans,
            cycle_plans=cycle_plans,
            reserved=(),
        )

    # -- driver ----------------------------------------------------------------

    def _subtree(self, t: int) -> List[int]:
        out, stack = [], [t]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.sc.nodes[u].children)
        return out

    def _process(self, t: int):
        nd = self.sc.nodes[t]
        if t in self.plan:
            self.collapsed.append(t)
            self._work_cap = self._work + self.work_limit
            self._leaf_table(t)
            return
        try:
            if nd.children:
                for c in nd.children:
                    self._process(c)
                self._work_cap = self._work + self.work_limit
                self._merge_node(t)
            else:
                self._work_cap = self._work + self.work_limit
                self._leaf_table(t)
        except DPBudgetError:
            # Blown tables always sit below a node whose own boundary is
            # small (interfaces shrink back towards the subtree root), so
            # solve this subtree directly as one leaf when it is small
            # enough for the exact base case; otherwise give up honestly.
            if len(self.vt[t]) > self.oracle_limit:
                raise
            for u in self._subtree(t):
                self.tables[u] = {}
            self.collapsed.append(t)
            self._work_cap = self._work + self.work_limit
            self._leaf_table(t)

    def run(self) -> int:
        import sys

        sys.setrecursionlimit(
            max(sys.getrecursionlimit(), 4 * len(self.sc.nodes) + 1000)
        )
        self._process(0)
        entry = self.tables[0].get(((), (), ()))
        if entry is None:
            raise DPError("root table has no closed signature")
        return entry.value

    # -- traceback -------------------------------------------------------------

    def cycles(self) -> List[List[int]]:
        return self._collect(0, ((), (), ()))

    def _route(self, t: int, key: SigKey, pair: PairKey) -> List[int]:
        entry = self.tables[t][key]
        if entry.children is None:
            return list(entry.routes[pair])
        return self._expand_plan(t, entry, entry.pair_plans[pair])

    def _expand_plan(self, t: int, entry: Entry, plan: Plan) -> List[int]:
        t1, t2 = self.sc.nodes[t].children
        k1, k2 = entry.children
        out: List[int] = []

        def append_route(route: List[int]):
            nonlocal out
            if not out:
                out = list(route)
            elif out[-1] == route[0]:
                out += route[1:]
            elif out[-1] == route[-1]:
                out += route[-2::-1]
            elif out[0] == route[-1]:
                out = route[:-1] + out
            elif out[0] == route[0]:
                out = route[:0:-1] + out
            else:
                raise AssertionError("component plan is not connected")

        for step in plan:
            if step[0] == "link":
                child_t, child_k = (t1, k1) if step[1] == 0 else (t2, k2)
                append_route(self._route(child_t, child_k, step[2]))
            else:
                append_route(list(step[1]))
        return out

    def _collect(self, t: int, key: SigKey) -> List[List[int]]:
        entry = self.tables[t][key]
        if entry.children is None:
            return [list(c) for c in entry.cycles]
        t1, t2 = self.sc.nodes[t].children
        out = self._collect(t1, entry.children[0]) + self._collect(
            t2, entry.children[1]
        )
        for plan in entry.cycle_plans:
            cyc = self._expand_plan(t, entry, plan)
            if cyc[0] == cyc[-1]:
                cyc = cyc[:-1]
            out.append(cyc)
        return out


# ---------------------------------------------------------------------------
# Valid-tuple enumeration (audit surface)
# ---------------------------------------------------------------------------


def enumerate_valid_tuples(
    solver: DPSolver, t: int, mode: str = "standard"
) -> Iterator[SigKey]:
    """All (L, R, P) tuples valid at node t, irrespective of realizability:
    L runs over degree-<=2 cap-respecting subsets of the boundary edges and
    P over all pairings of L's inside endpoints (R stays empty under the
    default cap).  Refined mode keeps only pairings passing the K_{z,z}
    test.  Solver tables hold the realizable subset of these tuples."""

    def pairings(xs: List[int]) -> Iterator[Tuple[PairKey, ...]]:
        if not xs:
            yield ()
            return
        a = xs[0]
        for i in range(1, len(xs)):
            b = xs[i]
            for tail in pairings(xs[1:i] + xs[i + 1 :]):
                yield ((a, b),) + tail

    for lam in solver._lambda_candidates(t):
        ends, _ = solver._lambda_profile(t, lam)
        if len(ends) % 2:
            continue
        for pairing in pairings(ends):
            pairing = canon_pairing(pairing)
            if mode == "refined" and pairing and not solver._pairing_kzz_ok(t, pairing):
                continue
            yield (tuple(sorted(lam)), (), pairing)


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


@dataclass
class SolveResult:
    ok: bool
    value: int
    cycles: List[List[int]]
    method: str  # "empty" | "dense" | "dp"
    z_too_small: bool = False
    diagnostics: Dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "ok": self.ok,
                "value": self.value,
                "cycles": self.cycles,
                "method": self.method,
                "z_too_small": self.z_too_small,
                "diagnostics": self.diagnostics,
            },
            sort_keys=True,
        )


def solve(
    g,
    k: int,
    *,
    mode: str = "standard",
    z: int = 3,
    cell_cap: Optional[int] = None,
    dense_c: Optional[int] = None,
    salt: int = 0,
    table_limit: int = 50_000,
    oracle_limit: int = 18,
    afford: float = 30_000.0,
) -> SolveResult:
    """Find k vertex-disjoint cycles, or report the maximum achievable.

    Pipeline: clean -> dense shortcut -> surface-cut decomposition ->
    signature DP -> traceback.  Returned cycles are verified before return.
    """
    if k <= 0:
        return SolveResult(ok=True, value=0, cycles=[], method="empty")
    res = clean(g)
    if res.graph.n == 0:
        return SolveResult(ok=False, value=0, cycles=[], method="empty")
    sub = res.graph
    gmap = build_map(sub)
    consts = compute_constants(gmap)
    c = dense_threshold_constant(consts) if dense_c is None else dense_c
    dense = dense_extract(sub, k, c=c)
    if dense is not None:
        cycles = res.to_original(dense)
        if not verify_solution(g, cycles):
            raise DPError("dense extraction produced an invalid solution")
        return SolveResult(ok=True, value=k, cycles=cycles, method="dense")
    sc = build_sc_decomposition(sub, salt=salt, gmap=gmap)
    solver = DPSolver(
        sub,
        sc,
        mode=mode,
        z=z,
        cell_cap=cell_cap,
        table_limit=table_limit,
        oracle_limit=oracle_limit,
        afford=afford,
    )
    value = solver.run()
    cycles_local = solver.cycles()
    if len(cycles_local) != value:
        raise DPError(
            f"traceback produced {len(cycles_local)} cycles for value {value}"
        )
    if not verify_solution(sub, cycles_local):
        raise DPError("dynamic program produced an invalid solution")
    cycles = res.to_original(cycles_local)
    diagnostics = {
        "width": sc.width(),
        "nodes": len(sc.nodes),
        "kzz_pruned": solver.kzz_pruned,
        "collapsed": list(solver.collapsed),
    }
    z_flag = mode == "refined" and solver.kzz_pruned > 0
    if value >= k:
        return SolveResult(
            ok=True,
            value=value,
            cycles=cycles[:k],
            method="dp",
            z_too_small=z_flag,
            diagnostics=diagnostics,
        )
    return SolveResult(
        ok=False,
        value=value,
        cycles=cycles,
        method="dp",
        z_too_small=z_flag,
        diagnostics=diagnostics,
    )

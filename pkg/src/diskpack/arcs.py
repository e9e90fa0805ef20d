"""Circular-arc pairings, crossing graphs, and biclique-free enumeration.

A *pairing* is a perfect matching on 2m points placed on a circle
(numbered 1..2m in cyclic order).  Two pairs *cross* when their endpoints
interleave around the circle; the crossing graph of a pairing (CAC graph)
has the pairs as vertices and crossings as edges.  A pairing is K_{z,z}-free
when its crossing graph contains no complete bipartite K_{z,z} subgraph.

Enumeration of all K_{z,z}-free pairings works level by level.  Each pair
is canonically drawn as the chord interval [a, b] with a < b; interval
containment stratifies the arcs into *levels* (level = longest containment
chain above the arc).  Level-by-level states grow a partial arc set: a new
batch of same-level arcs is chosen as a quotient matching (pairwise
non-containing intervals on the new points only, each of quotient stretch
at most 4z — longer arcs would force a crossing clique of size 2z), its
points are interleaved into the existing ground set, containment
constraints pin the new arcs to exactly the next level, and states whose
partial crossing graph already holds a K_{z,z} are pruned (freeness is
closed under subsets).  Each final arc set is produced along exactly one
path because the level structure is a function of the arc set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

Pair = Tuple[int, int]


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class CircularPairing:
    """Perfect matching on the cyclic point set 1..2m."""

    m: int
    pairs: Tuple[Pair, ...]  # each (a, b) with a < b, sorted lexicographically

    @staticmethod
    def of(pairs: Sequence[Sequence[int]]) -> "CircularPairing":
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
        m = len(norm)
        flat = [x for p in norm for x in p]
        if sorted(flat) != list(range(1, 2 * m + 1)):
            raise PairingError("pairs must perfectly match the points 1..2m")
        return CircularPairing(m=m, pairs=norm)


@dataclass(frozen=True)
class CACGraph:
    """Crossing graph of a pairing: vertex i is pairing.pairs[i]."""

    n: int
    edges: Tuple[Pair, ...]

    def adjacency(self) -> List[Set[int]]:
        adj: List[Set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


def pairs_cross(p: Pair, q: Pair) -> bool:
    """Endpoints interleave on the circle (equivalently: chords cross)."""
    a, b = p
    c, d = q
    return (a < c < b < d) or (c < a < d < b)


def cac_graph(p: CircularPairing) -> CACGraph:
    edges = [
        (i, j)
        for i, j in combinations(range(len(p.pairs)), 2)
        if pairs_cross(p.pairs[i], p.pairs[j])
    ]
    return CACGraph(n=len(p.pairs), edges=tuple(edges))


def is_kzz_free(g: CACGraph, z: int) -> bool:
    """No K_{z,z} subgraph (two disjoint z-sets, all cross pairs present)."""
    if z < 1:
        raise ValueError("z must be at least 1")
    adj = g.adjacency()
    if z == 1:
        return not g.edges
    verts = [v for v in range(g.n) if len(adj[v]) >= z]
    for side in combinations(verts, z):
        common: Set[int] = set.intersection(*(adj[v] for v in side))
        if len(common - set(side)) >= z:
            return False
    return True


def all_pairings(m: int) -> Iterator[CircularPairing]:
    """Every perfect matching of 1..2m, lexicographic; (2m-1)!! of them."""

    def rec(points: Tuple[int, ...], acc: List[Pair]):
        if not points:
            yield CircularPairing(m=m, pairs=tuple(acc))
            return
        a = points[0]
        for idx in range(1, len(points)):
            b = points[idx]
            acc.append((a, b))
            yield from rec(points[1:idx] + points[idx + 1 :], acc)
            acc.pop()

    yield from rec(tuple(range(1, 2 * m + 1)), [])


def enumerate_kzz_free_oracle(m: int, z: int) -> List[CircularPairing]:
    """Filter-all-matchings reference implementation (use for m <= 8)."""
    if m > 8:
        raise PairingError("oracle enumeration limited to m <= 8")
    return [p for p in all_pairings(m) if is_kzz_free(cac_graph(p), z)]


# ---------------------------------------------------------------------------
# Level/quotient enumeration
# ---------------------------------------------------------------------------


def _quotient_matchings(n: int, z: int) -> List[Tuple[Pair, ...]]:
    """Perfect matchings of 1..2n into pairwise non-containing intervals of
    stretch at most 4z (the shape a single level takes in its own
    coordinates).  Non-containment means left endpoints and right endpoints
    appear in the same order."""
    out: List[Tuple[Pair, ...]] = []

    def rec(points: Tuple[int, ...], acc: List[Pair], last_b: int):
        if not points:
            out.append(tuple(acc))
            return
        a = points[0]
        for idx in range(1, len(points)):
            b = points[idx]
            if b - a > 4 * z:
                break
            if b <= last_b:  # containment inside the previous interval
                continue
            acc.append((a, b))
            rec(points[1:idx] + points[idx + 1 :], acc, b)
            acc.pop()

    rec(tuple(range(1, 2 * n + 1)), [], 0)
    return out


def _has_kzz(pairs: Sequence[Pair], z: int) -> bool:
    n = len(pairs)
    adj: List[Set[int]] = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        if pairs_cross(pairs[i], pairs[j]):
            adj[i].add(j)
            adj[j].add(i)
    if z == 1:
        return any(adj)
    verts = [v for v in range(n) if len(adj[v]) >= z]
    for side in combinations(verts, z):
        common: Set[int] = set.intersection(*(adj[v] for v in side))
        if len(common - set(side)) >= z:
            return True
    return False


def enumerate_kzz_free(m: int, z: int) -> List[CircularPairing]:
    """All K_{z,z}-free pairings of 1..2m, lexicographically sorted."""
    if m < 1:
        raise PairingError("m must be at least 1")
    if z < 1:
        raise PairingError("z must be at least 1")
    # State: tuple of (a, b, level) over ground set 1..2*len(state); every
    # ground point is an endpoint.  States sharing arcs-at-max-level grow by
    # one level per round.
    State = Tuple[Tuple[int, int, int], ...]
    results: List[CircularPairing] = []
    states: List[State] = [()]
    level = 0
    while states:
        level += 1
        nxt: List[State] = []
        for st in states:
            s = 2 * len(st)
            remaining = m - len(st)
            for n_new in range(1, remaining + 1):
                quots = _quotient_matchings(n_new, z)
                for pos in combinations(range(1, s + 2 * n_new + 1), 2 * n_new):
                    # Order-preserving relabel of the old ground points.
                    newpos = set(pos)
                    old_map: Dict[int, int] = {}
                    nxt_old = 1
                    for q in range(1, s + 2 * n_new + 1):
                        if q not in newpos:
                            old_map[nxt_old] = q
                            nxt_old += 1
                    old_arcs = [
                        (old_map[a], old_map[b], lv) for (a, b, lv) in st
                    ]
                    prev = [
                        (a, b) for (a, b, lv) in old_arcs if lv == level - 1
                    ]
                    for quot in quots:
                        new_arcs = [
                            (pos[qa - 1], pos[qb - 1]) for (qa, qb) in quot
                        ]
                        if not _level_ok(old_arcs, prev, new_arcs, level):
                            continue
                        arcs = [(a, b) for (a, b, _) in old_arcs] + new_arcs
                        if _has_kzz(arcs, z):
                            continue
                        state2 = tuple(
                            sorted(
                                old_arcs
                                + [(a, b, level) for (a, b) in new_arcs]
                            )
                        )
                        if len(state2) == m:
                            results.append(
                                CircularPairing.of([(a, b) for (a, b, _) in state2])
                            )
                        else:
                            nxt.append(state2)
        states = nxt
    results.sort(key=lambda p: p.pairs)
    return results


def _level_ok(
    old_arcs: Sequence[Tuple[int, int, int]],
    prev_level: Sequence[Pair],
    new_arcs: Sequence[Pair],
    level: int,
) -> bool:
    """New arcs must sit at exactly `level`: contained in some previous-level
    arc (when level > 1) and containing no older arc (which would push that
    arc's level above its own)."""
    for na, nb in new_arcs:
        if level > 1 and not any(a < na and nb < b for a, b in prev_level):
            return False
        for a, b, _ in old_arcs:
            if na < a and b < nb:
                return False
    return True

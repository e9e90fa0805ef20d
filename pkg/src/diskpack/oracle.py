"""Brute-force maximum vertex-disjoint cycle packing for small instances.

Memoized search over vertex-subset bitmasks: the pivot is the lowest-id
unused vertex; either it is skipped or some induced cycle through it is
chosen.  Induced cycles suffice (any cycle can be shortcut to an induced one
on a subset of its vertices), which is cross-checked against an
all-cycles search at very small sizes in the test suite.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

ORACLE_LIMIT = 16


class OracleLimitError(ValueError):
    pass


def _induced_cycles_through(adjmask: List[int], free: int, pivot: int) -> List[int]:
    """Bitmasks of induced cycles through `pivot` using only `free` vertices.

    A cycle mask C is induced iff every vertex of C has exactly two neighbors
    inside C.  Enumerated by DFS over induced paths starting at the pivot,
    closing back to it; each cycle found once via a direction tiebreak.
    """
    out = []
    pbit = 1 << pivot

    def extend(v: int, mask: int, first: int):
        # Close the cycle back to the pivot.  Intermediate vertices were only
        # admitted when their mask-adjacency is within {predecessor, pivot},
        # so the cycle is induced iff pivot sees exactly first and v in it.
        if (
            adjmask[v] & pbit
            and mask.bit_count() >= 3
            and v > first
            and (adjmask[pivot] & mask).bit_count() == 2
        ):
            out.append(mask)
        cand = adjmask[v] & free & ~mask
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if (adjmask[w] & mask) & ~((1 << v) | pbit):
                continue
            extend(w, mask | (1 << w), first)

    cand = adjmask[pivot] & free
    while cand:
        w = (cand & -cand).bit_length() - 1
        cand &= cand - 1
        extend(w, pbit | (1 << w), w)
    return sorted(set(out))


def max_cycle_packing(
    g,
    limit: int = ORACLE_LIMIT,
    want_all: bool = False,
) -> Tuple[int, Optional[List[List[int]]], Optional[List[List[List[int]]]]]:
    """(value, one optimal solution, all optimal solutions if requested).

    `g` needs `.n`, `.adj`.  Solutions are lists of cycles, each cycle a
    vertex list in traversal order.
    """
    n = g.n
    if n > limit:
        raise OracleLimitError(f"{n} vertices exceeds oracle limit {limit}")
    adjmask = [0] * n
    for v in range(n):
        for w in g.adj[v]:
            adjmask[v] |= 1 << w
    full = (1 << n) - 1
    memo: Dict[int, int] = {}

    def best(free: int) -> int:
        if free == 0:
            return 0
        got = memo.get(free)
        if got is not None:
            return got
        pivot = (free & -free).bit_length() - 1
        res = best(free & ~(1 << pivot))
        for cyc in _induced_cycles_through(adjmask, free, pivot):
            res = max(res, 1 + best(free & ~cyc))
        memo[free] = res
        return res

    value = best(full)

    def mask_to_cycle(mask: int) -> List[int]:
        verts = [v for v in range(n) if mask >> v & 1]
        # Order by walking: each vertex has exactly 2 neighbors in the mask.
        start = verts[0]
        order = [start]
        prev = -1
        cur = start
        while True:
            nxt = None
            for w in verts:
                if w != prev and w != cur and adjmask[cur] >> w & 1:
                    nxt = w
                    break
            if nxt is None or nxt == start:
                break
            order.append(nxt)
            prev, cur = cur, nxt
            if len(order) > len(verts):
                break
        return order

    def trace_one(free: int) -> List[List[int]]:
        if free == 0 or best(free) == 0:
            return []
        pivot = (free & -free).bit_length() - 1
        if best(free & ~(1 << pivot)) == best(free):
            return trace_one(free & ~(1 << pivot))
        for cyc in _induced_cycles_through(adjmask, free, pivot):
            if 1 + best(free & ~cyc) == best(free):
                return [mask_to_cycle(cyc)] + trace_one(free & ~cyc)
        raise AssertionError("traceback failed")

    one = trace_one(full) if value > 0 else []

    all_sols = None
    if want_all:
        seen = set()
        all_sols = []

        def trace_all(free: int, acc: List[int]):
            if best(free) == 0:
                key = frozenset(acc)
                if key not in seen:
                    seen.add(key)
                    all_sols.append([mask_to_cycle(m) for m in acc])
                return
            pivot = (free & -free).bit_length() - 1
            if best(free & ~(1 << pivot)) == best(free):
                trace_all(free & ~(1 << pivot), acc)
            for cyc in _induced_cycles_through(adjmask, free, pivot):
                if 1 + best(free & ~cyc) == best(free):
                    trace_all(free & ~cyc, acc + [cyc])

        trace_all(full, [])
    return value, one, all_sols


def verify_solution(g, cycles: Sequence[Sequence[int]]) -> bool:
    """Each reported cycle is a cycle of g; vertex sets pairwise disjoint."""
    used = set()
    for cyc in cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            return False
        for v in cyc:
            if v in used or not (0 <= v < g.n):
                return False
            used.add(v)
        for i, v in enumerate(cyc):
            w = cyc[(i + 1) % len(cyc)]
            if w not in g.adj[v]:
                return False
    return True

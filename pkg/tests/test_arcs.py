"""Tests for circular-arc pairings, crossing graphs, and K_{z,z}-free
enumeration.  Oracles: geometric chord crossings on the unit circle, an
exhaustive two-sided biclique search, and filter-all-matchings enumeration."""

from __future__ import annotations

import math
import random
from itertools import combinations

import pytest

from diskpack.arcs import (
    CACGraph,
    CircularPairing,
    PairingError,
    all_pairings,
    cac_graph,
    enumerate_kzz_free,
    enumerate_kzz_free_oracle,
    is_kzz_free,
    pairs_cross,
)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def double_factorial(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


# ---------------------------------------------------------------------------
# Pairings and crossing graphs
# ---------------------------------------------------------------------------


def test_pairing_validation():
    p = CircularPairing.of([(3, 1), (2, 4)])
    assert p.m == 2 and p.pairs == ((1, 3), (2, 4))
    with pytest.raises(PairingError):
        CircularPairing.of([(1, 2), (2, 3)])  # shared endpoint
    with pytest.raises(PairingError):
        CircularPairing.of([(1, 2), (3, 5)])  # not 1..2m


def test_cac_graph_examples():
    assert cac_graph(CircularPairing.of([(1, 2), (3, 4)])).edges == ()
    assert cac_graph(CircularPairing.of([(1, 4), (2, 3)])).edges == ()  # nested
    assert cac_graph(CircularPairing.of([(1, 3), (2, 4)])).edges == ((0, 1),)


def _chords_cross_geometric(p, q, m):
    """Independent oracle: chords between points on the unit circle."""
    def pt(i):
        a = 2 * math.pi * i / (2 * m)
        return (math.cos(a), math.sin(a))

    def orient(a, b, c):
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (d > 0) - (d < 0)

    a, b = pt(p[0]), pt(p[1])
    c, d = pt(q[0]), pt(q[1])
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


@pytest.mark.parametrize("seed", range(5))
def test_cac_graph_matches_geometric_oracle(seed):
    rng = random.Random(seed)
    m = 6
    pts = list(range(1, 2 * m + 1))
    rng.shuffle(pts)
    pairing = CircularPairing.of([(pts[2 * i], pts[2 * i + 1]) for i in range(m)])
    g = cac_graph(pairing)
    want = {
        (i, j)
        for i, j in combinations(range(m), 2)
        if _chords_cross_geometric(pairing.pairs[i], pairing.pairs[j], m)
    }
    assert set(g.edges) == want


# ---------------------------------------------------------------------------
# K_{z,z}-freeness
# ---------------------------------------------------------------------------


def _kzz_free_oracle(g: CACGraph, z: int) -> bool:
    adj = g.adjacency()
    for left in combinations(range(g.n), z):
        for right in combinations([v for v in range(g.n) if v not in left], z):
            if all(b in adj[a] for a in left for b in right):
                return False
    return True


def test_kzz_free_edge_cases():
    empty = CACGraph(n=3, edges=())
    assert is_kzz_free(empty, 1)
    one = CACGraph(n=2, edges=((0, 1),))
    assert not is_kzz_free(one, 1)
    with pytest.raises(ValueError):
        is_kzz_free(empty, 0)


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("z", [2, 3])
def test_kzz_free_matches_subset_oracle(seed, z):
    rng = random.Random(1000 * z + seed)
    pts = list(range(1, 13))
    rng.shuffle(pts)
    pairing = CircularPairing.of([(pts[2 * i], pts[2 * i + 1]) for i in range(6)])
    g = cac_graph(pairing)
    assert is_kzz_free(g, z) == _kzz_free_oracle(g, z)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def test_all_pairings_count():
    assert sum(1 for _ in all_pairings(4)) == double_factorial(7)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("z", [1, 2, 3])
def test_enumeration_matches_filter_oracle(m, z):
    fast = enumerate_kzz_free(m, z)
    slow = enumerate_kzz_free_oracle(m, z)
    assert len(fast) == len({p.pairs for p in fast})  # no duplicates
    assert {p.pairs for p in fast} == {p.pairs for p in slow}
    # Sorted output.
    assert [p.pairs for p in fast] == sorted(p.pairs for p in fast)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_enumeration_counts(m):
    counts = [len(enumerate_kzz_free(m, z)) for z in (1, 2, 3)]
    assert counts[0] == catalan(m)
    assert counts == sorted(counts)  # monotone in z
    if m <= 3:
        assert counts[-1] == double_factorial(2 * m - 1)


def test_enumeration_growth_bound():
    # Single-exponential trend: counts stay below B^(2m) for a fitted base.
    for m in range(1, 6):
        assert len(enumerate_kzz_free(m, 2)) <= 2.5 ** (2 * m)


def test_enumeration_deterministic():
    a = enumerate_kzz_free(4, 2)
    b = enumerate_kzz_free(4, 2)
    assert [p.pairs for p in a] == [p.pairs for p in b]


def test_oracle_limit():
    with pytest.raises(PairingError):
        enumerate_kzz_free_oracle(9, 1)

import json
from fractions import Fraction
from math import log2

from diskpack.geometry import QF
from diskpack.gridmap import build_map, compute_constants, neighboring_cells
from diskpack.sparsifier import (
    EK_GEDGE,
    EK_GRID,
    EK_VIRTUAL,
    VK_CORNER,
    VK_CROSS,
    VK_GVERTEX,
    VK_VIRTUAL,
    MapSparsifier,
    all_h_weights,
    build_sparsifier,
    connectify,
    contract_to_h3,
    count_proper_crossings,
    h_weights,
    vertex_weight,
)
from diskpack.udg import Point, build_udg
from tests.util import random_udg


def F(*args):
    return Fraction(*args)


def _k4_plus(points=()):
    base = [
        Point.of(F(0), F(0)),
        Point.of(F(1, 2), F(0)),
        Point.of(F(0), F(1, 2)),
        Point.of(F(1, 2), F(1, 2)),
    ]
    return build_udg(base + list(points))


def test_clique_cluster_boundary_only():
    g = _k4_plus()
    assert all(g.degree(v) == 3 for v in range(4))
    gmap = build_map(g)
    consts = compute_constants(gmap)
    sp = build_sparsifier(g, gmap, consts)
    # Only grid boundary edges, only corner vertices, no crossings.
    assert all(k == EK_GRID for k in sp.ekind)
    assert all(k == VK_CORNER for k in sp.vkind)
    assert count_proper_crossings(sp.coords, sp.edges) == 0
    # Independent count: boundary sides of the union of alpha-neighborhoods.
    covered = set()
    for v in range(g.n):
        covered.update(neighboring_cells(gmap.cell_of[v], consts.alpha))
    sides = set()
    for (i, j) in covered:
        for s in ((("H", i, j)), ("H", i, j + 1), ("V", i, j), ("V", i + 1, j)):
            sides.add(s)
    assert sp.m == len(sides)


def test_two_low_degree_vertices():
    g = build_udg([Point.of(F(0), F(0)), Point.of(F(1, 2), F(0))])
    gmap = build_map(g)
    sp = build_sparsifier(g, gmap)
    assert sp.m == 1 and sp.ekind == [EK_GEDGE]
    assert sorted(sp.vkind) == [VK_GVERTEX, VK_GVERTEX]


def test_crossing_promotion():
    # A clique cluster creates covered cells; a far away degree-1 pair whose
    # edge crosses the covered boundary gets subdivided at cross vertices.
    pair = [Point.of(F(5, 2), F(1, 10)), Point.of(F(13, 4), F(1, 10))]
    g = _k4_plus(pair)
    assert g.degree(4) == 1 and g.degree(5) == 1
    gmap = build_map(g)
    sp = build_sparsifier(g, gmap)
    crosses = [v for v in range(sp.n) if sp.vkind[v] == VK_CROSS]
    assert crosses, "expected the pair edge to cross the covered boundary"
    deg = sp.degrees()
    for v in crosses:
        assert deg[v] == 4  # both the grid side and the G-edge are split
    assert count_proper_crossings(sp.coords, sp.edges) == 0
    # The G-edge survives as a chain of gedge pieces.
    pieces = [e for e in range(sp.m) if sp.ekind[e] == EK_GEDGE]
    assert len(pieces) == len(crosses) + 1


def _toy(coords, edges):
    sp = MapSparsifier()
    for i, (x, y) in enumerate(coords):
        sp.add_vertex(("t", i), (QF.of(F(x)), QF.of(F(y))), VK_CORNER, None)
    for (u, v) in edges:
        sp.add_edge(u, v, EK_GRID, None)
    return sp


def test_contract_theta_graph():
    # Two degree-3 vertices joined by three chains with internal vertices.
    sp = _toy(
        [(-2, 0), (2, 0), (0, 2), (0, 0), (0, -2)],
        [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)],
    )
    h3 = contract_to_h3(sp)
    assert h3.hvert == [0, 1]
    assert sorted(h3.pg.edges) == [(0, 1), (0, 1), (0, 1)]
    assert not h3.forbidden and not h3.designated
    assert h3.uncontract_edges() == set(range(sp.m))
    h3.pg.check()


def test_contract_pure_cycle():
    sp = _toy(
        [(1, 0), (0, 1), (-1, 0), (0, -1)],
        [(0, 1), (1, 2), (2, 3), (3, 0)],
    )
    h3 = contract_to_h3(sp)
    assert len(h3.hvert) == 2 and len(h3.designated) == 2
    assert len(h3.pg.edges) == 2  # two parallel edges closing the cycle
    assert h3.uncontract_edges() == set(range(sp.m))
    h3.pg.check()


def test_contract_pendant_path():
    # Square cycle with a two-edge pendant path at vertex 0.
    sp = _toy(
        [(1, 0), (0, 1), (-1, 0), (0, -1), (2, 0), (3, 0)],
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)],
    )
    h3 = contract_to_h3(sp)
    assert len(h3.forbidden) == 1
    fc = h3.forbidden[0]
    assert fc.anchor == 0 and sorted(fc.vertices) == [4, 5]
    assert sorted(fc.edges) == [4, 5]
    # Cycle part survives; pendant edges are not in any chain.
    assert h3.uncontract_edges() == {0, 1, 2, 3}
    h3.pg.check()


def test_contract_self_loop_chain_split():
    # A triangle with one extra chain from vertex 0 back to itself.
    sp = _toy(
        [(0, 0), (2, 0), (1, 2), (-1, 1), (-1, -1)],
        [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
    )
    h3 = contract_to_h3(sp)
    # The petal chain is split at a designated middle vertex; no self-loops.
    assert all(u != v for u, v in h3.pg.edges)
    assert h3.designated
    assert h3.uncontract_edges() == set(range(sp.m))
    h3.pg.check()


def test_connectify_and_roundtrip():
    for seed in (1, 5):
        g = random_udg(40, seed, cluster=True)
        gmap = build_map(g)
        consts = compute_constants(gmap)
        sp = build_sparsifier(g, gmap, consts)
        spc = connectify(sp)
        assert len(spc.components()) == 1
        assert count_proper_crossings(spc.coords, spc.edges) == 0
        # Original geometry survives (bridge subdivision preserves kinds).
        for kind in (EK_GRID, EK_GEDGE):
            before = sum(1 for k in sp.ekind if k == kind)
            after = sum(1 for k in spc.ekind if k == kind)
            assert after >= before
        new_v = [v for v in range(spc.n) if v >= sp.n]
        assert all(spc.vkind[v] == VK_VIRTUAL for v in new_v)
        pg = spc.plane()
        pg.check()
        h3 = contract_to_h3(spc)
        h3.pg.check()
        # Every H edge is either contracted into exactly one chain or peeled
        # into exactly one forbidden curve.
        chain_edges = []
        for eids in h3.chain_edges:
            chain_edges.extend(eids)
        assert len(chain_edges) == len(set(chain_edges))
        forb_edges = []
        for fc in h3.forbidden:
            forb_edges.extend(fc.edges)
        assert len(forb_edges) == len(set(forb_edges))
        assert set(chain_edges) | set(forb_edges) == set(range(spc.m))
        assert not set(chain_edges) & set(forb_edges)
        # Forbidden curves touch the contracted graph at one vertex only.
        core = set()
        for ch in h3.chains:
            core.update(ch)
        for fc in h3.forbidden:
            assert not set(fc.vertices) & core
            assert fc.anchor in core
        # Non-designated contracted vertices have H-degree >= 3.
        deg = spc.degrees()
        for v in h3.hvert:
            if v not in h3.designated:
                assert deg[v] >= 3


def weight_oracle(gmap, alpha, qpt):
    """Independent recomputation with explicit L1 ball enumeration."""
    ci, cj = gmap.locate_scaled(qpt)
    acc = 1.0
    for di in range(-alpha, alpha + 1):
        for dj in range(-alpha, alpha + 1):
            if abs(di) + abs(dj) <= alpha:
                acc += log2(1 + gmap.count((ci + di, cj + dj)))
    return acc


def test_weights_match_oracle():
    g = random_udg(35, 11, cluster=True)
    gmap = build_map(g)
    consts = compute_constants(gmap)
    sp = connectify(build_sparsifier(g, gmap, consts))
    ws = all_h_weights(sp, gmap, consts.alpha)
    assert all(w >= 1.0 for w in ws)
    for v in range(0, sp.n, 7):
        assert abs(ws[v] - weight_oracle(gmap, consts.alpha, sp.coords[v])) < 1e-9
    h3 = contract_to_h3(sp)
    w3 = h_weights(h3, gmap, consts.alpha)
    assert max(w3, default=1.0) <= max(ws) + 1e-12


def test_complexity_regression():
    # Fitted constants: deg>=3 H vertices <= C1*ell, sum of squared H3
    # weights <= C2*ell, wmax <= C3*log2(ell+2); fitted on small instances,
    # held on a larger one.
    C1, C2, C3 = 220.0, 9000.0, 12.0
    for n, seed in ((30, 2), (40, 3), (80, 4)):
        g = random_udg(n, seed, cluster=True)
        ell = sum(1 for v in range(g.n) if g.degree(v) >= 3)
        if ell == 0:
            continue
        gmap = build_map(g)
        consts = compute_constants(gmap)
        sp = connectify(build_sparsifier(g, gmap, consts))
        deg = sp.degrees()
        d3 = sum(1 for v in range(sp.n) if deg[v] >= 3)
        assert d3 <= C1 * ell
        h3 = contract_to_h3(sp)
        w3 = h_weights(h3, gmap, consts.alpha)
        assert sum(w * w for w in w3) <= C2 * ell
        assert max(w3) <= C3 * log2(ell + 2)


def test_exports():
    g = random_udg(20, 6, cluster=True)
    gmap = build_map(g)
    sp = connectify(build_sparsifier(g, gmap))
    data = json.loads(sp.to_json())
    assert len(data["vertices"]) == sp.n and len(data["edges"]) == sp.m
    assert sp.to_svg().startswith("<svg")
    h3 = contract_to_h3(sp)
    data3 = json.loads(h3.to_json())
    assert len(data3["vertices"]) == len(h3.hvert)
    assert h3.to_svg().startswith("<svg")

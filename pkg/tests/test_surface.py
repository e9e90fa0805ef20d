import math

from diskpack.gridmap import build_map, compute_constants
from diskpack.sparsifier import build_sparsifier, connectify, contract_to_h3, h_weights
from diskpack.surface import (
    boundary_noose_walks,
    build_surface_decomposition,
    cut_piece_by_cycle,
    hole_faces_of_piece,
    hole_separator_cycle,
    piece_boundary_vertices,
    piece_rank,
    piece_subgraph,
    piece_vertices,
    quad_adjacency,
    quad_components,
    vertex_separator_cycle,
)
from tests.util import random_triangulation, random_udg, tube_triangulation


def check_noose_walks(h, walks):
    for walk in walks:
        assert len(walk) % 2 == 0 and len(walk) >= 2
        for i in range(0, len(walk), 2):
            kv, v = walk[i]
            kf, f = walk[(i + 1) % len(walk)]
            assert kv == "v" and kf == "f"
            assert v in {h.tail[d] for d in h.faces[f]}
            kf2, f2 = walk[i - 1]
            assert kf2 == "f"
            assert v in {h.tail[d] for d in h.faces[f2]}


def test_single_quad_piece():
    h = random_triangulation(30, 0)
    piece = frozenset([5])
    assert piece_vertices(h, piece) == set(h.edges[5])
    assert piece_boundary_vertices(h, piece) == set(h.edges[5])
    assert piece_rank(h, piece) == 1
    walks = boundary_noose_walks(h, piece)
    assert len(walks) == 1 and len(walks[0]) == 4
    check_noose_walks(h, walks)


def test_annulus_piece_has_rank_two():
    h = tube_triangulation(10)
    rings = set(range(3 * 3, 3 * 7))  # vertices of rings 3..6
    piece = frozenset(
        e for e, (u, v) in enumerate(h.edges) if u in rings and v in rings
    )
    adj = quad_adjacency(h)
    assert len(quad_components(set(piece), adj)) == 1
    assert piece_rank(h, piece, adj) == 2
    walks = boundary_noose_walks(h, piece)
    assert len(walks) == 2
    check_noose_walks(h, walks)


def test_walk_count_bounds_rank():
    # The complement-side boundary walks overcount the rank only at pinch
    # points; on random connected quad sets they must never undercount.
    import random

    for seed in range(6):
        h = random_triangulation(40, 100 + seed)
        adj = quad_adjacency(h)
        rng = random.Random(seed)
        start = rng.randrange(len(h.edges))
        piece = {start}
        frontier = [start]
        target = rng.randrange(5, len(h.edges) - 5)
        while frontier and len(piece) < target:
            e = frontier.pop(rng.randrange(len(frontier)))
            for e2 in adj[e]:
                if e2 not in piece:
                    piece.add(e2)
                    frontier.append(e2)
        walks = boundary_noose_walks(h, piece)
        check_noose_walks(h, walks)
        assert len(walks) >= piece_rank(h, piece, adj)


def test_vertex_separator_cut_partitions():
    for seed in range(4):
        h = random_triangulation(60, 200 + seed)
        piece = frozenset(range(len(h.edges)))
        sub, vmap, members = piece_subgraph(h, piece)
        assert sub.n == h.n and len(members) == len(h.edges)
        c_sub = [1.0] * sub.n
        tg, cyc, res = vertex_separator_cycle(sub, c_sub)
        children = cut_piece_by_cycle(h, sub, members, tg, cyc)
        assert len(children) >= 2
        adj = quad_adjacency(h)
        union = set()
        for ch in children:
            assert ch and not (union & ch)
            union |= ch
            assert len(quad_components(set(ch), adj)) == 1
            # Rank can only grow by one when a piece is cut once.
            assert piece_rank(h, ch, adj) <= piece_rank(h, piece, adj) + 1
        assert union == set(piece)
        # Real-vertex weight balance of the separator carries over: no child
        # may contain almost all vertices' worth of weight outside the cycle.
        cyc_hosts = {
            v for v in piece_vertices(h, piece)
            if vmap[v] in set(cyc)
        }
        total = h.n
        for ch in children:
            inner = piece_vertices(h, ch) - piece_boundary_vertices(h, ch)
            inner -= cyc_hosts
            assert 9 * len(inner) <= 8 * total


def _independent_quads(h, adj, count, rng):
    """Pairwise non-adjacent quads whose removal keeps the rest connected."""
    all_edges = set(range(len(h.edges)))
    picked = []
    banned = set()
    order = sorted(all_edges)
    rng.shuffle(order)
    for e in order:
        if e in banned:
            continue
        trial = picked + [e]
        rest = all_edges - set(trial)
        if len(quad_components(rest, adj)) == 1:
            picked.append(e)
            banned.add(e)
            banned.update(adj[e])
            if len(picked) == count:
                return picked
    raise AssertionError("could not find independent quads")


def test_hole_separator_splits_nine_holes():
    import random

    h = random_triangulation(100, 42)
    adj = quad_adjacency(h)
    holes = _independent_quads(h, adj, 9, random.Random(7))
    piece = frozenset(set(range(len(h.edges))) - set(holes))
    assert piece_rank(h, piece, adj) == 9
    sub, vmap, members = piece_subgraph(h, piece)
    hole_faces = hole_faces_of_piece(h, piece, sub, members, adj)
    assert len(hole_faces) == 9
    tg, cyc, res = hole_separator_cycle(sub, [1.0] * sub.n, hole_faces)
    children = cut_piece_by_cycle(h, sub, members, tg, cyc)
    assert len(children) >= 2
    union = set()
    retained_counts = []
    for ch in children:
        union |= ch
        sibling = set(piece) - set(ch)
        rest = set(range(len(h.edges))) - set(ch)
        retained = 0
        for comp in quad_components(rest, adj):
            if comp & set(holes) and not (comp & sibling):
                retained += 1
        retained_counts.append(retained)
        # Each side keeps at most an 8/9 share of the holes.
        assert retained <= 8
    assert union == set(piece)
    assert sum(retained_counts) >= 1


def check_decomposition(sd):
    sd.check()
    h = sd.h
    assert len(sd.leaves()) == len(h.edges)
    adj = quad_adjacency(h)
    for nd in sd.nodes:
        # Exact rank never exceeds the recorded boundary curve count.
        assert piece_rank(h, nd.piece, adj) <= max(nd.boundary_curves, 1) or (
            nd.boundary_curves == 0 and piece_rank(h, nd.piece, adj) == 0
        )
    for i, nd in enumerate(sd.nodes):
        if i:
            parent = sd.nodes[nd.parent]
            assert piece_rank(h, nd.piece, adj) <= piece_rank(
                h, parent.piece, adj
            ) + 1


def test_decomposition_small_hosts():
    for n, seed in ((12, 1), (25, 2), (60, 3)):
        h = random_triangulation(n, seed)
        c = [1.0] * h.n
        sd = build_surface_decomposition(h, c, base_threshold=16)
        check_decomposition(sd)
        kinds = {nd.diagnostics.get("split") for nd in sd.nodes if nd.children}
        if n >= 25:
            assert "vertex-sep" in kinds


def test_decomposition_triggers_hole_separator():
    h = random_triangulation(90, 5)
    c = [1.0] * h.n
    sd = build_surface_decomposition(h, c, base_threshold=12, rank_threshold=1)
    check_decomposition(sd)
    kinds = {nd.diagnostics.get("split") for nd in sd.nodes if nd.children}
    assert "hole-sep" in kinds or all(
        nd.boundary_curves <= 1 for nd in sd.nodes
    )


def test_decomposition_determinism():
    h = random_triangulation(50, 9)
    c = [1.0] * h.n
    sd1 = build_surface_decomposition(h, c, base_threshold=16)
    sd2 = build_surface_decomposition(h, c, base_threshold=16)
    assert [nd.piece for nd in sd1.nodes] == [nd.piece for nd in sd2.nodes]
    assert [nd.kind for nd in sd1.nodes] == [nd.kind for nd in sd2.nodes]


def test_decomposition_width_and_depth_regression():
    # Fitted constants on sphere triangulations with unit weights: the
    # decomposition width stays within KW * sqrt(sum c^2) + base additive
    # term, and separator levels keep the depth O(n) dominated by peeling.
    KW = 14.0
    for n, seed in ((40, 11), (80, 12), (160, 13)):
        h = random_triangulation(n, seed)
        c = [1.0] * h.n
        sd = build_surface_decomposition(h, c, base_threshold=24)
        check_decomposition(sd)
        cstar = math.sqrt(sum(x * x for x in c))
        assert sd.width() <= KW * cstar + 24


def test_decomposition_on_contracted_sparsifier():
    for seed in (3, 8):
        g = random_udg(40, seed, cluster=True)
        gmap = build_map(g)
        consts = compute_constants(gmap)
        sp = connectify(build_sparsifier(g, gmap, consts))
        h3 = contract_to_h3(sp)
        h = h3.pg
        c = h_weights(h3, gmap, consts.alpha)
        sd = build_surface_decomposition(h, c, base_threshold=8)
        check_decomposition(sd)
        assert sd.width() >= 0.0

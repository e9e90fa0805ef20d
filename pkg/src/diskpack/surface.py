"""Recursive surface decomposition of a plane graph into quad pieces.

A piece of the host plane graph is represented combinatorially as a set of
host edges.  Each edge e owns a closed "quad": the union of the two face
sectors bordering e, bounded by the four vertex-to-face radial curves at
its corners.  The quads tile the sphere, so a set of edges is a region
whose boundary runs only along radial curves — it meets the graph
exclusively at vertices, which is exactly the condition a decomposition
boundary must satisfy.  Two quads are adjacent when they share a corner
(the radial curve between consecutive darts of a face walk); a piece is
interior-connected iff its quads are corner-connected.

The decomposition recursively cuts a piece with a balanced cycle separator
of its triangulated subgraph:

  * vertex separator: balance-weight equals cycle-weight on real vertices,
    so each side loses a constant fraction of the total cycle-weight;
  * hole separator (when a piece has many holes): balance-weight 1 on the
    auxiliary vertex of every subgraph face that contains a hole of the
    piece, so each side loses a constant fraction of the holes;
  * base case (few vertices): peel one quad at a time.

Cutting happens in the triangulated subgraph.  The stellation's auxiliary
edges are exactly the radial curves bounding the quads, so the separator
cycle is a set of triangulation edges and the cut is purely combinatorial:
triangles glue across non-cycle edges, every member quad follows the
triangle on the left of its first dart, and two quads stay joined at a
corner only when both corner triangles agree with both quads' sides.

Dangling trees that were peeled off before contraction live inside single
angular gaps of the host; boundary curves here run through cut-open faces
(radial curves can always be drawn around a tree attached to a face
boundary), so they meet such trees at most at their anchor vertices and
never constrain the construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from diskpack.planegraph import PlaneGraph
from diskpack.separator import SeparatorError, balanced_small_separator

Quads = FrozenSet[int]


class SurfaceError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Piece combinatorics
# ---------------------------------------------------------------------------


def quad_adjacency(h: PlaneGraph) -> List[List[int]]:
    """Corner adjacency between quads: adj[e] lists edges sharing a corner
    with e (deduplicated)."""
    adj: List[Set[int]] = [set() for _ in range(len(h.edges))]
    for walk in h.faces:
        k = len(walk)
        for i in range(k):
            e1 = walk[i] >> 1
            e2 = walk[(i + 1) % k] >> 1
            if e1 != e2:
                adj[e1].add(e2)
                adj[e2].add(e1)
    return [sorted(s) for s in adj]


def quad_components(quads: Set[int], adj: List[List[int]]) -> List[Set[int]]:
    """Connected components of a quad set under shared-corner adjacency."""
    seen: Set[int] = set()
    comps = []
    for s in sorted(quads):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            e = stack.pop()
            for e2 in adj[e]:
                if e2 in quads and e2 not in seen:
                    seen.add(e2)
                    comp.add(e2)
                    stack.append(e2)
        comps.append(comp)
    return comps


def piece_vertices(h: PlaneGraph, quads) -> Set[int]:
    out: Set[int] = set()
    for e in quads:
        u, v = h.edges[e]
        out.add(u)
        out.add(v)
    return out


def piece_boundary_vertices(h: PlaneGraph, quads) -> Set[int]:
    """Vertices incident to both a member and a non-member quad."""
    member = set(quads)
    if len(member) == len(h.edges):
        return set()
    out: Set[int] = set()
    for v in piece_vertices(h, member):
        if any((d >> 1) not in member for d in h.rot[v]):
            out.add(v)
    return out


def piece_rank(h: PlaneGraph, quads, adj: Optional[List[List[int]]] = None) -> int:
    """Exact rank: number of connected components of the open complement
    (which coincide with the corner-components of the non-member quads)."""
    if adj is None:
        adj = quad_adjacency(h)
    rest = set(range(len(h.edges))) - set(quads)
    return len(quad_components(rest, adj))


def boundary_noose_walks(h: PlaneGraph, quads) -> List[List[Tuple[str, int]]]:
    """Closed boundary curves of the piece as alternating ("v", vertex) /
    ("f", face) sequences, perturbed towards the complement side.  There is
    one walk per complement component except at pinch points (a complement
    component touching itself at a vertex or face point splits there), so
    len(walks) is an upper bound on the rank, exact when no curve touches
    another or itself."""
    member = set(quads)
    boundary: Set[int] = set()
    face_pair: Dict[int, int] = {}
    vert_pair: Dict[int, int] = {}
    faces = {h.face_of[2 * e + s] for e in member for s in (0, 1)}
    for f in faces:
        walk = h.faces[f]
        k = len(walk)
        flags = [(d >> 1) in member for d in walk]
        for i in range(k):
            if flags[i] != flags[(i + 1) % k]:
                boundary.add(walk[i])
        for i in range(k):
            # i = end of a maximal non-member run.
            if flags[i] or not flags[(i + 1) % k]:
                continue
            j = i
            while not flags[j % k]:
                j -= 1
            face_pair[walk[j % k]] = walk[i]
            face_pair[walk[i]] = walk[j % k]
    for v in piece_vertices(h, member):
        ring = h.rot[v]
        k = len(ring)
        flags = [(e >> 1) in member for e in ring]
        if all(flags):
            continue
        # Corner between outgoing ring[i] and ring[i+1] is the corner of
        # dart twin(ring[i+1]).
        for i in range(k):
            if flags[i] or not flags[(i + 1) % k]:
                continue
            j = i
            while not flags[j % k]:
                j -= 1
            c1 = ring[(j + 1) % k] ^ 1
            c2 = ring[(i + 1) % k] ^ 1
            vert_pair[c1] = c2
            vert_pair[c2] = c1
    walks = []
    unused = set(boundary)
    while unused:
        c0 = min(unused)
        walk: List[Tuple[str, int]] = []
        c = c0
        while True:
            unused.discard(c)
            walk.append(("v", h.head[c]))
            c = face_pair[c]
            walk.append(("f", h.face_of[c]))
            unused.discard(c)
            c = vert_pair[c]
            if c == c0:
                break
        walks.append(walk)
    return walks


def piece_subgraph(h: PlaneGraph, quads):
    """Plane subgraph induced by the member edges, with inherited rotation.
    Returns (subgraph, host->sub vertex map, sorted member edge list)."""
    members = sorted(quads)
    verts = sorted(piece_vertices(h, quads))
    vmap = {v: i for i, v in enumerate(verts)}
    emap = {e: i for i, e in enumerate(members)}
    edges = [(vmap[h.edges[e][0]], vmap[h.edges[e][1]]) for e in members]
    rot: List[List[int]] = []
    for v in verts:
        ring = []
        for d in h.rot[v]:
            e = d >> 1
            if e in emap:
                ring.append(2 * emap[e] + (d & 1))
        rot.append(ring)
    return PlaneGraph(len(verts), edges, rot), vmap, members


# ---------------------------------------------------------------------------
# Separator-driven cut
# ---------------------------------------------------------------------------


def _gamma_edges(tg: PlaneGraph, cycle: Sequence[int]) -> Set[int]:
    """Edge set realizing a vertex cycle in a plane multigraph: between
    consecutive cycle vertices the smallest-id connecting edge (any choice
    of parallel edge draws a simple closed curve)."""
    first: Dict[Tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(tg.edges):
        key = (min(u, v), max(u, v))
        if key not in first:
            first[key] = eid
    out = set()
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        eid = first.get((min(a, b), max(a, b)))
        if eid is None:
            raise SurfaceError("separator cycle uses a missing edge")
        out.add(eid)
    return out


def cut_piece_by_cycle(
    h: PlaneGraph,
    sub: PlaneGraph,
    members: List[int],
    tg: PlaneGraph,
    cycle: Sequence[int],
) -> List[Quads]:
    """Split a piece along a separator cycle of its triangulated subgraph
    `tg` (whose vertex/edge lists extend `sub`'s).  Returns child quad
    sets, each corner-connected; together they partition the piece."""
    gamma = _gamma_edges(tg, cycle)
    nf = len(tg.faces)
    comp = [-1] * nf
    cid = 0
    for s in range(nf):
        if comp[s] != -1:
            continue
        comp[s] = cid
        stack = [s]
        while stack:
            f = stack.pop()
            for d in tg.faces[f]:
                if (d >> 1) in gamma:
                    continue
                g = tg.face_of[d ^ 1]
                if comp[g] == -1:
                    comp[g] = cid
                    stack.append(g)
        cid += 1
    # The quad of member edge i follows the triangle left of dart 2i.
    side = [comp[tg.face_of[2 * i]] for i in range(len(members))]

    # Two quads stay joined only at genuine host corners (consecutive darts
    # of a host face walk; subgraph-face corners with complement area in
    # between do not connect the region) and only when both corner
    # triangles agree with both quads' sides: the corner's auxiliary edge
    # is the radial curve between the quads, so a cycle running along it —
    # or a quad pushed to the other side of a cycle edge — severs it.
    emap = {e: i for i, e in enumerate(members)}
    adj: List[List[int]] = [[] for _ in range(len(members))]
    for e in members:
        for d in (2 * e, 2 * e + 1):
            dn = h.fnext(d)
            if (dn >> 1) not in emap:
                continue
            i1 = emap[e]
            i2 = emap[dn >> 1]
            if i1 == i2:
                continue
            sd = 2 * i1 + (d & 1)
            sd2 = 2 * i2 + (dn & 1)
            t1 = comp[tg.face_of[sd]]
            t2 = comp[tg.face_of[sd2]]
            if t1 == t2 == side[i1] == side[i2]:
                adj[i1].append(i2)
                adj[i2].append(i1)
    seen = [False] * len(members)
    children: List[Quads] = []
    for s in range(len(members)):
        if seen[s]:
            continue
        group = [s]
        seen[s] = True
        stack = [s]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    group.append(j)
                    stack.append(j)
        children.append(frozenset(members[i] for i in group))
    return children


# ---------------------------------------------------------------------------
# Separators on a piece
# ---------------------------------------------------------------------------


def hole_faces_of_piece(
    h: PlaneGraph,
    quads,
    sub: PlaneGraph,
    members: List[int],
    adj: Optional[List[List[int]]] = None,
) -> Set[int]:
    """Subgraph faces containing at least one hole (complement component)
    of the piece.  Every hole lies inside exactly one subgraph face because
    the subgraph contains all member edges."""
    if adj is None:
        adj = quad_adjacency(h)
    rest = set(range(len(h.edges))) - set(quads)
    hole_of: Dict[int, int] = {}
    for ci, compset in enumerate(quad_components(rest, adj)):
        for e in compset:
            hole_of[e] = ci
    emap = {e: i for i, e in enumerate(members)}
    face_of_hole: Dict[int, int] = {}
    for e in members:
        for d in (2 * e, 2 * e + 1):
            e2 = h.fnext(d) >> 1
            hid = hole_of.get(e2)
            if hid is None:
                continue
            sd = 2 * emap[e] + (d & 1)
            f = sub.face_of[sd]
            prev = face_of_hole.setdefault(hid, f)
            if prev != f:
                raise SurfaceError("hole seen from two subgraph faces")
    if len(face_of_hole) != len(set(hole_of.values())):
        raise SurfaceError("hole without a member-side corner")
    return set(face_of_hole.values())


def vertex_separator_cycle(sub: PlaneGraph, c_sub: Sequence[float]):
    """Separator cycle of the triangulated subgraph balancing cycle-weight:
    balance-weight equals cycle-weight on real vertices, zero on auxiliary
    vertices (which get cycle-weight 1).  Returns (triangulated graph,
    cycle vertices, raw separator result)."""
    tg, _aux = sub.triangulate_with_aux()
    c_t = list(c_sub) + [1.0] * (tg.n - sub.n)
    b_t = list(c_sub) + [0.0] * (tg.n - sub.n)
    res = balanced_small_separator(tg, c_t, b_t)
    return tg, res.vertices, res


def hole_separator_cycle(
    sub: PlaneGraph, c_sub: Sequence[float], hole_faces: Set[int]
):
    """Separator cycle balancing holes: balance-weight 1 on the auxiliary
    vertex of every subgraph face containing a hole of the piece."""
    tg, aux_of_face = sub.triangulate_with_aux()
    c_t = list(c_sub) + [1.0] * (tg.n - sub.n)
    b_t = [0.0] * tg.n
    for f in hole_faces:
        b_t[aux_of_face[f]] = 1.0
    res = balanced_small_separator(tg, c_t, b_t)
    return tg, res.vertices, res


# ---------------------------------------------------------------------------
# Recursive construction
# ---------------------------------------------------------------------------


@dataclass
class SurfaceNode:
    piece: Quads
    parent: int
    kind: str  # root / vertex-sep / hole-sep / peel / binarize
    children: List[int] = field(default_factory=list)
    boundary: Set[int] = field(default_factory=set)
    weight: float = 0.0
    boundary_curves: int = 0
    diagnostics: dict = field(default_factory=dict)


@dataclass
class SurfaceDecomposition:
    h: PlaneGraph
    c: List[float]
    nodes: List[SurfaceNode]

    @property
    def root(self) -> int:
        return 0

    def leaves(self) -> List[int]:
        return [i for i, nd in enumerate(self.nodes) if not nd.children]

    def width(self) -> float:
        return max((nd.weight for nd in self.nodes), default=0.0)

    def depth(self) -> int:
        d = [0] * len(self.nodes)
        best = 0
        for i, nd in enumerate(self.nodes):
            if i:
                d[i] = d[nd.parent] + 1
                best = max(best, d[i])
        return best

    def check(self):
        """Boundaries along radial curves are structural (quad pieces);
        verify the partition property, single-edge leaves, binary arity,
        interior-connectivity and boundary bookkeeping."""
        h = self.h
        adj = quad_adjacency(h)
        assert self.nodes[0].piece == frozenset(range(len(h.edges)))
        for i, nd in enumerate(self.nodes):
            if nd.children:
                assert len(nd.children) == 2, (i, nd.children)
                a, b = (self.nodes[j].piece for j in nd.children)
                assert a | b == nd.piece and not (a & b), i
                for j in nd.children:
                    assert self.nodes[j].parent == i
            else:
                assert len(nd.piece) == 1  # exactly one host edge
                assert len(piece_vertices(h, nd.piece)) <= 2
            assert len(quad_components(set(nd.piece), adj)) == 1, i
            assert nd.boundary == piece_boundary_vertices(h, nd.piece)
            assert abs(nd.weight - sum(self.c[v] for v in nd.boundary)) < 1e-9
        return True


def _detach_order(children: List[Quads], adj: List[List[int]]) -> List[int]:
    """Order in which to detach children so that the union of those not yet
    detached stays corner-connected: repeatedly remove a non-separating
    child of the child adjacency graph (smallest index first)."""
    k = len(children)
    owner: Dict[int, int] = {}
    for i, ch in enumerate(children):
        for e in ch:
            owner[e] = i
    cadj: List[Set[int]] = [set() for _ in range(k)]
    for e, i in owner.items():
        for e2 in adj[e]:
            j = owner.get(e2)
            if j is not None and j != i:
                cadj[i].add(j)
                cadj[j].add(i)
    alive = set(range(k))
    order = []
    while len(alive) > 1:
        pick = None
        for i in sorted(alive):
            rest = alive - {i}
            s = min(rest)
            seen = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in cadj[x]:
                    if y in rest and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen == rest:
                pick = i
                break
        if pick is None:
            raise SurfaceError("child adjacency graph disconnected")
        order.append(pick)
        alive.discard(pick)
    order.append(alive.pop())
    return order


def _peel_quad(quads, adj: List[List[int]]) -> int:
    """Smallest quad that is a leaf of a spanning tree of the piece's quad
    graph (removing it keeps the rest corner-connected)."""
    qs = set(quads)
    root = min(qs)
    parent = {root: root}
    stack = [root]
    while stack:
        e = stack.pop()
        for e2 in adj[e]:
            if e2 in qs and e2 not in parent:
                parent[e2] = e
                stack.append(e2)
    if len(parent) != len(qs):
        raise SurfaceError("piece is not corner-connected")
    internal = {parent[e] for e in parent if e != root}
    leaves = [e for e in qs if e not in internal and (e != root or len(qs) == 1)]
    return min(leaves)


def build_surface_decomposition(
    h: PlaneGraph,
    c: Sequence[float],
    base_threshold: int = 64,
    rank_threshold: int = 100,
) -> SurfaceDecomposition:
    """Surface decomposition of the whole sphere of h down to single-quad
    leaves.  Pieces with more than `base_threshold` vertices are split by a
    balanced cycle separator (hole separator when the rank exceeds
    `rank_threshold`, vertex separator otherwise); smaller pieces are
    peeled one quad at a time, with hole separators still kicking in on
    high rank.  Splits with several components are binarized by detaching
    one non-separating component at a time."""
    c = [float(x) for x in c]
    adj = quad_adjacency(h)
    sd = SurfaceDecomposition(h, c, [])

    def new_node(piece: Quads, parent: int, kind: str) -> int:
        nd = SurfaceNode(piece=piece, parent=parent, kind=kind)
        nd.boundary = piece_boundary_vertices(h, piece)
        nd.weight = float(sum(c[v] for v in nd.boundary))
        nd.boundary_curves = len(boundary_noose_walks(h, piece))
        sd.nodes.append(nd)
        return len(sd.nodes) - 1

    root = new_node(frozenset(range(len(h.edges))), 0, "root")
    stack = [root]
    while stack:
        t = stack.pop()
        nd = sd.nodes[t]
        piece = nd.piece
        if len(piece) <= 1:
            continue
        nverts = len(piece_vertices(h, piece))
        # The cheap curve count bounds the rank from above; compute the
        # exact rank only when the bound trips the hole trigger.
        use_hole = False
        if nd.boundary_curves > rank_threshold:
            use_hole = piece_rank(h, piece, adj) > rank_threshold
        children: Optional[List[Quads]] = None
        kind = "peel"
        if use_hole or nverts > base_threshold:
            sub, vmap, members = piece_subgraph(h, piece)
            c_sub = [0.0] * sub.n
            for v, i in vmap.items():
                c_sub[i] = c[v]
            try:
                if use_hole:
                    holes = hole_faces_of_piece(h, piece, sub, members, adj)
                    tg, cyc, _res = hole_separator_cycle(sub, c_sub, holes)
                    kind = "hole-sep"
                else:
                    tg, cyc, _res = vertex_separator_cycle(sub, c_sub)
                    kind = "vertex-sep"
                parts = cut_piece_by_cycle(h, sub, members, tg, cyc)
                if len(parts) >= 2:
                    children = parts
                else:
                    nd.diagnostics["cut_failed"] = len(parts)
            except SeparatorError as exc:
                nd.diagnostics["separator_error"] = str(exc)
        if children is None:
            kind = "peel"
            q = _peel_quad(piece, adj)
            children = [frozenset([q]), frozenset(piece - {q})]

        nd.diagnostics["split"] = kind
        order = _detach_order(children, adj)
        rem = [children[j] for j in order]
        cur = t
        while len(rem) > 1:
            rest_union: Quads = frozenset().union(*rem[1:])
            a = new_node(rem[0], cur, kind)
            b = new_node(rest_union, cur, kind if len(rem) == 2 else "binarize")
            sd.nodes[cur].children = [a, b]
            stack.append(a)
            if len(rem) == 2:
                stack.append(b)
            cur = b
            rem = rem[1:]
    return sd

"""Combinatorial plane graphs: darts, rotation systems, faces, triangulation.

Darts are oriented edges; edge i owns darts 2i (u->v) and 2i+1 (v->u).
`rot_next[d]` is the next dart with the same tail in counterclockwise order,
and face walks are orbits of d -> rot_prev[twin(d)], which traverse the face
lying on the *left* of each dart (inner faces counterclockwise, the outer
face clockwise).  Around a vertex, the angular gap between dart w and
rot_next(w) is occupied by face_of[w]; equivalently the gap before w is
face_of[twin(w)].

The corner of dart d is the angular gap of face_of[d] at head(d): the gap
between fnext(d) = rot_prev(twin(d)) and twin(d).  Corners are identified
with dart ids throughout the decomposition machinery.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from diskpack.geometry import angle_key


class PlaneGraph:
    def __init__(self, n: int, edges: Sequence[Tuple[int, int]], rot: Sequence[Sequence[int]]):
        """rot[v] lists the darts with tail v in ccw order."""
        self.n = n
        self.edges = list(edges)
        m = len(self.edges)
        self.tail = [0] * (2 * m)
        self.head = [0] * (2 * m)
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError("self-loops not supported")
            self.tail[2 * i], self.head[2 * i] = u, v
            self.tail[2 * i + 1], self.head[2 * i + 1] = v, u
        self.rot = [list(r) for r in rot]
        self.rot_next = [0] * (2 * m)
        self.rot_prev = [0] * (2 * m)
        for v, ring in enumerate(self.rot):
            if len(ring) != len(set(ring)):
                raise ValueError("repeated dart in rotation")
            for idx, d in enumerate(ring):
                if self.tail[d] != v:
                    raise ValueError("rotation lists a dart with the wrong tail")
                e = ring[(idx + 1) % len(ring)]
                self.rot_next[d] = e
                self.rot_prev[e] = d
        self._build_faces()

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def from_coords(coords, edges: Sequence[Tuple[int, int]]) -> "PlaneGraph":
        """Straight-line plane graph; rotation from exact angular sort.

        `coords[v]` is an (x, y) pair of exact numbers (Fraction or QF).
        The caller guarantees the drawing is planar (no crossings).
        """
        n = len(coords)
        rot: List[List[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            rot[u].append(2 * i)
            rot[v].append(2 * i + 1)

        for w in range(n):
            def dart_key(d, w=w):
                other = edges[d // 2][1] if d % 2 == 0 else edges[d // 2][0]
                dx = coords[other][0] - coords[w][0]
                dy = coords[other][1] - coords[w][1]
                return angle_key(dx, dy)

            rot[w].sort(key=dart_key)
        return PlaneGraph(n, edges, rot)

    def _build_faces(self):
        m2 = 2 * len(self.edges)
        self.face_of = [-1] * m2
        self.faces: List[List[int]] = []
        for d0 in range(m2):
            if self.face_of[d0] != -1:
                continue
            walk = []
            d = d0
            fid = len(self.faces)
            while self.face_of[d] == -1:
                self.face_of[d] = fid
                walk.append(d)
                d = self.rot_prev[d ^ 1]
            if d != d0:
                raise ValueError("face walk did not close")
            self.faces.append(walk)

    # -- basic accessors ------------------------------------------------------

    def twin(self, d: int) -> int:
        return d ^ 1

    def fnext(self, d: int) -> int:
        return self.rot_prev[d ^ 1]

    def fprev(self, d: int) -> int:
        return self.rot_next[d] ^ 1

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def face_vertices(self, f: int) -> List[int]:
        return [self.tail[d] for d in self.faces[f]]

    def edge_of(self, d: int) -> int:
        return d // 2

    def num_components(self) -> int:
        seen = [False] * self.n
        comps = 0
        for s in range(self.n):
            if seen[s]:
                continue
            comps += 1
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                for d in self.rot[v]:
                    w = self.head[d]
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return comps

    def check(self):
        """Euler formula and rotation consistency."""
        for d in range(2 * len(self.edges)):
            assert self.rot_prev[self.rot_next[d]] == d
        iso = sum(1 for v in range(self.n) if not self.rot[v])
        comps = self.num_components()
        # Each isolated vertex is its own component with no face contribution.
        v_eff = self.n - iso
        c_eff = comps - iso
        if v_eff:
            assert v_eff - len(self.edges) + len(self.faces) == 1 + c_eff, (
                v_eff,
                len(self.edges),
                len(self.faces),
                c_eff,
            )

    def is_triangulated(self) -> bool:
        return all(len(f) == 3 for f in self.faces)

    # -- triangulation with auxiliary vertices --------------------------------

    def triangulate_with_aux(self, faces=None):
        """Add one auxiliary vertex inside each chosen face (all faces by
        default), joined to each vertex occurrence on the face walk.
        Returns (new graph, aux_of_face) where aux_of_face[f] is the
        auxiliary vertex id for face f; auxiliary ids start at self.n."""
        chosen = sorted(range(len(self.faces))) if faces is None else sorted(faces)
        aux_of_face = {f: self.n + i for i, f in enumerate(chosen)}
        n_new = self.n + len(chosen)
        new_edges: List[Tuple[int, int]] = list(self.edges)
        # Aux edge per corner: corner(d) at head(d) in face_of[d].
        aux_edge_of_corner: Dict[int, int] = {}
        for f in chosen:
            a = aux_of_face[f]
            for d in self.faces[f]:
                aux_edge_of_corner[d] = len(new_edges)
                new_edges.append((self.head[d], a))
        rot: List[List[int]] = [[] for _ in range(n_new)]
        for v in range(self.n):
            ring = []
            for e in self.rot[v]:
                # The gap between e and rot_next(e) is the corner of the dart
                # twin(rot_next(e)), whose face occupies that gap.
                ring.append(e)
                corner = self.rot_next[e] ^ 1
                if corner in aux_edge_of_corner:
                    ring.append(2 * aux_edge_of_corner[corner])  # dart v -> aux
            rot[v] = ring
        for f in chosen:
            a = aux_of_face[f]
            ring = []
            # Around the aux vertex the walk vertices appear in walk order
            # (ccw for inner faces).
            for d in self.faces[f]:
                eid = aux_edge_of_corner[d]
                ring.append(2 * eid + 1)  # dart aux -> head(d)
            rot[a] = ring
        g2 = PlaneGraph(n_new, new_edges, rot)
        if faces is None and not g2.is_triangulated():
            raise AssertionError("aux triangulation left a non-triangle face")
        return g2, aux_of_face

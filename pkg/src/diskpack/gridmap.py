"""The diameter-one square grid map: cell indexing, clique weights, constants.

Cells have side 1/sqrt(2) (diameter exactly 1).  All map computations happen
in sqrt(2)-scaled space, where the grid is the integer lattice and a vertex
at rational (x, y) sits at (x*sqrt2, y*sqrt2), represented exactly in the
quadratic field Q(sqrt2) (:class:`diskpack.geometry.QF`).  A deterministic
rational offset derived from the input hash enforces general position: no
vertex on a grid line, no edge through a grid corner.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from math import log2
from typing import Dict, List, Tuple

from diskpack.geometry import QF, Pt

Cell = Tuple[int, int]
QPt = Tuple[QF, QF]

#: Analytic ceiling on cells per unit segment for this grid: a segment of
#: length 1 spans at most ceil(sqrt2) = 2 grid lines per axis, hence at most
#: 3 columns + 3 rows - 1 = 5 cells (no corner crossings in general position).
ALPHA_CEILING = 5


@dataclass(frozen=True)
class CellStats:
    cell: Cell
    count: int
    clique_weight: float


@dataclass(frozen=True)
class MapConstants:
    alpha: int
    beta: int
    kappa: int


class GeneralPositionError(RuntimeError):
    pass


def scale_point(p: Pt) -> QPt:
    """Rational input point -> exact sqrt2-scaled coordinates."""
    return (QF.sqrt2_times(p[0]), QF.sqrt2_times(p[1]))


class GridMap:
    """Vertex-to-cell assignment over the offset integer grid in scaled space.

    Cell (i, j) covers [i+dx, i+1+dx) x [j+dy, j+1+dy) in scaled space for
    offset (dx, dy).  Immutable after construction.
    """

    def __init__(self, g, offset: Tuple[Fraction, Fraction]):
        self.g = g
        self.offset = offset
        self.scaled: List[QPt] = [scale_point(g.coords(v)) for v in range(g.n)]
        self.cell_of: List[Cell] = [self.locate_scaled(sp) for sp in self.scaled]
        self.occupied: Dict[Cell, List[int]] = {}
        for v, c in enumerate(self.cell_of):
            self.occupied.setdefault(c, []).append(v)

    def locate_scaled(self, sp: QPt) -> Cell:
        dx, dy = self.offset
        return ((sp[0] - dx).floor(), (sp[1] - dy).floor())

    def locate(self, p: Pt) -> Cell:
        return self.locate_scaled(scale_point(p))

    def cell_corner(self, i: int, j: int) -> QPt:
        """Scaled coordinates of the lower-left corner of cell (i, j)."""
        dx, dy = self.offset
        return (QF.of(Fraction(i) + dx), QF.of(Fraction(j) + dy))

    def count(self, c: Cell) -> int:
        return len(self.occupied.get(c, ()))

    def clique_weight(self, c: Cell) -> float:
        return log2(self.count(c) + 1)

    def stats(self) -> List[CellStats]:
        return [
            CellStats(c, len(vs), self.clique_weight(c))
            for c, vs in sorted(self.occupied.items())
        ]

    def cells_of_edge(self, u: int, v: int) -> List[Cell]:
        return self.cells_of_scaled_segment(self.scaled[u], self.scaled[v])

    def cells_of_scaled_segment(self, a: QPt, b: QPt) -> List[Cell]:
        """All cells met by segment ab, by exact grid walk in scaled space.

        Endpoints are assumed off grid lines; interior corner crossings are
        excluded by the offset choice, so the visited cells form a staircase
        ordered by the crossing parameters.
        """
        ca = self.locate_scaled(a)
        cb = self.locate_scaled(b)
        if ca == cb:
            return [ca]
        dx, dy = self.offset
        events = []  # (t, axis, direction)
        for axis, (off, lo, hi) in enumerate(
            ((dx, ca[0], cb[0]), (dy, ca[1], cb[1]))
        ):
            step = 1 if hi >= lo else -1
            denom = b[axis] - a[axis]
            for k in range(min(lo, hi) + 1, max(lo, hi) + 1):
                t = (QF.of(Fraction(k) + off) - a[axis]) / denom
                events.append((t, axis, step))
        events.sort(key=lambda e: e[0])
        cur = list(ca)
        out = [ca]
        for _, axis, step in events:
            cur[axis] += step
            out.append((cur[0], cur[1]))
        if out[-1] != cb:
            raise GeneralPositionError("grid walk did not land in the end cell")
        return out


def cell_distance(c1: Cell, c2: Cell) -> int:
    """Shortest path in the 4-adjacency grid dual = L1 distance."""
    return abs(c1[0] - c2[0]) + abs(c1[1] - c2[1])


def neighboring_cells(c: Cell, r: int) -> List[Cell]:
    """Cells within dual distance r of c (inclusive r-neighborhood)."""
    out = []
    for di in range(-r, r + 1):
        rem = r - abs(di)
        for dj in range(-rem, rem + 1):
            out.append((c[0] + di, c[1] + dj))
    return out


def build_map(g, salt: int = 0) -> GridMap:
    """Deterministic general-position offset from the input hash, retried."""
    digest_src = repr([(str(p.x), str(p.y)) for p in g.points]).encode()
    for attempt in range(32):
        h = hashlib.sha256(digest_src + str(salt + attempt).encode()).digest()
        dx = Fraction(1 + int.from_bytes(h[:8], "big"), 1 << 65)
        dy = Fraction(1 + int.from_bytes(h[8:16], "big"), 1 << 65)
        gmap = GridMap(g, (dx, dy))
        if _general_position_ok(gmap):
            return gmap
    raise GeneralPositionError("no valid offset found after 32 attempts")


def _general_position_ok(gmap: GridMap) -> bool:
    g = gmap.g
    dx, dy = gmap.offset
    for v in range(g.n):
        sx, sy = gmap.scaled[v]
        i, j = gmap.cell_of[v]
        for q, k, off in ((sx, i, dx), (sx, i + 1, dx), (sy, j, dy), (sy, j + 1, dy)):
            if (q - QF.of(Fraction(k) + off)).sign() == 0:
                return False
    # No edge through a grid corner: on the walk, strictly interleaved x/y
    # crossings; a shared parameter value means a corner hit.
    for u, v in g.edges:
        a, b = gmap.scaled[u], gmap.scaled[v]
        ca, cb = gmap.cell_of[u], gmap.cell_of[v]
        ts = []
        for axis, off, lo, hi in ((0, dx, ca[0], cb[0]), (1, dy, ca[1], cb[1])):
            denom = b[axis] - a[axis]
            for k in range(min(lo, hi) + 1, max(lo, hi) + 1):
                ts.append((QF.of(Fraction(k) + off) - a[axis]) / denom)
        for i1 in range(len(ts)):
            for i2 in range(i1 + 1, len(ts)):
                if ts[i1] == ts[i2]:
                    return False
    return True


def compute_constants(gmap: GridMap) -> MapConstants:
    """alpha from this instance's edges, capped by the analytic ceiling;
    beta/kappa are dual-ball sizes at radius alpha and 2*alpha."""
    g = gmap.g
    for u, v in g.edges:
        seen = len(gmap.cells_of_edge(u, v))
        if seen > ALPHA_CEILING:
            raise AssertionError(
                f"edge ({u},{v}) meets {seen} cells, above ceiling {ALPHA_CEILING}"
            )
    alpha = ALPHA_CEILING  # the map constant is the worst case over all placements
    beta = len(neighboring_cells((0, 0), alpha))
    kappa = len(neighboring_cells((0, 0), 2 * alpha))
    return MapConstants(alpha=alpha, beta=beta, kappa=kappa)

"""Exact planar predicates on rational coordinates.

Everything downstream (crossing detection, the grid map offset, sparsifier
arrangement, noose routing) keys off these predicates, so they are computed
with `fractions.Fraction` and no rounding.  Callers are expected to prefilter
candidate pairs with floating point boxes before paying for exactness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Tuple

Coord = Fraction
Pt = Tuple[Fraction, Fraction]


def frac(x) -> Fraction:
    """Exact conversion; floats convert via their binary value."""
    return x if isinstance(x, Fraction) else Fraction(x)


def orient(a: Pt, b: Pt, c: Pt) -> int:
    """Sign of the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 collinear."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def dist2(a: Pt, b: Pt) -> Fraction:
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def on_segment(a: Pt, b: Pt, p: Pt) -> bool:
    """p lies on the closed segment ab (collinearity is checked)."""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_properly_cross(a: Pt, b: Pt, c: Pt, d: Pt) -> bool:
    """True iff open segments ab and cd share exactly one interior point."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segment_intersection(a: Pt, b: Pt, c: Pt, d: Pt) -> Optional[Pt]:
    """The unique proper crossing point of ab and cd, or None.

    Only proper crossings are reported; touching configurations (shared
    endpoint, endpoint on interior, collinear overlap) return None.
    """
    if not segments_properly_cross(a, b, c, d):
        return None
    # Solve a + t(b-a) = c + u(d-c).
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    denom = rx * sy - ry * sx
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / denom
    return (a[0] + t * rx, a[1] + t * ry)


def segment_vertical_line_hit(a: Pt, b: Pt, x: Fraction) -> Optional[Pt]:
    """Intersection of segment ab with the vertical line X = x, if the segment
    properly straddles the line (endpoints strictly on opposite sides)."""
    if (a[0] - x) * (b[0] - x) >= 0:
        return None
    t = (x - a[0]) / (b[0] - a[0])
    return (x, a[1] + t * (b[1] - a[1]))


def segment_horizontal_line_hit(a: Pt, b: Pt, y: Fraction) -> Optional[Pt]:
    if (a[1] - y) * (b[1] - y) >= 0:
        return None
    t = (y - a[1]) / (b[1] - a[1])
    return (a[0] + t * (b[0] - a[0]), y)


class QF:
    """Exact element a + b*sqrt(2) of the quadratic field Q(sqrt2).

    Used for all sparsifier/arrangement geometry: the grid map is built on an
    integer grid in sqrt(2)-scaled space, where vertex coordinates become
    rational multiples of sqrt(2) and crossing points live in the full field.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    @staticmethod
    def of(x) -> "QF":
        if isinstance(x, QF):
            return x
        return QF(x, 0)

    @staticmethod
    def sqrt2_times(x) -> "QF":
        return QF(0, x)

    def __add__(self, o):
        o = QF.of(o)
        return QF(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = QF.of(o)
        return QF(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return QF.of(o) - self

    def __mul__(self, o):
        o = QF.of(o)
        return QF(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = QF.of(o)
        den = o.a * o.a - 2 * o.b * o.b
        if den == 0:
            raise ZeroDivisionError
        # 1/(a+b*sqrt2) = (a - b*sqrt2)/(a^2-2b^2)
        inv = QF(o.a / den, -o.b / den)
        return self * inv

    def __rtruediv__(self, o):
        return QF.of(o) / self

    def __neg__(self):
        return QF(-self.a, -self.b)

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        if a > 0:  # b < 0
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1  # a < 0, b > 0

    def __eq__(self, o):
        o = QF.of(o)
        return self.a == o.a and self.b == o.b

    def __ne__(self, o):
        return not self.__eq__(o)

    def __lt__(self, o):
        return (self - QF.of(o)).sign() < 0

    def __le__(self, o):
        return (self - QF.of(o)).sign() <= 0

    def __gt__(self, o):
        return (self - QF.of(o)).sign() > 0

    def __ge__(self, o):
        return (self - QF.of(o)).sign() >= 0

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * 1.4142135623730951

    def __repr__(self):
        return f"QF({self.a}, {self.b})"

    def floor(self) -> int:
        k = int(float(self) // 1)
        while (self - k).sign() < 0:
            k -= 1
        while (self - (k + 1)).sign() >= 0:
            k += 1
        return k


def qf_orient(a, b, c) -> int:
    """orient() for QF points."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return d.sign()


def angle_key(dx: Fraction, dy: Fraction):
    """Total order on directions for rotation systems, ccw from +x axis.

    Returns a sortable key: (half, slope-ish) without trig.  Exact.
    """
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    # Quadrant-ish band index, ccw starting at the positive x axis.
    if dy == 0:
        band = 0 if dx > 0 else 4
        return (band, Fraction(0))
    if dy > 0:
        # Bands 1..3 cover the open upper half plane.
        if dx > 0:
            return (1, dy / dx)
        if dx == 0:
            return (2, Fraction(0))
        return (3, dy / dx)  # dx < 0, key increases toward -x axis
    # Lower half plane, bands 5..7.
    if dx < 0:
        return (5, dy / dx)
    if dx == 0:
        return (6, Fraction(0))
    return (7, dy / dx)

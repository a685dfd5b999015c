"""Points of N x N, monomial orders, successors, delta-sets and index sets B_delta.

Points are plain ``(n1, n2)`` tuples; helpers below do the coordinatewise
arithmetic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple[int, int]


def padd(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def psub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def pmax(a: Point, b: Point) -> Point:
    return (max(a[0], b[0]), max(a[1], b[1]))


def leq_partial(n: Point, m: Point) -> bool:
    """n ⪯ m: componentwise comparison."""
    return n[0] <= m[0] and n[1] <= m[1]


def lt_partial(n: Point, m: Point) -> bool:
    """n ≺ m: n ⪯ m and n != m."""
    return leq_partial(n, m) and n != m


def fmt_point(n: Point) -> str:
    return f"({n[0]},{n[1]})"


def parse_point(text: str) -> Point:
    body = text.strip().strip("()")
    a, b = body.split(",")
    return (int(a), int(b))


class MonomialOrder(enum.Enum):
    """The two total orders used by the decoder.

    ``LEX``: lexicographic with X1 > X2. ``GRADED``: total degree first,
    ties broken by the X2 exponent (X2 > X1).
    """

    LEX = "lex"
    GRADED = "graded"

    def key(self, n: Point) -> tuple[int, int]:
        if self is MonomialOrder.LEX:
            return (n[0], n[1])
        return (n[0] + n[1], n[1])

    def compare(self, n: Point, m: Point) -> int:
        """-1, 0 or 1 as n <_T m, n =_T m, n >_T m."""
        kn, km = self.key(n), self.key(m)
        return (kn > km) - (kn < km)

    def less(self, n: Point, m: Point) -> bool:
        return self.key(n) < self.key(m)

    def sorted(self, points: Iterable[Point]) -> list[Point]:
        return sorted(points, key=self.key)

    @property
    def other(self) -> "MonomialOrder":
        return MonomialOrder.GRADED if self is MonomialOrder.LEX else MonomialOrder.LEX

    @classmethod
    def parse(cls, name: "str | MonomialOrder") -> "MonomialOrder":
        if isinstance(name, MonomialOrder):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}; use 'lex' or 'graded'") from None


def successor(order: MonomialOrder, n: Point, bounds: tuple[int, int] | None = None) -> Point:
    """Next point in the iteration order.

    For the graded order this is the monomial-order successor. For the lex
    order it is the recursion successor over the rectangle
    [0, r1-1] x [0, r2-1], which needs ``bounds``.
    """
    n1, n2 = n
    if order is MonomialOrder.GRADED:
        return (n1 - 1, n2 + 1) if n1 > 0 else (n2 + 1, 0)
    if bounds is None:
        raise ValueError("the lex recursion successor needs bounds (r1, r2)")
    r1, r2 = bounds
    if not (0 <= n1 < r1 and 0 <= n2 < r2):
        raise ValueError(f"{fmt_point(n)} lies outside the rectangle {r1}x{r2}")
    return (n1, n2 + 1) if n2 < r2 - 1 else (n1 + 1, 0)


def rectangle(corner: Point) -> list[Point]:
    """Δ_corner = {m : m ⪯ corner} (empty if corner has a negative entry)."""
    return [(i, j) for i in range(corner[0] + 1) for j in range(corner[1] + 1)]


@dataclass(frozen=True)
class DeltaSet:
    """A staircase given by its defining points s^(1), ..., s^(d).

    The points satisfy s^(1)_1 > ... > s^(d)_1 = 0 and
    0 = s^(1)_2 < ... < s^(d)_2; the set itself is the union of the
    rectangles below the corners (s^(i)_1 - 1, s^(i+1)_2 - 1).
    """

    defining_points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.defining_points)
        object.__setattr__(self, "defining_points", pts)
        if not pts:
            raise ValueError("a delta-set needs at least one defining point")
        if pts[-1][0] != 0 or pts[0][1] != 0:
            raise ValueError(f"defining points {pts} must start on the X1-axis and end on the X2-axis")
        for a, b in zip(pts, pts[1:]):
            if not (a[0] > b[0] and a[1] < b[1]):
                raise ValueError(f"defining points {pts} are not strictly monotone")

    @classmethod
    def empty(cls) -> "DeltaSet":
        return cls(((0, 0),))

    @classmethod
    def from_corners(cls, corners: Iterable[Point]) -> "DeltaSet":
        """Delta-set equal to the union of the rectangles below the given points."""
        corners = [c for c in corners if c[0] >= 0 and c[1] >= 0]
        if not corners:
            return cls.empty()
        width = max(c[0] for c in corners) + 1
        # heights[x] = number of points of the staircase in column x
        heights = [max((c[1] + 1 for c in corners if c[0] >= x), default=0) for x in range(width + 1)]
        pts = []
        for x in range(width + 1):
            if x == 0 or heights[x] < heights[x - 1]:
                pts.append((x, heights[x]))
        return cls(tuple(reversed(pts)))

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "DeltaSet":
        """Delta-set from an explicit downward-closed point set."""
        pts = set(points)
        ds = cls.from_corners(pts)
        if set(ds.points()) != pts:
            raise ValueError("point set is not downward closed")
        return ds

    @property
    def d(self) -> int:
        return len(self.defining_points)

    def corners(self) -> list[Point]:
        """(s^(i)_1 - 1, s^(i+1)_2 - 1) for i = 1..d-1, in defining-point order."""
        s = self.defining_points
        return [(s[i][0] - 1, s[i + 1][1] - 1) for i in range(len(s) - 1)]

    def contains(self, m: Point) -> bool:
        return any(leq_partial(m, c) for c in self.corners())

    __contains__ = contains

    def size(self) -> int:
        s = self.defining_points
        # column x < s^(i)_1 and x >= s^(i+1)_1 has height s^(i+1)_2
        return sum((s[i][0] - s[i + 1][0]) * s[i + 1][1] for i in range(len(s) - 1))

    __len__ = size

    def points(self) -> list[Point]:
        out = set()
        for c in self.corners():
            out.update(rectangle(c))
        return sorted(out)

    def union(self, corners: Iterable[Point]) -> "DeltaSet":
        return DeltaSet.from_corners(list(self.corners()) + list(corners))

    def issubset(self, other: "DeltaSet") -> bool:
        return all(other.contains(c) for c in self.corners())

    def __str__(self) -> str:
        return "{" + ",".join(fmt_point(p) for p in self.points()) + "}"


def delta_contains(d: DeltaSet, m: Point) -> bool:
    return d.contains(m)


def delta_size(d: DeltaSet) -> int:
    return d.size()


def b_delta(delta: int, bounds: tuple[int, int] | None = None,
            order: MonomialOrder = MonomialOrder.LEX) -> list[Point]:
    """B_delta = {(i,j) : (i+1)(j+1) <= delta} minus (delta-1, 0) and (0, delta-1).

    With ``bounds`` the points are restricted to I = Z_r1 x Z_r2. The result
    is sorted by ``order``.
    """
    if delta < 2:
        raise ValueError(f"B_delta needs delta >= 2 (got {delta})")
    pts = [(i, j) for i in range(delta) for j in range(delta // (i + 1))
           if (i + 1) * (j + 1) <= delta]
    pts = [p for p in pts if p not in ((delta - 1, 0), (0, delta - 1))]
    if bounds is not None:
        pts = [p for p in pts if p[0] < bounds[0] and p[1] < bounds[1]]
    return order.sorted(pts)


def hyperbolic_set(delta: int) -> list[Point]:
    """{(i,j) : (i+1)(j+1) <= delta}, without removing the axis endpoints."""
    return [(i, j) for i in range(delta) for j in range(delta // (i + 1))]


def iteration_points(order: MonomialOrder, extent: tuple[int, int]) -> list[Point]:
    """All points of the rectangle [0, e1) x [0, e2) in iteration order."""
    return order.sorted((i, j) for i in range(extent[0]) for j in range(extent[1]))


def fmt_points(pts: Sequence[Point]) -> str:
    return "{" + ",".join(fmt_point(p) for p in pts) + "}"


def delta_sets_up_to(size: int) -> list[DeltaSet]:
    """Every delta-set with at most ``size`` points (including the empty one)."""
    out = {(): DeltaSet.empty()}
    frontier = [frozenset()]
    for _ in range(size):
        nxt = []
        for pts in frontier:
            # addable points: outer corners of the staircase
            for s in (DeltaSet.from_points(pts) if pts else DeltaSet.empty()).defining_points:
                grown = pts | {s}
                key = tuple(sorted(grown))
                if key not in out:
                    out[key] = DeltaSet.from_points(grown)
                    nxt.append(grown)
        frontier = nxt
    return list(out.values())

"""Berlekamp-Massey-Sakata iteration over a doubly periodic syndrome array.

The state holds a minimal set F (one polynomial per defining point of the
current footprint), an auxiliary list G (one record per corner of the
footprint) and an append-only trace. Every step is two-phase: all
discrepancies are computed against the same state before anything changes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gf import FieldElement
from .lattice import (DeltaSet, MonomialOrder, Point, b_delta, delta_sets_up_to, fmt_point,
                      iteration_points, leq_partial, lt_partial, padd, pmax, psub)
from .poly2 import Poly, normalize_minimal_set
from .syndrome import SyndromeTable, UnknownSyndromeError, apply_strict

CASE4_LITERAL = "literal"      # j > 2, as printed
CASE4_INCLUSIVE = "inclusive"  # j >= 2


class BmsInternalError(RuntimeError):
    """An invariant of the iteration was violated (never expected)."""


@dataclass(frozen=True)
class AuxiliaryRecord:
    """A polynomial g that was valid strictly before ``fail_point`` and failed there.

    ``fail_point - LP(g)`` is the corner of the footprint the record witnesses.
    """

    g: Poly
    fail_point: Point
    discrepancy: FieldElement
    lead: Point

    def __post_init__(self):
        if not self.discrepancy:
            raise ValueError("auxiliary records need a nonzero discrepancy")

    @property
    def corner(self) -> Point:
        return psub(self.fail_point, self.lead)

    @property
    def span(self) -> tuple[int, int]:
        """(s1^(b), s2^(b+1)): the defining-point coordinates bracketing the corner."""
        c = self.corner
        return (c[0] + 1, c[1] + 1)


@dataclass(frozen=True)
class TraceRow:
    l: Point | None
    F: tuple[Poly, ...]
    G: tuple[AuxiliaryRecord, ...]
    delta: DeltaSet
    discrepancies: tuple[FieldElement, ...] = ()
    procedure: str = ""   # "", "1" or "2"


@dataclass
class BmsState:
    order: MonomialOrder
    F: list[Poly]
    G: list[AuxiliaryRecord]
    delta: DeltaSet
    l: Point = (0, 0)
    case4: str = CASE4_LITERAL
    trace: list[TraceRow] = field(default_factory=list)
    proc2_points: list[Point] = field(default_factory=list)
    fallbacks: int = 0
    case_log: list[tuple[Point, Point, str]] = field(default_factory=list)

    @property
    def defining_points(self) -> tuple[Point, ...]:
        return self.delta.defining_points

    def snapshot(self, l: Point | None, disc: Sequence[FieldElement] = (), procedure: str = "") -> None:
        self.trace.append(TraceRow(l, tuple(self.F), tuple(self.G), self.delta, tuple(disc), procedure))


def init(field, order: MonomialOrder = MonomialOrder.LEX, case4: str = CASE4_LITERAL) -> BmsState:
    """l = (0,0), F = {1}, G = {}, empty footprint."""
    if case4 not in (CASE4_LITERAL, CASE4_INCLUSIVE):
        raise ValueError(f"case4 must be {CASE4_LITERAL!r} or {CASE4_INCLUSIVE!r}")
    state = BmsState(order=MonomialOrder.parse(order), F=[Poly.one(field)], G=[],
                     delta=DeltaSet.empty(), case4=case4)
    state.snapshot(None)
    return state


def berlekamp_combine(f_a: Poly, w_a: FieldElement, rec_b: AuxiliaryRecord, l: Point,
                      order: MonomialOrder) -> Poly:
    """h = X^(r - s_a) f_a - (w_a / v_b) X^e g_b.

    r = max(s_a, l - c) componentwise with c the corner witnessed by g_b,
    and e = r - l + c, so the g-part cancels the discrepancy of f_a at l.
    """
    if not w_a:
        raise ValueError("berlekamp_combine needs a nonzero discrepancy w_a")
    s_a = f_a.leading_power(order)
    c = rec_b.corner
    r = pmax(s_a, psub(l, c))
    e = (r[0] - l[0] + c[0], r[1] - l[1] + c[1])
    shift_f = psub(r, s_a)
    if min(e) < 0 or min(shift_f) < 0:
        raise BmsInternalError(f"negative shift in Berlekamp combine at {fmt_point(l)}")
    return f_a.shift(shift_f) - rec_b.g.shift(e).scale(w_a / rec_b.discrepancy)


def _find_record(state: BmsState, gap: Point) -> int | None:
    """First j with gap ⪯ corner of g^(j) (the j of Procedure 1, step 1)."""
    for j, rec in enumerate(state.G):
        if leq_partial(gap, rec.corner):
            return j
    return None


def procedure_1(state: BmsState, i: int, w: FieldElement, l: Point) -> Poly:
    """Replacement for a failing f^(i) whose defining point survives the step."""
    s_i = state.defining_points[i]
    j = _find_record(state, psub(l, s_i))
    if j is None:
        raise BmsInternalError(f"no auxiliary polynomial covers {fmt_point(psub(l, s_i))} at {fmt_point(l)}")
    h = berlekamp_combine(state.F[i], w, state.G[j], l, state.order)
    if h.leading_power(state.order) != s_i:
        raise BmsInternalError("Procedure 1 changed a leading power")
    return h


class _Builder:
    """Construction of the polynomial for one new defining point (Procedure 2)."""

    def __init__(self, state: BmsState, disc: list[FieldElement], l: Point):
        self.state = state
        self.order = state.order
        self.F = state.F
        self.pts = state.defining_points
        self.corners = [rec.corner for rec in state.G]
        self.disc = disc
        self.failing = {i for i, w in enumerate(disc) if w}
        self.l = l

    def combine(self, a: int, b: int, S: Point) -> Poly | None:
        """h_{f^(a), g^(b)} if its leading power is exactly S."""
        if b < 0 or b >= len(self.state.G):
            return None
        r = pmax(self.pts[a], psub(self.l, self.corners[b]))
        if r != S:
            return None
        if a not in self.failing:
            return self.F[a].shift(psub(S, self.pts[a]))
        return berlekamp_combine(self.F[a], self.disc[a], self.state.G[b], self.l, self.order)

    def build(self, S: Point) -> tuple[Poly, str]:
        l1, l2 = self.l
        pts, d = self.pts, len(self.pts)
        # (1) S = l - corner(g^(i)), f^(i+1) failing; combine some f^(k), s^(k) < S, with g^(i)
        for b in range(d - 1):
            if b + 1 in self.failing and psub(self.l, self.corners[b]) == S:
                for k in range(d):
                    if lt_partial(pts[k], S):
                        h = self.combine(k, b, S)
                        if h is not None:
                            return h, "2.1"
        # (2) S = (l1 - s1^(k) + 1, s2^(i)), f^(k) failing, k < d, s^(i) < S
        for k in range(d - 1):
            if k not in self.failing:
                continue
            for i in range(d):
                if (l1 - pts[k][0] + 1, pts[i][1]) == S and lt_partial(pts[i], S):
                    h = self.combine(i, k, S)
                    if h is not None:
                        return h, "2.2"
        # (3) S = (l1 + 1, s2^(i)), i < d: pure X1-shift
        for i in range(d - 1):
            e1 = l1 - pts[i][0] + 1
            if (l1 + 1, pts[i][1]) == S and e1 >= 0:
                return self.F[i].shift((e1, 0)), "2.3"
        # (4) S = (s1^(i), l2 - s2^(j) + 1), f^(j) failing, s^(i) < S; combine with g^(j-1)
        jmin = 2 if self.state.case4 == CASE4_LITERAL else 1
        for j in range(jmin, d):
            if j not in self.failing:
                continue
            for i in range(d):
                if (pts[i][0], l2 - pts[j][1] + 1) == S and lt_partial(pts[i], S):
                    h = self.combine(i, j - 1, S)
                    if h is not None:
                        return h, "2.4"
        # (5) S = (s1^(i), l2 + 1): pure X2-shift
        for i in range(d):
            e2 = l2 - pts[i][1] + 1
            if (pts[i][0], l2 + 1) == S and e2 >= 0:
                return self.F[i].shift((0, e2)), "2.5"
        return self.general(S), "fallback"

    def general(self, S: Point) -> Poly:
        """Any f^(a) below S, shifted, corrected by a record whose corner covers l - S."""
        below = [a for a in range(len(self.pts)) if leq_partial(self.pts[a], S)]
        for a in below:
            if a not in self.failing or not leq_partial(S, self.l):
                return self.F[a].shift(psub(S, self.pts[a]))
        gap = psub(self.l, S)
        for a in below:
            for b, c in enumerate(self.corners):
                if leq_partial(gap, c):
                    h = berlekamp_combine(self.F[a], self.disc[a], self.state.G[b], self.l, self.order)
                    return h.shift(psub(S, h.leading_power(self.order)))
        raise BmsInternalError(f"cannot build a polynomial for defining point {fmt_point(S)} "
                               f"at step {fmt_point(self.l)}")


def procedure_2(state: BmsState, disc: list[FieldElement], l: Point) -> None:
    """Grow the footprint and rebuild F and G from the failing members.

    The new footprint is the old one plus the rectangle below l - LP(f) for
    each failing f; the new defining points are its outer corners.
    """
    order = state.order
    pts = state.defining_points
    failing = [i for i, w in enumerate(disc) if w]
    gaps = {i: psub(l, pts[i]) for i in failing}
    growth = [g for g in gaps.values() if not state.delta.contains(g)]
    new_delta = state.delta.union(growth)
    if new_delta.size() <= state.delta.size():
        raise BmsInternalError("Procedure 2 did not grow the footprint")
    builder = _Builder(state, disc, l)
    new_F: list[Poly] = []
    for S in new_delta.defining_points:
        if S in pts:
            i = pts.index(S)
            if i not in gaps:
                new_F.append(state.F[i])
                continue
            if state.delta.contains(gaps[i]):
                new_F.append(procedure_1(state, i, disc[i], l))
                state.case_log.append((l, S, "1"))
                continue
        h, case = builder.build(S)
        if case == "fallback":
            state.fallbacks += 1
        state.case_log.append((l, S, case))
        if h.leading_power(order) != S:
            raise BmsInternalError(f"constructed leading power {h.leading_power(order)} != {S}")
        new_F.append(h)
    old = {rec.corner: rec for rec in state.G}
    new_G: list[AuxiliaryRecord] = []
    for c in new_delta.corners():
        if c in old:
            new_G.append(old[c])
            continue
        src = [i for i in failing if gaps[i] == c]
        if not src:
            raise BmsInternalError(f"no failing polynomial witnesses corner {fmt_point(c)}")
        i = src[0]
        new_G.append(AuxiliaryRecord(state.F[i], l, disc[i], pts[i]))
    state.F = normalize_minimal_set(new_F, new_delta, order)
    state.G = new_G
    state.delta = new_delta
    state.proc2_points.append(l)


def discrepancies(state: BmsState, table: SyndromeTable, l: Point) -> list[FieldElement]:
    pts = state.defining_points
    return [apply_strict(f, table, l, state.order, s) for f, s in zip(state.F, pts)]


def step(state: BmsState, table: SyndromeTable, l: Point) -> BmsState:
    """Process point l: F_N = failing members, then Procedure 1 or 2."""
    disc = discrepancies(state, table, l)
    state.l = l
    failing = [i for i, w in enumerate(disc) if w]
    if not failing:
        state.snapshot(l, disc)
        return state
    pts = state.defining_points
    if all(state.delta.contains(psub(l, pts[i])) for i in failing):
        new_F = list(state.F)
        for i in failing:
            new_F[i] = procedure_1(state, i, disc[i], l)
            state.case_log.append((l, pts[i], "1"))
        state.F = normalize_minimal_set(new_F, state.delta, state.order)
        state.snapshot(l, disc, "1")
    else:
        procedure_2(state, disc, l)
        state.snapshot(l, disc, "2")
    return state


def run_schedule(table: SyndromeTable, points: Iterable[Point], order: MonomialOrder,
                 case4: str = CASE4_LITERAL) -> BmsState:
    order = MonomialOrder.parse(order)
    points = list(points)
    for a, b in zip(points, points[1:]):
        if not order.less(a, b):
            raise ValueError(f"schedule is not increasing at {fmt_point(a)}, {fmt_point(b)}")
    state = init(table.field, order, case4)
    for l in points:
        step(state, table, l)
    return state


def restricted_schedule(t: int, bounds: tuple[int, int], order: MonomialOrder) -> list[Point]:
    if t < 1:
        raise ValueError("error capability t must be at least 1")
    return b_delta(2 * t + 1, bounds, MonomialOrder.parse(order))


def run_restricted(table: SyndromeTable, t: int, order: MonomialOrder = MonomialOrder.LEX,
                   case4: str = CASE4_LITERAL, skip: Iterable[Point] = ()) -> BmsState:
    """Iterate only over B_(2t+1), sorted by the order.

    ``skip`` removes points from the schedule (used to probe minimality).
    """
    order = MonomialOrder.parse(order)
    schedule = restricted_schedule(t, table.bounds, order)
    for n in schedule:
        if not table.is_known(n):
            raise UnknownSyndromeError(n)
    skip = set(skip)
    return run_schedule(table, [n for n in schedule if n not in skip], order, case4)


def run_full(table: SyndromeTable, order: MonomialOrder = MonomialOrder.LEX,
             case4: str = CASE4_LITERAL, periods: int = 1) -> BmsState:
    """Reference run over every point of [0, periods*r1) x [0, periods*r2).

    ``periods=1`` is the fundamental domain; two periods make the result the
    footprint of the full recurrence ideal for any table.
    """
    if not table.is_fully_known():
        raise ValueError("run_full needs a fully known table")
    r1, r2 = table.bounds
    pts = iteration_points(MonomialOrder.parse(order), (periods * r1, periods * r2))
    return run_schedule(table, pts, order, case4)


def growth_violations(state: BmsState, t: int) -> list[Point]:
    """Steps where the footprint grew although (l1+1)(l2+1) > 2t+1."""
    return [l for l in state.proc2_points if (l[0] + 1) * (l[1] + 1) > 2 * t + 1]


def silent_outside(state: BmsState, t: int) -> list[Point]:
    """Trace steps outside B_(2t+1) with a nonzero discrepancy."""
    inside = set(b_delta(2 * t + 1))
    return [row.l for row in state.trace[1:]
            if row.l not in inside and any(row.discrepancies)]


def check_validity(state: BmsState, table: SyndromeTable, points: Iterable[Point]) -> list[tuple[int, Point]]:
    """(member index, point) pairs where a member of F fails among ``points``."""
    bad = []
    for idx, (f, s) in enumerate(zip(state.F, state.defining_points)):
        for n in points:
            if leq_partial(s, n) and apply_strict(f, table, n, state.order, s):
                bad.append((idx, n))
    return bad


def read_closure(t: int) -> list[Point]:
    """Every index a restricted run over B_(2t+1) can read for weight <= t.

    At l in B a normalized f with LP(f) = s reads u at l - s + m for m in
    Delta or m = s, and Delta has at most t points throughout. The result
    contains B_(2t+1) and, for t >= 2, points outside it (e.g. (2,1)).
    """
    B = b_delta(2 * t + 1)
    out = set(B)
    for delta in delta_sets_up_to(t):
        for s in delta.defining_points:
            for l in B:
                if leq_partial(s, l):
                    for m in delta.points() + [s]:
                        out.add(padd(psub(l, s), m))
    return sorted(out)

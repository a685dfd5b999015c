"""Slow, independent reference computations.

Nothing here imports the BMS iteration for its own answers: the footprint
oracle works from linear algebra over L, the convention search from direct
evaluation. The witness search necessarily drives the decoder, since it
probes the decoder's own schedule.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldSpec, GaloisField, primitive_polynomials
from .lattice import DeltaSet, MonomialOrder, Point, b_delta, padd
from .linalg import FieldArrays
from .poly2 import QuotientPoly
from .syndrome import SyndromeTable


# footprint -----------------------------------------------------------------

def footprint_bruteforce(table: SyndromeTable, order: MonomialOrder | str = MonomialOrder.LEX,
                         bound: tuple[int, int] | None = None) -> DeltaSet:
    """Footprint of the recurrence ideal of a fully known periodic table.

    Candidates s are visited in increasing order inside [0, bound). s is
    outside the footprint iff X^s + sum c_m X^m, m ranging over footprint
    points below s, satisfies the recurrence at every n in s + one period,
    which by periodicity is every n above s. Decided by comparing ranks.
    """
    order = MonomialOrder.parse(order)
    if not table.is_fully_known():
        raise ValueError("footprint_bruteforce needs a fully known table")
    r1, r2 = table.bounds
    bound = bound or (r1, r2)
    ops = FieldArrays(table.field)
    L = table.field
    grid = np.array([[L.to_key(table.read((i, j))) for j in range(r2)] for i in range(r1)], dtype=np.int64)
    period = [(i, j) for i in range(r1) for j in range(r2)]
    inside: list[Point] = []
    for s in order.sorted((i, j) for i in range(bound[0]) for j in range(bound[1])):
        # the footprint is downward closed: skip s above a known non-member
        if any(x not in inside and x != s for x in _below(s)):
            continue
        tails = [m for m in inside if order.less(m, s)]
        rows_n = [padd(s, k) for k in period]
        rhs = np.array([grid[n[0] % r1, n[1] % r2] for n in rows_n], dtype=np.int64)
        if tails:
            A = np.array([[grid[(m[0] + k[0]) % r1, (m[1] + k[1]) % r2] for m in tails] for k in period],
                         dtype=np.int64)
            solvable = ops.rank(A) == ops.rank(np.column_stack([A, rhs]))
        else:
            solvable = not rhs.any()
        if not solvable:
            inside.append(s)
    return DeltaSet.from_points(inside) if inside else DeltaSet.empty()


def _below(s: Point) -> list[Point]:
    return [(i, j) for i in range(s[0] + 1) for j in range(s[1] + 1)]


# root convention -----------------------------------------------------------

@dataclass
class ConventionMatch:
    modulus: tuple[int, ...]
    alpha_exponents: tuple[int, int]
    matches: int
    total: int
    diffs: list[tuple[Point, str, str]] = field(default_factory=list)
    extra: dict[Point, str] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.matches == self.total


def root_convention_search(bounds: tuple[int, int], error_text: str, tau: Point,
                           target: dict[Point, str], p: int = 2, degree: int = 4,
                           extra_points: Sequence[Point] = ()) -> list[ConventionMatch]:
    """Score every (modulus, alpha, beta) against target syndrome values.

    Candidates: all primitive polynomials of the given degree, all elements
    of exact order r1 and r2. Returns all conventions sorted best first;
    ``extra`` holds the values at ``extra_points`` under each convention.
    """
    from .poly2 import parse_poly

    r1, r2 = bounds
    out = []
    for modulus in primitive_polynomials(p, degree):
        spec = FieldSpec(p, 1, degree, modulus)
        L = GaloisField.get(spec)
        e = parse_poly(error_text, L)
        for a1 in L.all_primitive_roots(r1):
            for a2 in L.all_primitive_roots(r2):
                def u(n):
                    return e.evaluate(a1 ** ((tau[0] + n[0]) % r1), a2 ** ((tau[1] + n[1]) % r2))
                diffs = []
                for n, want in sorted(target.items()):
                    got = str(u(n))
                    if got != want:
                        diffs.append((n, want, got))
                out.append(ConventionMatch(modulus, (a1.log, a2.log), len(target) - len(diffs),
                                           len(target), diffs, {n: str(u(n)) for n in extra_points}))
    out.sort(key=lambda c: (-c.matches, c.modulus, c.alpha_exponents))
    return out


def format_modulus(modulus: Sequence[int]) -> str:
    terms = []
    for k in range(len(modulus) - 1, -1, -1):
        c = modulus[k]
        if not c:
            continue
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append(mono if c == 1 or k == 0 and c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


# B-minimality witnesses ------------------------------------------------------

@dataclass
class WitnessReport:
    """Per point of B: the first pattern whose trace changes F at l, and the
    first pattern for which skipping l changes the decoding outcome."""

    points: list[Point]
    patterns_searched: int
    changes_at: dict[Point, QuotientPoly | None]
    skip_changes: dict[Point, QuotientPoly | None]
    change_counts: dict[Point, int]
    skip_counts: dict[Point, int]
    skip_aborts: dict[Point, int] = field(default_factory=dict)
    unreadable: int = 0


def error_patterns(code, max_weight: int) -> Iterable[QuotientPoly]:
    """All nonzero errors of weight <= max_weight, by weight, then position
    combination (row-major), then value tuple (increasing exponent)."""
    L = code.field
    values = L.base_field_elements()
    positions = code.positions()
    for w in range(1, max_weight + 1):
        for combo in itertools.combinations(positions, w):
            for vals in itertools.product(values, repeat=w):
                yield QuotientPoly(L, code.bounds, dict(zip(combo, vals)))


def min_weight_witnesses(code, t: int, order: MonomialOrder | str = MonomialOrder.LEX,
                         exhaustive: bool = True) -> WitnessReport:
    """Search all weight-<=t errors for witnesses that each l in B_(2t+1) matters.

    "changes_at": F before l differs from F after l in the restricted trace.
    "skip_changes": dropping l from the schedule changes the final
    normalized F, or makes the iteration abort (an internal check fails or
    an unknown syndrome is needed), counted in ``skip_aborts``. Patterns
    whose unmodified run needs an unknown syndrome are counted in
    ``unreadable`` and skipped. With ``exhaustive`` every pattern is run so
    the counts are complete; otherwise the search stops per point at the
    first witness.
    """
    from .bms import BmsInternalError, run_restricted
    from .code import syndromes_of
    from .syndrome import UnknownSyndromeError

    order = MonomialOrder.parse(order)
    if t < 1:
        return WitnessReport([], 0, {}, {}, {}, {}, {})
    B = b_delta(2 * t + 1, code.bounds, order)
    changes = {l: None for l in B}
    skips = {l: None for l in B}
    ccount = {l: 0 for l in B}
    scount = {l: 0 for l in B}
    aborts = {l: 0 for l in B}
    searched = 0
    unreadable = 0
    for e in error_patterns(code, t):
        if not exhaustive and all(changes[l] is not None and skips[l] is not None for l in B):
            break
        searched += 1
        table = syndromes_of(code, e)
        try:
            state = run_restricted(table, t, order)
        except UnknownSyndromeError:
            unreadable += 1
            continue
        final = set(state.F)
        rows = state.trace
        for prev, row in zip(rows, rows[1:]):
            if set(prev.F) != set(row.F):
                ccount[row.l] += 1
                if changes[row.l] is None:
                    changes[row.l] = e
        for l in B:
            if not exhaustive and skips[l] is not None:
                continue
            try:
                changed = set(run_restricted(table, t, order, skip=(l,)).F) != final
            except (BmsInternalError, UnknownSyndromeError):
                aborts[l] += 1
                changed = True
            if changed:
                scount[l] += 1
                if skips[l] is None:
                    skips[l] = e
    return WitnessReport(B, searched, changes, skips, ccount, scount, aborts, unreadable)

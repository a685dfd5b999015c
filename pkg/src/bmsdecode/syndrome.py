"""Doubly periodic syndrome arrays and linear recurring relations f[U]_n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .gf import FieldElement, GaloisField
from .lattice import MonomialOrder, Point, b_delta, fmt_point, leq_partial, padd, psub
from .poly2 import Poly


class UnknownSyndromeError(LookupError):
    """A recurrence needed a syndrome value that is not known."""

    def __init__(self, point: Point, needed_by: Point | None = None):
        self.point = point
        self.needed_by = needed_by
        msg = f"syndrome u{fmt_point(point)} is unknown"
        if needed_by is not None:
            msg += f" (needed at step {fmt_point(needed_by)})"
        super().__init__(msg)


@dataclass(frozen=True)
class SyndromeTable:
    """One fundamental domain of an r1 x r2 doubly periodic array.

    ``entries[i][j]`` is the value at (i, j) or ``None`` when unknown. All
    reads are reduced modulo the bounds.
    """

    field: GaloisField
    bounds: tuple[int, int]
    tau: Point
    entries: tuple[tuple[FieldElement | None, ...], ...]

    @classmethod
    def from_function(cls, field: GaloisField, bounds: tuple[int, int], tau: Point,
                      value: Callable[[Point], FieldElement | None]) -> "SyndromeTable":
        r1, r2 = bounds
        rows = tuple(tuple(value((i, j)) for j in range(r2)) for i in range(r1))
        return cls(field, (r1, r2), tuple(tau), rows)

    @classmethod
    def afforded_by(cls, error: Poly, alpha: tuple[FieldElement, FieldElement],
                    tau: Point, bounds: tuple[int, int],
                    known: Callable[[Point], bool] | None = None) -> "SyndromeTable":
        """u_n = e(alpha^(tau+n)), optionally only where ``known(n)`` holds."""
        r1, r2 = bounds
        a1, a2 = alpha
        field = a1.field

        def value(n: Point) -> FieldElement | None:
            if known is not None and not known(n):
                return None
            m = ((tau[0] + n[0]) % r1, (tau[1] + n[1]) % r2)
            return error.evaluate(a1 ** m[0], a2 ** m[1])

        return cls.from_function(field, bounds, tau, value)

    def read(self, n: Point) -> FieldElement | None:
        return self.entries[n[0] % self.bounds[0]][n[1] % self.bounds[1]]

    __getitem__ = read

    def is_known(self, n: Point) -> bool:
        return self.read(n) is not None

    def known_points(self) -> list[Point]:
        r1, r2 = self.bounds
        return [(i, j) for i in range(r1) for j in range(r2) if self.entries[i][j] is not None]

    def is_fully_known(self) -> bool:
        return all(v is not None for row in self.entries for v in row)

    def is_zero(self) -> bool:
        """True if every known entry is zero."""
        return all(not v for row in self.entries for v in row if v is not None)

    def dump(self, points: Sequence[Point] | None = None) -> str:
        """Row-major text grid; rows index the first coordinate.

        With ``points`` (e.g. B_delta) each row lists only the selected
        entries, as in a staircase matrix; otherwise the full domain.
        """
        r1, r2 = self.bounds
        if points is None:
            points = [(i, j) for i in range(r1) for j in range(r2)]
        rows: dict[int, list[str]] = {}
        for p in sorted(points):
            v = self.read(p)
            rows.setdefault(p[0], []).append("?" if v is None else str(v))
        return "\n".join(" ".join(rows[i]) for i in sorted(rows))


def read(table: SyndromeTable, n: Point) -> FieldElement | None:
    return table.read(n)


def apply(f: Poly, table: SyndromeTable, n: Point, order: MonomialOrder,
          lead: Point | None = None) -> FieldElement | None:
    """f[U]_n = sum_m f_m u_(m+n-s) with s = LP(f), zero when n is not above s.

    Returns ``None`` when a needed entry of the table is unknown.
    """
    s = f.leading_power(order) if lead is None else lead
    if not leq_partial(s, n):
        return table.field.zero
    field = table.field
    total = field.zero
    off = psub(n, s)
    for m, c in f.terms.items():
        u = table.read(padd(m, off))
        if u is None:
            return None
        total = field.add(total, c * u)
    return total


def apply_strict(f: Poly, table: SyndromeTable, n: Point, order: MonomialOrder,
                 lead: Point | None = None) -> FieldElement:
    """Like :func:`apply` but raises :class:`UnknownSyndromeError`."""
    v = apply(f, table, n, order, lead)
    if v is None:
        s = f.leading_power(order) if lead is None else lead
        off = psub(n, s)
        for m in f.terms:
            if table.read(padd(m, off)) is None:
                raise UnknownSyndromeError(padd(m, off), n)
    return v


def is_valid_up_to(f: Poly, table: SyndromeTable, k: Point, order: MonomialOrder,
                   points: Iterable[Point] | None = None) -> bool:
    """True iff f[U]_n = 0 for every n above LP(f) with n <_T k.

    ``points`` restricts the candidate n (default: the fundamental domain);
    vacuously true when nothing qualifies.
    """
    s = f.leading_power(order)
    if points is None:
        r1, r2 = table.bounds
        points = [(i, j) for i in range(r1) for j in range(r2)]
    for n in points:
        if leq_partial(s, n) and order.less(n, k):
            if apply_strict(f, table, n, order, s):
                return False
    return True


def hypothesis_status(table: SyndromeTable, t: int) -> dict[str, bool]:
    """Nonzero-syndrome hypotheses tied to each monomial order.

    lex: u_(0,j) != 0 for some j < t. graded: u_(1,0) or u_(0,1) != 0.
    Unknown entries count as zero.
    """
    lex = any(table.read((0, j)) for j in range(max(t, 0)) if table.read((0, j)) is not None)
    graded = any(table.read(p) for p in ((1, 0), (0, 1)) if table.read(p) is not None)
    return {"lex": bool(lex), "graded": bool(graded)}


def dump_b_matrix(table: SyndromeTable, t: int) -> str:
    """The table restricted to B_(2t+1), rows = first coordinate."""
    return table.dump(b_delta(2 * t + 1, table.bounds))

"""End-to-end locator decoding: syndromes, restricted BMS, root search,
error values, verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .bms import CASE4_LITERAL, BmsState, run_restricted
from .code import AbelianCode, syndromes_of
from .gf import FieldElement
from .lattice import MonomialOrder, Point, b_delta, fmt_point
from .linalg import SingularSystemError, solve_field
from .poly2 import Poly, QuotientPoly, defining_set_of_poly_set
from .syndrome import SyndromeTable, UnknownSyndromeError, hypothesis_status

CORRECTED = "corrected"
NO_ERROR = "no-error"
FAILURE = "failure"
UNKNOWN_PREFIX = "needed syndrome outside the defining set"


class DecodeFailure(Exception):
    pass


@dataclass
class DecodeResult:
    status: str
    error: QuotientPoly
    corrected: QuotientPoly
    reason: str = ""
    order: MonomialOrder | None = None
    state: BmsState | None = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in (CORRECTED, NO_ERROR)

    def summary(self) -> str:
        if self.status == FAILURE:
            return f"failure: {self.reason}"
        if self.status == NO_ERROR:
            return "no-error"
        return f"corrected {self.error.weight()} error(s): {self.error.format()}"


def locate(F: Iterable[Poly], code: AbelianCode) -> set[Point]:
    """Common zeros of F among alpha^m, m in I (exhaustive)."""
    return defining_set_of_poly_set(F, code.alpha, code.bounds)


def solve_values(support: Iterable[Point], table: SyndromeTable, code: AbelianCode,
                 points: Iterable[Point] | None = None) -> dict[Point, FieldElement]:
    """Solve sum_p e_p alpha^(p.(tau+m)) = u_m over m in ``points``.

    ``points`` defaults to B_(2t+1). Raises :class:`DecodeFailure` if the
    system is singular or inconsistent or a value is zero or outside GF(q).
    """
    support = sorted(support)
    if not support:
        raise DecodeFailure("empty support")
    if points is None:
        points = b_delta(2 * code.t + 1, code.bounds)
    a1, a2 = code.alpha
    tau = code.tau
    rows, rhs = [], []
    for m in points:
        u = table.read(m)
        if u is None:
            continue
        rows.append([a1 ** (p[0] * (tau[0] + m[0])) * a2 ** (p[1] * (tau[1] + m[1])) for p in support])
        rhs.append(u)
    if len(rows) < len(support):
        raise DecodeFailure(f"{len(rows)} equations for {len(support)} unknown values")
    try:
        values = solve_field(rows, rhs, code.field)
    except SingularSystemError as exc:
        raise DecodeFailure(f"error-value system: {exc}") from None
    L = code.field
    out = {}
    for p, v in zip(support, values):
        if not v:
            raise DecodeFailure(f"error value at {fmt_point(p)} is zero")
        if not L.in_base_field(v):
            raise DecodeFailure(f"error value {v} at {fmt_point(p)} is not in GF({code.q})")
        out[p] = v
    return out


def _attempt(code: AbelianCode, received: QuotientPoly, table: SyndromeTable, t: int,
             order: MonomialOrder, case4: str) -> DecodeResult:
    zero = QuotientPoly(code.field, code.bounds)
    try:
        state = run_restricted(table, t, order, case4)
    except UnknownSyndromeError as exc:
        return DecodeResult(FAILURE, zero, received, f"{UNKNOWN_PREFIX} for t={t}: {exc}", order,
                            diagnostics={"unknown_syndrome": exc.point})
    diag = {"steps": len(state.trace) - 1,
            "nonzero_discrepancies": sum(1 for r in state.trace[1:] if any(r.discrepancies)),
            "footprint": state.delta.size(),
            "fallbacks": state.fallbacks}
    support = locate(state.F, code)
    if len(support) != state.delta.size():
        return DecodeResult(FAILURE, zero, received,
                            f"{len(support)} roots but footprint size {state.delta.size()}",
                            order, state, diag)
    if len(support) > t:
        return DecodeResult(FAILURE, zero, received, f"{len(support)} error positions exceed t={t}",
                            order, state, diag)
    try:
        values = solve_values(support, table, code, b_delta(2 * t + 1, code.bounds))
    except DecodeFailure as exc:
        return DecodeResult(FAILURE, zero, received, str(exc), order, state, diag)
    error = QuotientPoly(code.field, code.bounds, values)
    corrected = received - error
    residual = syndromes_of(code, corrected)
    if not residual.is_zero():
        return DecodeResult(FAILURE, zero, received, "corrected word fails a known syndrome",
                            order, state, diag)
    return DecodeResult(CORRECTED, error, corrected, "", order, state, diag)


def decode(code: AbelianCode, received: QuotientPoly, t: int | None = None,
           order: MonomialOrder | str = MonomialOrder.LEX, case4: str = CASE4_LITERAL,
           retry: bool = True) -> DecodeResult:
    """Decode ``received``; failures are returned, never raised.

    If the first attempt fails and either the nonzero-syndrome hypothesis of
    its order does not hold or it needed a syndrome that is not known, the
    other order is tried (``retry``). Both attempts are listed in
    ``diagnostics["attempts"]``.
    """
    order = MonomialOrder.parse(order)
    t = code.t if t is None else t
    zero = QuotientPoly(code.field, code.bounds)
    table = syndromes_of(code, received)
    if table.is_zero():
        return DecodeResult(NO_ERROR, zero, received, order=order,
                            diagnostics={"attempts": []})
    if t < 1:
        return DecodeResult(FAILURE, zero, received, "nonzero syndromes but t = 0", order)
    hyp = hypothesis_status(table, t)
    first = _attempt(code, received, table, t, order, case4)
    attempts = [(order.value, first.status, first.reason)]
    result = first
    needs_other = not hyp[order.value] or "unknown_syndrome" in first.diagnostics
    if first.status == FAILURE and retry and needs_other:
        second = _attempt(code, received, table, t, order.other, case4)
        attempts.append((order.other.value, second.status, second.reason))
        if second.status == CORRECTED:
            result = second
    result.diagnostics.update({"hypothesis": hyp, "attempts": attempts})
    return result

"""Seeded round-trip experiments and the restricted-vs-full comparison."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .bms import BmsInternalError, growth_violations, run_full, run_restricted, silent_outside
from .code import AbelianCode, full_syndromes, random_codeword
from .decode import CORRECTED, decode, locate
from .lattice import MonomialOrder, fmt_points
from .oracle import min_weight_witnesses
from .poly2 import QuotientPoly, format_poly
from .syndrome import UnknownSyndromeError, hypothesis_status


@dataclass
class TrialRecord:
    trial: int
    order: str
    weight: int
    error: str
    status: str
    recovered: bool
    order_used: str
    hyp_lex: bool
    hyp_graded: bool
    full_support_equal: bool
    full_F_equal: bool
    growth_violations: int
    silence_violations: int
    fallbacks: int
    reason: str = ""


def random_error(code: AbelianCode, weight: int, rng: np.random.Generator) -> QuotientPoly:
    L = code.field
    positions = code.positions()
    values = L.base_field_elements()
    chosen = rng.choice(len(positions), size=weight, replace=False)
    return QuotientPoly(L, code.bounds, {positions[i]: values[int(rng.integers(len(values)))]
                                         for i in sorted(chosen)})


def _normalized_key(F) -> frozenset:
    return frozenset(F)


def run_trial(code: AbelianCode, t: int, order: MonomialOrder, weight: int,
              rng: np.random.Generator, index: int = 0) -> TrialRecord:
    """Random codeword + random error of the given weight; decode and compare
    the restricted run with the reference run on the full table."""
    c = random_codeword(code, rng)
    e = random_error(code, weight, rng)
    result = decode(code, c + e, t, order)
    recovered = result.status == CORRECTED and result.error == e and result.corrected == c
    full = full_syndromes(code, e)
    hyp = hypothesis_status(full, t)
    support_eq = F_eq = False
    growth = silence = 0
    reason = result.reason
    try:
        rs = run_restricted(full, t, order)
        fs = run_full(full, order)
        support_eq = locate(rs.F, code) == locate(fs.F, code)
        F_eq = _normalized_key(rs.F) == _normalized_key(fs.F)
        growth = len(growth_violations(fs, t))
        silence = len(silent_outside(fs, t))
    except (BmsInternalError, UnknownSyndromeError) as exc:
        reason = reason or f"reference run: {exc}"
    fallbacks = result.diagnostics.get("fallbacks", 0)
    return TrialRecord(index, order.value, weight, format_poly(e), result.status, recovered,
                       result.order.value if result.order else "", hyp["lex"], hyp["graded"],
                       support_eq, F_eq, growth, silence, fallbacks, reason)


def run_trials(code: AbelianCode, t: int | None = None, trials: int = 100, seed: int = 0,
               orders: Iterable[MonomialOrder | str] = (MonomialOrder.LEX, MonomialOrder.GRADED),
               max_weight: int | None = None) -> list[TrialRecord]:
    """``trials`` per order; weights cycle 1..max_weight (default t).

    Deterministic for a given seed: each order has its own child generator.
    """
    t = code.t if t is None else t
    max_weight = t if max_weight is None else max_weight
    orders = [MonomialOrder.parse(o) for o in orders]
    seeds = np.random.SeedSequence(seed).spawn(len(orders))
    out = []
    for order, ss in zip(orders, seeds):
        rng = np.random.default_rng(ss)
        for i in range(trials):
            weight = 1 + i % max(max_weight, 1)
            out.append(run_trial(code, t, order, weight, rng, i))
    return out


@dataclass
class OrderSummary:
    order: str
    trials: int
    recovered: int
    agreement: int
    growth_violations: int
    silence_violations: int
    retries: int
    fallbacks: int

    @property
    def recovery_rate(self) -> float:
        return self.recovered / self.trials if self.trials else math.nan

    @property
    def agreement_rate(self) -> float:
        return self.agreement / self.trials if self.trials else math.nan


def summarize(records: list[TrialRecord]) -> list[OrderSummary]:
    out = []
    for order in sorted({r.order for r in records}, key=lambda o: o != "lex"):
        rs = [r for r in records if r.order == order]
        out.append(OrderSummary(
            order, len(rs), sum(r.recovered for r in rs),
            sum(r.full_support_equal and r.full_F_equal for r in rs),
            sum(r.growth_violations for r in rs), sum(r.silence_violations for r in rs),
            sum(r.order_used not in ("", r.order) for r in rs), sum(r.fallbacks for r in rs)))
    return out


def witness_summary(code: AbelianCode, t: int, order: MonomialOrder | str, budget: int = 5000) -> dict:
    """First-witness search if the number of weight-<=t patterns is within budget."""
    n = code.length
    qm1 = code.q - 1
    patterns = sum(math.comb(n, w) * qm1**w for w in range(1, t + 1))
    if patterns > budget:
        return {"computed": False, "patterns": patterns}
    rep = min_weight_witnesses(code, t, order, exhaustive=False)
    covered = [l for l in rep.points if rep.changes_at[l] is not None and rep.skip_changes[l] is not None]
    return {"computed": True, "patterns": patterns, "points": len(rep.points),
            "covered": len(covered), "uncovered": fmt_points([l for l in rep.points if l not in covered])}


TRIAL_COLUMNS = [f for f in TrialRecord.__dataclass_fields__]


def records_tsv(records: list[TrialRecord]) -> str:
    lines = ["\t".join(TRIAL_COLUMNS)]
    for r in records:
        d = asdict(r)
        lines.append("\t".join(str(int(v)) if isinstance(v, bool) else str(v) for v in d.values()))
    return "\n".join(lines) + "\n"


def summary_tsv(summaries: list[OrderSummary]) -> str:
    cols = ["order", "trials", "recovered", "recovery_rate", "agreement", "agreement_rate",
            "growth_violations", "silence_violations", "retries", "fallbacks"]
    lines = ["\t".join(cols)]
    for s in summaries:
        lines.append("\t".join([s.order, str(s.trials), str(s.recovered), f"{s.recovery_rate:.4f}",
                                str(s.agreement), f"{s.agreement_rate:.4f}", str(s.growth_violations),
                                str(s.silence_violations), str(s.retries), str(s.fallbacks)]))
    return "\n".join(lines) + "\n"

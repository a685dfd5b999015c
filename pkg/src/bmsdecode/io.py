"""Code configuration files, word files and the l | F | G | Delta trace table.

Code files are JSON::

    {
      "name": "worked-example",
      "field": {"p": 2, "m": 1, "s": 4, "modulus": [1, 1, 0, 0, 1]},
      "bounds": [5, 15],
      "orbits": [[0, 13], [1, 13], ...],
      "auto_orbits": "none",
      "alpha": [3, 1],
      "tau": [0, 13],
      "delta": 5
    }

``modulus`` lists coefficients low-to-high and may be omitted (smallest
primitive polynomial). ``alpha`` holds exponents of the primitive element
and may be omitted (a^((|L|-1)/r_i)). ``auto_orbits`` adds the orbits of
tau + B_delta ("b") or of tau + the read closure ("reads") to ``orbits``.
A code file written by ``make-code`` carries the same keys plus a
``derived`` block that is ignored on loading.
"""
from __future__ import annotations

import json
from pathlib import Path

from .bms import BmsState, TraceRow, read_closure
from .code import AbelianCode, build_code
from .gf import FieldSpec
from .lattice import b_delta, fmt_point
from .poly2 import QuotientPoly, format_poly, parse_word

AUTO_ORBITS = ("none", "b", "reads")


def code_from_dict(d: dict) -> AbelianCode:
    spec = FieldSpec.from_dict(d["field"])
    bounds = tuple(int(x) for x in d["bounds"])
    tau = tuple(int(x) for x in d.get("tau", (0, 0)))
    delta = int(d.get("delta", 0))
    orbits = [tuple(int(x) for x in o) for o in d.get("orbits", [])]
    auto = d.get("auto_orbits", "none")
    if auto not in AUTO_ORBITS:
        raise ValueError(f"auto_orbits must be one of {AUTO_ORBITS}, got {auto!r}")
    if auto != "none":
        if delta < 3:
            raise ValueError("auto_orbits needs delta >= 3")
        pts = b_delta(delta) if auto == "b" else read_closure((delta - 1) // 2)
        orbits += [((tau[0] + n[0]) % bounds[0], (tau[1] + n[1]) % bounds[1]) for n in pts]
    alpha = d.get("alpha")
    return build_code(spec, bounds, orbits, tuple(alpha) if alpha is not None else None,
                      tau, delta, d.get("name", ""))


def code_to_dict(code: AbelianCode, derived: bool = True) -> dict:
    d = {
        "name": code.name,
        "field": code.spec.to_dict(),
        "bounds": list(code.bounds),
        "orbits": [list(o) for o in code.orbits],
        "alpha": list(code.alpha_exponents),
        "tau": list(code.tau),
        "delta": code.designed_delta,
    }
    if derived:
        info = code.describe()
        info["defining_set"] = [list(m) for m in sorted(code.defining_set)]
        d["derived"] = info
    return d


def load_code(path: str | Path) -> AbelianCode:
    with open(path) as fh:
        return code_from_dict(json.load(fh))


def save_code(code: AbelianCode, path: str | Path) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code), indent=2) + "\n")


def read_word(path: str | Path, code: AbelianCode) -> QuotientPoly:
    """A word file holds one polynomial; '#' starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    text = " + ".join(ln for ln in lines if ln)
    return parse_word(text or "0", code.field, code.bounds)


def write_word(word: QuotientPoly, path: str | Path) -> None:
    Path(path).write_text(format_poly(word) + "\n")


# trace ---------------------------------------------------------------------

def _fmt_set(items: list[str]) -> str:
    return "{" + ", ".join(items) + "}"


def format_delta(row: TraceRow) -> str:
    return _fmt_set([fmt_point(p) for p in row.delta.points()])


def trace_rows(state: BmsState) -> list[tuple[str, str, str, str]]:
    """(l, F, G, Delta) strings, one per trace snapshot."""
    order = state.order
    out = []
    for row in state.trace:
        l = "init" if row.l is None else fmt_point(row.l)
        F = _fmt_set([format_poly(f, order) for f in row.F])
        G = _fmt_set([format_poly(r.g, order) for r in row.G])
        out.append((l, F, G, format_delta(row)))
    return out


def render_trace(state: BmsState) -> str:
    """Pipe-separated table with header ``l | F | G | Delta``."""
    lines = ["l | F | G | Delta"]
    lines += [" | ".join(r) for r in trace_rows(state)]
    return "\n".join(lines) + "\n"


def trace_records(state: BmsState) -> list[dict]:
    """Structured trace: one dict per step, G with fail points and discrepancies."""
    order = state.order
    out = []
    for row in state.trace:
        out.append({
            "l": None if row.l is None else list(row.l),
            "procedure": row.procedure,
            "F": [format_poly(f, order) for f in row.F],
            "G": [{"g": format_poly(r.g, order), "fail_point": list(r.fail_point),
                   "discrepancy": str(r.discrepancy)} for r in row.G],
            "defining_points": [list(p) for p in row.delta.defining_points],
            "discrepancies": [str(w) for w in row.discrepancies],
        })
    return out

"""Command line: build codes, encode, corrupt, decode with traces, run experiments."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bms import CASE4_INCLUSIVE, CASE4_LITERAL, run_full
from .code import HyperbolicConditionError, build_code, random_codeword, syndromes_of
from .decode import FAILURE, decode
from .gf import FieldError
from .io import code_from_dict, load_code, read_word, render_trace, save_code, trace_records
from .lattice import MonomialOrder, parse_point
from .poly2 import format_poly
from .syndrome import dump_b_matrix

EXIT_OK = 0
EXIT_DECODE_FAILURE = 1
EXIT_INVALID = 2


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        return load_code(path)
    except (HyperbolicConditionError, FieldError, ValueError, KeyError) as exc:
        raise SystemExit(_fail_validation(exc))


def _fail_validation(exc: Exception) -> int:
    _err(str(exc))
    return EXIT_INVALID


def _with_tau(code, tau_text: str | None):
    if tau_text is None:
        return code
    tau = parse_point(tau_text)
    return build_code(code.spec, code.bounds, code.orbits, code.alpha_exponents, tau,
                      code.designed_delta, code.name)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_make_code(args) -> int:
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
        code = code_from_dict(cfg)
    except (HyperbolicConditionError, FieldError, ValueError, KeyError) as exc:
        return _fail_validation(exc)
    info = code.describe()
    if code.designed_delta == 0:
        print("warning: delta = 0, no hyperbolic-like constraint checked", file=sys.stderr)
    for key in ("name", "bounds", "q", "field_size", "defining_set_size", "dimension", "designed_delta", "t"):
        print(f"{key}\t{info[key]}")
    if code.designed_delta > 0:
        print(f"hyperbolic_like\ttau + B_{code.designed_delta} is contained in D")
    if args.output:
        save_code(code, args.output)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load(args.code)
    word = random_codeword(code, args.seed)
    if code.dimension == 0:
        print("warning: zero code, the only codeword is 0", file=sys.stderr)
    _emit(format_poly(word) + "\n", args.output)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    from .experiment import random_error

    code = _load(args.code)
    word = read_word(args.word, code)
    e = random_error(code, args.weight, np.random.default_rng(args.seed))
    print(f"error\t{format_poly(e)}", file=sys.stderr)
    _emit(format_poly(word + e) + "\n", args.output)
    return EXIT_OK


def cmd_syndromes(args) -> int:
    code = _with_tau(_load(args.code), args.tau)
    word = read_word(args.word, code)
    t = args.t if args.t is not None else code.t
    print(dump_b_matrix(syndromes_of(code, word), t))
    return EXIT_OK


def cmd_decode(args) -> int:
    try:
        code = _with_tau(_load(args.code), args.tau)
    except (HyperbolicConditionError, FieldError, ValueError) as exc:
        return _fail_validation(exc)
    word = read_word(args.word, code)
    t = args.t if args.t is not None else code.t
    result = decode(code, word, t, args.order, case4=args.case4, retry=not args.no_retry)
    print(f"status\t{result.status}")
    if result.status == FAILURE:
        print(f"reason\t{result.reason}")
    else:
        print(f"error\t{format_poly(result.error)}")
        print(f"corrected\t{format_poly(result.corrected)}")
    for order, status, reason in result.diagnostics.get("attempts", []):
        print(f"attempt\t{order}\t{status}\t{reason}")
    hyp = result.diagnostics.get("hypothesis")
    if hyp:
        print(f"hypothesis\tlex={int(hyp['lex'])}\tgraded={int(hyp['graded'])}")
    if args.trace and result.state is not None:
        print()
        sys.stdout.write(render_trace(result.state))
    if args.trace_json and result.state is not None:
        Path(args.trace_json).write_text(json.dumps(trace_records(result.state), indent=1) + "\n")
    return EXIT_OK if result.ok else EXIT_DECODE_FAILURE


def cmd_experiment(args) -> int:
    from .code import full_syndromes
    from .experiment import random_error, records_tsv, run_trials, summarize, summary_tsv, witness_summary
    from .reports import experiment_report

    code = _load(args.code)
    t = args.t if args.t is not None else code.t
    if t < 1:
        _err("t must be at least 1 (set --t or a designed delta >= 3)")
        return EXIT_INVALID
    orders = [MonomialOrder.parse(o) for o in args.orders.split(",")]
    records = run_trials(code, t, args.trials, args.seed, orders)
    summaries = summarize(records)
    witnesses = {o.value: witness_summary(code, t, o, args.witness_budget) for o in orders}
    report = experiment_report(code, t, args.trials, args.seed, summaries, witnesses)
    sys.stdout.write(report)
    if args.out:
        from . import plotting

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text(report)
        (out / "trials.tsv").write_text(records_tsv(records))
        (out / "summary.tsv").write_text(summary_tsv(summaries))
        plotting.summary_bars(summaries, out / "summary.png")
        plotting.weight_histogram(records, out / "weights.png")
        # one representative weight-t error for the discrepancy map
        rng = np.random.default_rng(args.seed)
        e = random_error(code, t, rng)
        for o in orders:
            state = run_full(full_syndromes(code, e), o)
            plotting.discrepancy_heatmap(state, t, code.bounds, out / f"discrepancies_{o.value}.png")
            plotting.footprint_growth(state, out / f"footprint_{o.value}.png")
    bad = any(s.growth_violations or s.silence_violations for s in summaries)
    return EXIT_DECODE_FAILURE if bad else EXIT_OK


def cmd_witnesses(args) -> int:
    from .reports import witness_report

    code = _load(args.code)
    t = args.t if args.t is not None else code.t
    orders = [MonomialOrder.parse(o) for o in args.orders.split(",")]
    _emit(witness_report(code, t, orders), args.output)
    return EXIT_OK


def cmd_convention_search(args) -> int:
    from .reports import convention_report

    _emit(convention_report(), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmsdecode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make-code", help="validate a code config and write a code file")
    p.add_argument("config")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_make_code)

    p = sub.add_parser("encode", help="write a random codeword")
    p.add_argument("code")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add a random error of given weight to a word")
    p.add_argument("code")
    p.add_argument("word")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("syndromes", help="print the syndrome matrix over B_(2t+1)")
    p.add_argument("code")
    p.add_argument("word")
    p.add_argument("--t", type=int)
    p.add_argument("--tau")
    p.set_defaults(func=cmd_syndromes)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("code")
    p.add_argument("word")
    p.add_argument("--t", type=int)
    p.add_argument("--order", choices=[o.value for o in MonomialOrder], default="lex")
    p.add_argument("--tau", help="override tau, e.g. '(0,13)'")
    p.add_argument("--trace", action="store_true", help="print the l | F | G | Delta table")
    p.add_argument("--trace-json", help="write the structured trace to this file")
    p.add_argument("--case4", choices=[CASE4_LITERAL, CASE4_INCLUSIVE], default=CASE4_LITERAL)
    p.add_argument("--no-retry", action="store_true", help="do not fall back to the other order")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("experiment", help="seeded round-trip trials with report and figures")
    p.add_argument("code")
    p.add_argument("--t", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orders", default="lex,graded")
    p.add_argument("--witness-budget", type=int, default=5000)
    p.add_argument("--out", help="directory for report.txt, TSV tables and PNG figures")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("witnesses", help="exhaustive B-minimality witness report")
    p.add_argument("code")
    p.add_argument("--t", type=int)
    p.add_argument("--orders", default="lex,graded")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("convention-search", help="recover the example's root convention")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convention_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

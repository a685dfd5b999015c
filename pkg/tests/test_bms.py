import numpy as np
import pytest

from bmsdecode import bms
from bmsdecode.bms import (CASE4_INCLUSIVE, AuxiliaryRecord, BmsInternalError, berlekamp_combine,
                           check_validity, growth_violations, init, read_closure, run_full,
                           run_restricted, silent_outside)
from bmsdecode.code import full_syndromes, hyperbolic_like_code, syndromes_of
from bmsdecode.experiment import random_error
from bmsdecode.gf import FieldSpec
from bmsdecode.lattice import MonomialOrder, b_delta
from bmsdecode.poly2 import Poly, QuotientPoly, defining_set_of_poly_set, parse_poly
from bmsdecode.syndrome import SyndromeTable, UnknownSyndromeError, apply

LEX, GRADED = MonomialOrder.LEX, MonomialOrder.GRADED


def polys(L, *texts):
    return [parse_poly(t, L) for t in texts]


@pytest.fixture(scope="module")
def ex_table(example_code, example_error):
    return syndromes_of(example_code, example_error)


@pytest.fixture(scope="module")
def ex_state(ex_table):
    return run_restricted(ex_table, 2, LEX)


def test_init(gf16):
    s = init(gf16)
    assert s.F == [Poly.one(gf16)] and s.G == [] and s.delta.size() == 0
    assert s.l == (0, 0)
    assert len(s.trace) == 1


def test_berlekamp_combine_example(gf16):
    f = parse_poly("X2 + a^13", gf16)
    rec = AuxiliaryRecord(Poly.one(gf16), (0, 0), gf16.element(4), (0, 0))
    h = berlekamp_combine(f, gf16.one, rec, (0, 2), LEX)
    assert h == parse_poly("X2^2 + a^13*X2 + a^11", gf16)


def test_berlekamp_combine_unit_ratio(gf16):
    f = parse_poly("X2", gf16)
    rec = AuxiliaryRecord(Poly.one(gf16), (0, 0), gf16.element(3), (0, 0))
    h = berlekamp_combine(f, gf16.element(3), rec, (0, 1), LEX)
    assert h == parse_poly("X2 + 1", gf16)
    with pytest.raises(ValueError):
        berlekamp_combine(f, gf16.zero, rec, (0, 1), LEX)


def test_combine_result_is_valid(ex_table, ex_state):
    # every stored F is valid for the table up to and including its step
    B = b_delta(5, order=LEX)
    for row in ex_state.trace[1:]:
        upto = B[:B.index(row.l) + 1]
        for f, s in zip(row.F, row.delta.defining_points):
            assert all(not apply(f, ex_table, n, LEX, s) for n in upto if n[0] >= s[0] and n[1] >= s[1])


def test_example_steps(ex_state, gf16):
    rows = {row.l: row for row in ex_state.trace[1:]}
    assert rows[(0, 0)].F == tuple(polys(gf16, "X1", "X2"))
    assert [r.g for r in rows[(0, 0)].G] == polys(gf16, "1")
    assert rows[(0, 0)].G[0].fail_point == (0, 0) and rows[(0, 0)].G[0].discrepancy == gf16.element(4)
    assert rows[(0, 0)].procedure == "2"
    assert rows[(0, 2)].delta.defining_points == ((1, 0), (0, 2))
    assert rows[(0, 3)].procedure == "1"
    assert rows[(0, 3)].F[1] == parse_poly("X2^2 + a^5*X2 + a^3", gf16)
    assert rows[(1, 0)].F[0] == parse_poly("X1 + a^6*X2 + a^2", gf16)
    assert rows[(1, 1)].procedure == "1"
    assert rows[(1, 1)].F[0] == parse_poly("X1 + a^8*X2 + a^7", gf16)
    assert rows[(1, 1)].delta == rows[(1, 0)].delta
    for l in [(2, 0), (3, 0)]:
        assert rows[l].procedure == "" and rows[l].F == rows[(1, 1)].F


def test_restricted_example_final(ex_state, example_code, gf16):
    assert ex_state.F == polys(gf16, "X1 + a^8*X2 + a^7", "X2^2 + a^5*X2 + a^3")
    assert set(ex_state.delta.points()) == {(0, 0), (0, 1)}
    assert defining_set_of_poly_set(ex_state.F, example_code.alpha, (5, 15)) == {(2, 2), (0, 1)}


def test_full_matches_restricted_on_example(example_code, example_error):
    full = full_syndromes(example_code, example_error)
    fs = run_full(full, LEX)
    assert defining_set_of_poly_set(fs.F, example_code.alpha, (5, 15)) == {(2, 2), (0, 1)}
    assert set(fs.F) == set(run_restricted(full, 2, LEX).F)


def test_zero_table(gf16):
    U = SyndromeTable.from_function(gf16, (5, 15), (0, 0), lambda n: gf16.zero)
    for run in (lambda: run_restricted(U, 2, LEX), lambda: run_full(U, GRADED)):
        s = run()
        assert s.F == [Poly.one(gf16)] and s.delta.size() == 0


def test_unknown_syndrome_is_loud(example_code, example_error):
    U = syndromes_of(example_code, example_error)
    with pytest.raises(UnknownSyndromeError):
        run_restricted(U, 3, LEX)             # B_7 needs (0,5), unknown here


@pytest.mark.parametrize("order", list(MonomialOrder))
def test_single_errors_everywhere(order):
    code = hyperbolic_like_code(FieldSpec.default(2, 1, 4), (5, 15), 5, (0, 0), cover_reads=True)
    L = code.field
    for p in code.positions():
        e = QuotientPoly(L, code.bounds, {p: L.one})
        s = run_restricted(syndromes_of(code, e), 2, order)
        assert s.delta.size() == 1
        assert defining_set_of_poly_set(s.F, code.alpha, code.bounds) == {p}


@pytest.mark.parametrize("name,t", [("gf4_5x5_t2", 2), ("gf2_7x7_t3", 3), ("gf2_9x9_t4", 4)])
@pytest.mark.parametrize("order", list(MonomialOrder))
def test_invariants_on_random_errors(matrix_codes, name, t, order):
    code = matrix_codes[name]
    rng = np.random.default_rng(17)
    pts = [(i, j) for i in range(code.bounds[0]) for j in range(code.bounds[1])]
    for k in range(25):
        e = random_error(code, 1 + k % t, rng)
        U = full_syndromes(code, e)
        fs = run_full(U, order)
        rs = run_restricted(U, t, order)
        assert growth_violations(fs, t) == [] and growth_violations(rs, t) == []
        assert silent_outside(fs, t) == []
        assert fs.delta.size() == e.weight() == rs.delta.size()
        assert set(rs.F) == set(fs.F)
        assert check_validity(fs, U, pts) == []
        # footprint monotone along the trace
        for a, b in zip(fs.trace, fs.trace[1:]):
            assert a.delta.issubset(b.delta)


def test_case4_switch_agrees(matrix_codes):
    code = matrix_codes["gf4_9x9_t4"]
    rng = np.random.default_rng(3)
    for k in range(20):
        e = random_error(code, 1 + k % 4, rng)
        U = syndromes_of(code, e)
        for order in MonomialOrder:
            a = run_restricted(U, 4, order)
            b = run_restricted(U, 4, order, case4=CASE4_INCLUSIVE)
            assert set(a.F) == set(b.F)
    with pytest.raises(ValueError):
        init(code.field, LEX, "sometimes")


def test_read_closure():
    assert [len(read_closure(t)) for t in (1, 2, 3, 4)] == [3, 10, 23, 42]
    assert sorted(set(read_closure(2)) - set(b_delta(5))) == [(1, 2), (2, 1)]
    for t in (1, 2, 3, 4):
        assert set(b_delta(2 * t + 1)) <= set(read_closure(t))


def test_example_reads_outside_b(example_code):
    """At l = (3,0) the lex run reads u_(2,1), which is outside B_5."""
    L = example_code.field
    B = set(b_delta(5))
    reads = set()

    class Spy(SyndromeTable):
        def read(self, n):
            reads.add((n[0] % 5, n[1] % 15))
            return super().read(n)

    base = syndromes_of(example_code, parse_poly("X1^2*X2^2 + X2", L).project((5, 15)))
    spy = Spy(base.field, base.bounds, base.tau, base.entries)
    run_restricted(spy, 2, LEX)
    assert (2, 1) in reads - B


def test_run_full_needs_full_table(example_code, example_error):
    with pytest.raises(ValueError):
        run_full(syndromes_of(example_code, example_error))


def test_schedule_must_increase(ex_table):
    with pytest.raises(ValueError):
        bms.run_schedule(ex_table, [(0, 1), (0, 0)], LEX)


def test_auxiliary_record_needs_discrepancy(gf16):
    with pytest.raises(ValueError):
        AuxiliaryRecord(Poly.one(gf16), (0, 0), gf16.zero, (0, 0))
    rec = AuxiliaryRecord(Poly.one(gf16), (1, 2), gf16.one, (0, 1))
    assert rec.corner == (1, 1) and rec.span == (2, 2)


def test_lex_two_periods_on_random_tables():
    """Arbitrary (not error-afforded) tables: two periods are needed in lex."""
    from bmsdecode.gf import GaloisField
    from bmsdecode.oracle import footprint_bruteforce
    L = GaloisField.get(FieldSpec.default(2, 1, 4))
    rng = np.random.default_rng(8)
    for _ in range(6):
        U = SyndromeTable.from_function(L, (3, 5), (0, 0),
                                        lambda n: L.element(int(rng.integers(0, L.n))) if rng.random() < 0.8 else L.zero)
        for order in MonomialOrder:
            try:
                s = run_full(U, order, periods=2)
            except BmsInternalError:       # pragma: no cover - would be a regression
                pytest.fail("two-period run raised")
            assert s.delta == footprint_bruteforce(U, order)

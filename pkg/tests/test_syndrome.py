import numpy as np
import pytest

from bmsdecode.code import full_syndromes, syndromes_of
from bmsdecode.gf import FieldSpec, GaloisField
from bmsdecode.lattice import MonomialOrder, leq_partial, padd
from bmsdecode.poly2 import Poly, parse_poly
from bmsdecode.syndrome import (SyndromeTable, UnknownSyndromeError, apply, apply_strict,
                                hypothesis_status, is_valid_up_to, read)

LEX, GRADED = MonomialOrder.LEX, MonomialOrder.GRADED


@pytest.fixture(scope="module")
def table(example_code, example_error):
    return syndromes_of(example_code, example_error)


def test_read_periodic(table, gf16):
    assert read(table, (0, 15)) == read(table, (0, 0)) == gf16.element(4)
    assert read(table, (5, 0)) == read(table, (0, 0))
    assert read(table, (7, 31)) == read(table, (2, 1))


def test_read_unknown(table):
    # tau + (0,3) = (0,1) lies in D, tau + (0,4) = (0,2) too; (0,5) -> (0,3) does not
    assert read(table, (0, 5)) is None
    assert not table.is_known((0, 5))


def test_apply_examples(table, gf16):
    one = Poly.one(gf16)
    for n in [(0, 0), (1, 1), (3, 0)]:
        assert apply(one, table, n, LEX) == read(table, n)
    f = parse_poly("X2 + a^13", gf16)
    assert apply(f, table, (0, 1), LEX) == gf16.zero
    g = parse_poly("X1 + a^2", gf16)
    assert apply(g, table, (0, 0), LEX) == gf16.zero      # (0,0) is not above (1,0)


def test_apply_unknown(table, gf16):
    f = parse_poly("X2", gf16)
    assert apply(f, table, (0, 5), LEX) is None
    with pytest.raises(UnknownSyndromeError) as exc:
        apply_strict(f, table, (0, 5), LEX)
    assert exc.value.point == (0, 5)


def test_is_valid_up_to_examples(table, gf16):
    B = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (3, 0)]
    f = parse_poly("X2^2 + a^5*X2 + a^3", gf16)
    assert is_valid_up_to(f, table, (0, 0), LEX)
    assert is_valid_up_to(f, table, (4, 0), LEX, points=B)
    assert not is_valid_up_to(Poly.one(gf16), table, (0, 1), LEX, points=B)


def _random_full_table(L, bounds, rng):
    return SyndromeTable.from_function(L, bounds, (0, 0),
                                       lambda n: L.element(int(rng.integers(-1, L.n)) if rng.random() < 0.9 else None))


def test_apply_linear_and_shift_invariant():
    L = GaloisField.get(FieldSpec.default(2, 2, 2))
    rng = np.random.default_rng(5)
    U = _random_full_table(L, (3, 5), rng)
    for _ in range(50):
        lead = (int(rng.integers(0, 3)), int(rng.integers(0, 3)))
        tails = {(int(rng.integers(0, 3)), int(rng.integers(0, 3))): L.element(int(rng.integers(0, L.n)))
                 for _ in range(3)}
        tails = {m: c for m, c in tails.items() if GRADED.less(m, lead)}
        f = Poly(L, {lead: L.one, **tails})
        g = Poly(L, {lead: L.element(int(rng.integers(0, L.n))),
                     **{m: c * c for m, c in tails.items()}})
        r = (int(rng.integers(0, 3)), int(rng.integers(0, 3)))
        for n in [(i, j) for i in range(6) for j in range(6)]:
            if not leq_partial(lead, n):
                continue
            assert apply(f + g, U, n, GRADED, lead) == apply(f, U, n, GRADED) + apply(g, U, n, GRADED)
            if leq_partial(padd(lead, r), n):
                assert apply(f.shift(r), U, n, GRADED) == apply(f, U, n, GRADED)


def test_codeword_tables_are_silent(example_code):
    from bmsdecode.code import random_codeword
    w = random_codeword(example_code, 2)
    U = syndromes_of(example_code, w)
    assert all(read(U, n) == example_code.field.zero for n in U.known_points())
    f = parse_poly("X1 + a^3*X2", example_code.field)
    for n in U.known_points():
        v = apply(f, U, n, LEX)
        assert v is None or not v


def test_hypothesis_status(example_code, example_error):
    full = full_syndromes(example_code, example_error)
    assert hypothesis_status(full, 2) == {"lex": True, "graded": True}
    L = example_code.field
    zero_row = SyndromeTable.from_function(L, (5, 15), (0, 0),
                                           lambda n: L.one if n == (1, 0) else L.zero)
    assert hypothesis_status(zero_row, 2) == {"lex": False, "graded": True}


def test_dump_marks_unknown(table):
    text = table.dump([(0, 0), (0, 5)])
    assert text == "a^4 ?"

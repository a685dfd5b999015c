import numpy as np
import pytest

from bmsdecode.bms import run_full
from bmsdecode.code import full_syndromes
from bmsdecode.experiment import random_error
from bmsdecode.gf import FieldSpec, GaloisField
from bmsdecode.lattice import DeltaSet
from bmsdecode.oracle import (error_patterns, footprint_bruteforce, format_modulus,
                              min_weight_witnesses, root_convention_search)
from bmsdecode.reports import EXAMPLE_BOUNDS, EXAMPLE_ERROR, EXAMPLE_MATRIX, EXAMPLE_TAU
from bmsdecode.syndrome import SyndromeTable


def test_footprint_example(example_code, example_error):
    U = full_syndromes(example_code, example_error)
    assert set(footprint_bruteforce(U, "lex").points()) == {(0, 0), (0, 1)}
    # X2 > X1 in the graded order, so the staircase lies along X1
    assert footprint_bruteforce(U, "graded") == run_full(U, "graded").delta
    assert set(footprint_bruteforce(U, "graded").points()) == {(0, 0), (1, 0)}


def test_footprint_zero_table(gf16):
    U = SyndromeTable.from_function(gf16, (5, 15), (0, 0), lambda n: gf16.zero)
    assert footprint_bruteforce(U) == DeltaSet.empty()


def test_footprint_weight_one(matrix_codes):
    code = matrix_codes["gf4_5x5_t2"]
    rng = np.random.default_rng(0)
    for _ in range(10):
        U = full_syndromes(code, random_error(code, 1, rng))
        assert footprint_bruteforce(U, "graded").size() == 1


def test_footprint_needs_full_table(example_code, example_error):
    from bmsdecode.code import syndromes_of
    with pytest.raises(ValueError):
        footprint_bruteforce(syndromes_of(example_code, example_error))


def test_u00_independent_of_alpha():
    L = GaloisField.get(FieldSpec(2, 1, 4, (1, 1, 0, 0, 1)))
    b = L.element(1)
    assert b ** 26 + b ** 13 == L.element(4)


def test_convention_search():
    res = root_convention_search(EXAMPLE_BOUNDS, EXAMPLE_ERROR, EXAMPLE_TAU, EXAMPLE_MATRIX,
                                 extra_points=[(4, 0)])
    assert len(res) == 64
    exact = [c for c in res if c.exact]
    assert len(exact) == 1
    best = exact[0]
    assert best.modulus == (1, 1, 0, 0, 1) and best.alpha_exponents == (3, 1)
    assert format_modulus(best.modulus) == "x^4 + x + 1"
    assert best.extra[(4, 0)] == "a^7"
    # the text's u_(4,0) = a^2 only arises under conventions that miss matrix entries
    assert all(not c.exact for c in res if c.extra[(4, 0)] == "a^2")
    assert res[0] is best
    assert all(c.diffs for c in res[1:])


def test_error_patterns_order(matrix_codes):
    code = matrix_codes["gf4_3x5_t1"]
    pats = list(error_patterns(code, 1))
    assert len(pats) == 15 * 3
    assert pats[0].support() == [(0, 0)]
    assert len({str(p) for p in pats}) == len(pats)


def test_witnesses_trivial(matrix_codes):
    rep = min_weight_witnesses(matrix_codes["gf2_3x5_t1"], 0)
    assert rep.points == [] and rep.patterns_searched == 0


def test_witnesses_small_code_reproducible(matrix_codes):
    code = matrix_codes["gf2_3x5_t1"]
    a = min_weight_witnesses(code, 1, "lex")
    b = min_weight_witnesses(code, 1, "lex")
    assert a.patterns_searched == 15
    assert a.change_counts == b.change_counts and a.skip_counts == b.skip_counts
    assert {str(v) for v in a.changes_at.values()} == {str(v) for v in b.changes_at.values()}
    # B_3 = {(0,0),(0,1),(1,0)}: every single error changes F at (0,0)
    assert a.change_counts[(0, 0)] == 15

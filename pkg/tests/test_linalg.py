import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmsdecode.gf import FieldSpec, GaloisField
from bmsdecode.linalg import (FieldArrays, SingularSystemError, nullspace_mod_p, rref_mod_p,
                              solvable_field, solve_field)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 6), st.integers(1, 8), st.integers(0, 10**6))
def test_nullspace(p, rows, cols, seed):
    A = np.random.default_rng(seed).integers(0, p, size=(rows, cols))
    N = nullspace_mod_p(A, p)
    R, piv = rref_mod_p(A, p)
    assert N.shape[0] == cols - len(piv)
    assert not ((A @ N.T) % p).any()
    assert len(piv) == R.shape[0]


def _slow_rank(field, keys):
    rows = [[field.from_key(int(k)) for k in r] for r in keys]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        k = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[rank], rows[k] = rows[k], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("spec", [FieldSpec.default(2, 1, 4), FieldSpec.default(3, 1, 2),
                                  FieldSpec.default(2, 2, 3)], ids=str)
def test_field_arrays_rank(spec):
    L = GaloisField.get(spec)
    ops = FieldArrays(L)
    rng = np.random.default_rng(1)
    for _ in range(30):
        r, c = rng.integers(1, 6, size=2)
        M = rng.integers(0, L.size, size=(r, c))
        if rng.random() < 0.3 and r > 1:
            M[-1] = M[0]
        assert ops.rank(M) == _slow_rank(L, M)
    x, y = 3 % L.size, 5 % L.size
    assert L.from_key(int(ops.mul(x, y))) == L.from_key(x) * L.from_key(y)
    assert L.from_key(int(ops.add(x, y))) == L.from_key(x) + L.from_key(y)
    assert L.from_key(ops.inv(x)) == L.from_key(x).inverse()


def test_solve_field(gf16):
    a = gf16.element
    rows = [[a(1), a(2)], [a(3), a(5)], [a(0), a(0)]]
    x = [a(7), a(11)]
    rhs = [sum((r * v for r, v in zip(row, x)), gf16.zero) for row in rows]
    assert solve_field(rows, rhs, gf16) == x
    assert solvable_field(rows, rhs, gf16)
    bad = rhs[:2] + [rhs[2] + gf16.one]
    with pytest.raises(SingularSystemError):
        solve_field(rows, bad, gf16)
    assert not solvable_field(rows, bad, gf16)
    with pytest.raises(SingularSystemError):
        solve_field([[a(1), a(1)], [a(2), a(2)]], [a(0), a(1)], gf16)

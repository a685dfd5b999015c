"""Dense linear algebra over GF(p) (numpy) and over L (field elements)."""
from __future__ import annotations

import numpy as np

from .gf import FieldElement, GaloisField


def rref_mod_p(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A over GF(p) and its pivot columns."""
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over GF(p)."""
    A = np.asarray(A)
    cols = A.shape[1]
    R, pivots = rref_mod_p(A, p) if A.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = (-R[i, fc]) % p
    return basis


class SingularSystemError(ArithmeticError):
    pass


def solve_field(rows: list[list[FieldElement]], rhs: list[FieldElement], field: GaloisField) -> list[FieldElement]:
    """Unique solution of an overdetermined system over L by Gauss-Jordan.

    Raises :class:`SingularSystemError` if the system is rank deficient or
    inconsistent.
    """
    n_unknowns = len(rows[0]) if rows else 0
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivot_row = 0
    for c in range(n_unknowns):
        k = next((i for i in range(pivot_row, len(M)) if M[i][c]), None)
        if k is None:
            raise SingularSystemError(f"column {c} has no pivot")
        M[pivot_row], M[k] = M[k], M[pivot_row]
        inv = M[pivot_row][c].inverse()
        M[pivot_row] = [v * inv for v in M[pivot_row]]
        for i in range(len(M)):
            if i != pivot_row and M[i][c]:
                factor = M[i][c]
                M[i] = [a - factor * b for a, b in zip(M[i], M[pivot_row])]
        pivot_row += 1
    for i in range(pivot_row, len(M)):
        if M[i][-1]:
            raise SingularSystemError("inconsistent system")
    return [M[i][-1] for i in range(n_unknowns)]


def solvable_field(rows: list[list[FieldElement]], rhs: list[FieldElement], field: GaloisField) -> bool:
    """True iff rows x = rhs has at least one solution over L."""
    n_unknowns = len(rows[0]) if rows else 0
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivot_row = 0
    for c in range(n_unknowns):
        k = next((i for i in range(pivot_row, len(M)) if M[i][c]), None)
        if k is None:
            continue
        M[pivot_row], M[k] = M[k], M[pivot_row]
        inv = M[pivot_row][c].inverse()
        M[pivot_row] = [v * inv for v in M[pivot_row]]
        for i in range(pivot_row + 1, len(M)):
            if M[i][c]:
                factor = M[i][c]
                M[i] = [a - factor * b for a, b in zip(M[i], M[pivot_row])]
        pivot_row += 1
    return all(not M[i][-1] for i in range(pivot_row, len(M)))


class FieldArrays:
    """Vectorized arithmetic on arrays of field keys (see GaloisField.to_key).

    Characteristic 2 adds by XOR; odd characteristic uses a full addition
    table, so it is limited to small fields.
    """

    ODD_TABLE_LIMIT = 2048

    def __init__(self, field: GaloisField):
        self.field = field
        self.p = field.spec.p
        self.size = field.size
        self.n = field.n
        self.exp = np.array([field.to_key(field.element(k)) for k in range(self.n)], dtype=np.int64)
        self.log = np.full(self.size, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(self.n)
        if self.p != 2:
            if self.size > self.ODD_TABLE_LIMIT:
                raise ValueError(f"odd-characteristic field of size {self.size} is too large")
            els = field.elements()
            keys = [field.to_key(x) for x in els]
            self._add = np.zeros((self.size, self.size), dtype=np.int64)
            for x, kx in zip(els, keys):
                for y, ky in zip(els, keys):
                    self._add[kx, ky] = field.to_key(x + y)
            self._neg = np.array([field.to_key(-field.from_key(k)) for k in range(self.size)], dtype=np.int64)

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._add[a, b]

    def neg(self, a):
        return a if self.p == 2 else self._neg[a]

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.exp[(self.log[a] + self.log[b]) % self.n]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(-self.log[a]) % self.n])

    def rank(self, M: np.ndarray) -> int:
        """Rank of a key matrix by Gaussian elimination."""
        M = np.array(M, dtype=np.int64)
        if M.size == 0:
            return 0
        rows, cols = M.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(M[r:, c])[0]
            if nz.size == 0:
                continue
            k = r + nz[0]
            if k != r:
                M[[r, k]] = M[[k, r]]
            M[r] = self.mul(M[r], self.inv(int(M[r, c])))
            below = r + 1 + np.nonzero(M[r + 1:, c])[0]
            if below.size:
                factors = M[below, c][:, None]
                M[below] = self.add(M[below], self.neg(self.mul(factors, M[r][None, :])))
            r += 1
        return r

"""Abelian codes in F(r1, r2): q-orbits, hyperbolic-like validation, encoding
and a brute-force minimum distance oracle.

Codewords are found as the kernel of the evaluation map restricted to
GF(p) coordinates (restriction of scalars from L), so everything here is
plain linear algebra mod p.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldElement, FieldError, FieldSpec, GaloisField
from .lattice import Point, b_delta, fmt_point
from .linalg import nullspace_mod_p, rref_mod_p
from .poly2 import QuotientPoly
from .syndrome import SyndromeTable


class HyperbolicConditionError(ValueError):
    """tau + B_delta is not contained in the defining set."""

    def __init__(self, missing: Point, tau: Point, delta: int):
        self.missing = missing
        self.tau = tau
        self.delta = delta
        super().__init__(f"tau + B_{delta} is not contained in D: index {fmt_point(missing)} "
                         f"(tau = {fmt_point(tau)}) lies in no listed orbit")


def q_orbit(a: Point, q: int, bounds: tuple[int, int]) -> set[Point]:
    """Orbit of a under coordinatewise multiplication by q mod (r1, r2)."""
    r1, r2 = bounds
    if math.gcd(r1, q) != 1 or math.gcd(r2, q) != 1:
        raise FieldError(f"gcd(r_i, {q}) != 1")
    start = (a[0] % r1, a[1] % r2)
    orbit = {start}
    cur = ((start[0] * q) % r1, (start[1] * q) % r2)
    while cur != start:
        orbit.add(cur)
        cur = ((cur[0] * q) % r1, (cur[1] * q) % r2)
    return orbit


def hyperbolic_gap(defining_set: Iterable[Point], tau: Point, delta: int,
                   bounds: tuple[int, int]) -> Point | None:
    """First point of tau + B_delta (lex order, canonical representatives) outside D."""
    if delta <= 0:
        return None
    D = set(defining_set)
    r1, r2 = bounds
    for n in b_delta(delta):
        m = ((tau[0] + n[0]) % r1, (tau[1] + n[1]) % r2)
        if m not in D:
            return m
    return None


@dataclass(frozen=True)
class AbelianCode:
    spec: FieldSpec
    bounds: tuple[int, int]
    defining_set: frozenset
    alpha_exponents: tuple[int, int]
    tau: Point = (0, 0)
    designed_delta: int = 0
    orbits: tuple[Point, ...] = ()
    name: str = dc_field(default="", compare=False)

    @property
    def field(self) -> GaloisField:
        return GaloisField.get(self.spec)

    @property
    def alpha(self) -> tuple[FieldElement, FieldElement]:
        return (self.field.element(self.alpha_exponents[0]), self.field.element(self.alpha_exponents[1]))

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def length(self) -> int:
        return self.bounds[0] * self.bounds[1]

    @property
    def t(self) -> int:
        """Error capability floor((delta - 1) / 2)."""
        return max((self.designed_delta - 1) // 2, 0)

    def positions(self) -> list[Point]:
        r1, r2 = self.bounds
        return [(i, j) for i in range(r1) for j in range(r2)]

    def syndrome_points(self) -> list[Point]:
        """n in I with tau + n in D, i.e. where syndromes are known."""
        r1, r2 = self.bounds
        tau = self.tau
        return [n for n in self.positions()
                if ((tau[0] + n[0]) % r1, (tau[1] + n[1]) % r2) in self.defining_set]

    # restriction of scalars ------------------------------------------------
    @cached_property
    def _evaluation_matrix(self) -> np.ndarray:
        """GF(p) matrix of w -> (w(alpha^m))_{m in D} over basis-coordinates of w.

        Columns: position index * m + basis index; rows: m in D (sorted),
        then the m*s polynomial-basis coordinates of L.
        """
        L = self.field
        basis = L.base_field_basis()
        D = sorted(self.defining_set)
        pos = self.positions()
        a1, a2 = self.alpha
        deg = self.spec.m * self.spec.s
        M = np.zeros((len(D) * deg, len(pos) * len(basis)), dtype=np.int64)
        for r, m in enumerate(D):
            for c, x in enumerate(pos):
                root = (a1 ** (m[0] * x[0])) * (a2 ** (m[1] * x[1]))
                for b, g in enumerate(basis):
                    M[r * deg:(r + 1) * deg, c * len(basis) + b] = L.to_vector(root * g)
        return M

    @cached_property
    def check_matrix(self) -> np.ndarray:
        """Independent rows of the evaluation matrix over GF(p)."""
        M = self._evaluation_matrix
        if M.shape[0] == 0:
            return np.zeros((0, M.shape[1]), dtype=np.int64)
        R, _ = rref_mod_p(M, self.spec.p)
        return R

    @cached_property
    def kernel_basis(self) -> np.ndarray:
        """GF(p) basis (rows) of the code in basis coordinates."""
        return nullspace_mod_p(self.check_matrix, self.spec.p)

    @property
    def dimension(self) -> int:
        """Dimension over GF(q)."""
        return self.kernel_basis.shape[0] // self.spec.m

    def word_from_coords(self, coords: Sequence[int]) -> QuotientPoly:
        L = self.field
        basis = L.base_field_basis()
        m = len(basis)
        terms = {}
        for c, x in enumerate(self.positions()):
            v = L.zero
            for b in range(m):
                k = int(coords[c * m + b]) % self.spec.p
                if k:
                    v = v + L.from_int(k) * basis[b]
            if v:
                terms[x] = v
        return QuotientPoly(L, self.bounds, terms)

    def is_codeword(self, word: QuotientPoly) -> bool:
        a1, a2 = self.alpha
        return all(not word.evaluate(a1 ** m[0], a2 ** m[1]) for m in self.defining_set)

    def describe(self) -> dict:
        gap = hyperbolic_gap(self.defining_set, self.tau, self.designed_delta, self.bounds)
        return {
            "name": self.name,
            "bounds": list(self.bounds),
            "q": self.q,
            "field_size": self.spec.size,
            "defining_set_size": len(self.defining_set),
            "dimension": self.dimension,
            "designed_delta": self.designed_delta,
            "t": self.t,
            "tau": list(self.tau),
            "hyperbolic_like": self.designed_delta > 0 and gap is None,
        }


def build_code(spec: FieldSpec, bounds: tuple[int, int], orbits: Iterable[Point],
               alpha_choice: tuple[int, int] | None = None, tau: Point = (0, 0),
               delta: int = 0, name: str = "") -> AbelianCode:
    """Code whose defining set is the union of the q-orbits of ``orbits``.

    ``alpha_choice`` gives the exponents (of the primitive element a) of the
    r1-th and r2-th roots; default a^((|L|-1)/r_i). Raises
    :class:`HyperbolicConditionError` if tau + B_delta escapes D.
    """
    L = GaloisField.get(spec)
    r1, r2 = int(bounds[0]), int(bounds[1])
    L.check_bounds(r1, r2)
    if alpha_choice is None:
        alpha_choice = (L.n // r1, L.n // r2)
    alpha_choice = (int(alpha_choice[0]) % L.n, int(alpha_choice[1]) % L.n)
    for k, r in zip(alpha_choice, (r1, r2)):
        if L.order_of(L.element(k)) != r:
            raise FieldError(f"a^{k} does not have multiplicative order {r}")
    reps = tuple((int(a[0]) % r1, int(a[1]) % r2) for a in orbits)
    D: set[Point] = set()
    for a in reps:
        D |= q_orbit(a, spec.q, (r1, r2))
    tau = (int(tau[0]) % r1, int(tau[1]) % r2)
    gap = hyperbolic_gap(D, tau, delta, (r1, r2))
    if gap is not None:
        raise HyperbolicConditionError(gap, tau, delta)
    return AbelianCode(spec, (r1, r2), frozenset(D), alpha_choice, tau, int(delta), reps, name)


def random_codeword(code: AbelianCode, seed: int | np.random.Generator | None = None) -> QuotientPoly:
    """Uniform random codeword (zero word when the code is trivial)."""
    rng = np.random.default_rng(seed)
    K = code.kernel_basis
    if K.shape[0] == 0:
        return QuotientPoly(code.field, code.bounds)
    coeffs = rng.integers(0, code.spec.p, size=K.shape[0])
    return code.word_from_coords((coeffs @ K) % code.spec.p)


def syndromes_of(code: AbelianCode, received: QuotientPoly) -> SyndromeTable:
    """u_n = received(alpha^(tau+n)) where tau+n lies in D, unknown elsewhere."""
    known = set(code.syndrome_points())
    return SyndromeTable.afforded_by(received, code.alpha, code.tau, code.bounds,
                                     known=lambda n: n in known)


def full_syndromes(code: AbelianCode, received: QuotientPoly) -> SyndromeTable:
    """Every entry u_n = received(alpha^(tau+n)), for reference runs."""
    return SyndromeTable.afforded_by(received, code.alpha, code.tau, code.bounds)


# minimum distance ----------------------------------------------------------

@dataclass(frozen=True)
class DistanceResult:
    """``value`` is the minimum distance if ``exact``, else a lower bound.

    ``value`` is ``math.inf`` for the zero code.
    """

    value: float
    exact: bool
    method: str

    def at_least(self, delta: int) -> bool:
        return self.value >= delta


def _base_coords(code: AbelianCode) -> np.ndarray:
    """coords[k] = GF(p) coordinates of the k-th nonzero element of GF(q)."""
    L = code.field
    basis = L.base_field_basis()
    p, m = code.spec.p, code.spec.m
    table = {}
    for vec in itertools.product(range(p), repeat=m):
        v = L.zero
        for b, k in enumerate(vec):
            if k:
                v = v + L.from_int(k) * basis[b]
        table[v.log] = vec
    return np.array([table[x.log] for x in L.base_field_elements()], dtype=np.int64)


def _enumerate_distance(code: AbelianCode, chunk: int = 1 << 14) -> int:
    K = code.kernel_basis
    p, m = code.spec.p, code.spec.m
    k = K.shape[0]
    best = code.length
    total = p**k
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // (p ** np.arange(k, dtype=np.int64))[None, :]) % p
        words = (digits @ K) % p
        weights = words.reshape(len(idx), code.length, m).any(axis=2).sum(axis=1)
        best = min(best, int(weights.min()))
    return best


def _subset_syndromes(cols: np.ndarray, j: int, p: int, packed: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Syndromes of all weighted subsets of size j.

    ``cols`` has shape (n, q-1, R). Returns (syndromes, position combos,
    coefficient combos); syndrome row a*Q + b belongs to combo a, coefficients b.
    """
    n, qm1, R = cols.shape
    combos = np.array(list(itertools.combinations(range(n), j)), dtype=np.int64).reshape(-1, j)
    coefs = np.array(list(itertools.product(range(qm1), repeat=j)), dtype=np.int64).reshape(-1, j)
    acc = np.zeros((len(combos), len(coefs), R), dtype=cols.dtype)
    for t in range(j):
        part = cols[combos[:, t]][:, coefs[:, t], :]
        if packed:
            acc ^= part
        else:
            acc = (acc + part) % p
    return acc.reshape(-1, R), combos, coefs


def _collision_distance(code: AbelianCode, budget: int) -> DistanceResult:
    """Meet-in-the-middle: all weighted subsets of size <= k have distinct
    syndromes iff d >= 2k+1."""
    p = code.spec.p
    H = code.check_matrix
    n = code.length
    m = code.spec.m
    coords = _base_coords(code)  # (q-1, m)
    # cols[i, c] = H applied to the word with value c at position i
    Hb = H.reshape(H.shape[0], n, m)
    cols = np.einsum("rnb,cb->ncr", Hb, coords) % p
    packed = p == 2
    if packed:
        cols = np.packbits(cols.astype(np.uint8), axis=2)
    else:
        cols = cols.astype(np.uint8)
    qm1 = cols.shape[1]
    levels: list[np.ndarray] = [np.zeros((1, cols.shape[2]), dtype=cols.dtype)]
    meta: list[tuple[np.ndarray, np.ndarray]] = [(np.zeros((1, 0), np.int64), np.zeros((1, 0), np.int64))]
    used = 1
    proven = 1  # d >= proven
    k = 0
    while True:
        k += 1
        if k > n:
            return DistanceResult(proven, False, "collision")
        count = math.comb(n, k) * qm1**k
        if used + count > budget:
            return DistanceResult(proven, False, "collision")
        syn, combos, coefs = _subset_syndromes(cols, k, p, packed)
        used += count
        levels.append(syn)
        meta.append((combos, coefs))
        allsyn = np.concatenate(levels)
        view = np.ascontiguousarray(allsyn).view(np.dtype((np.void, allsyn.shape[1]))).ravel()
        _, inverse, counts = np.unique(view, return_inverse=True, return_counts=True)
        if counts.max() == 1:
            proven = 2 * k + 1
            continue
        # a collision exists at size k; since none at k-1, d is 2k-1 or 2k
        offsets = np.cumsum([0] + [len(x) for x in levels])
        dup = np.nonzero(counts[inverse.ravel()] > 1)[0]
        if dup.size and dup.min() < offsets[k]:
            return DistanceResult(2 * k - 1, True, "collision")
        order = np.argsort(inverse.ravel()[dup], kind="stable")
        groups: dict[int, list[int]] = {}
        for idx in dup[order]:
            groups.setdefault(int(inverse.ravel()[idx]), []).append(int(idx))
        Q = qm1**k
        for members in groups.values():
            decoded = []
            for idx in members:
                local = idx - offsets[k]
                combo, coef = meta[k][0][local // Q], meta[k][1][local % Q]
                decoded.append(dict(zip(combo.tolist(), coef.tolist())))
            for a, b in itertools.combinations(decoded, 2):
                w = sum(1 for pos in set(a) | set(b) if a.get(pos) != b.get(pos))
                if w < 2 * k:
                    return DistanceResult(2 * k - 1, True, "collision")
        return DistanceResult(2 * k, True, "collision")


def min_distance_bruteforce(code: AbelianCode, budget: int = 2_000_000) -> DistanceResult:
    """Minimum distance by full enumeration if the code has at most
    ``budget`` words, else by a weight-limited syndrome collision search."""
    k = code.kernel_basis.shape[0]
    if k == 0:
        return DistanceResult(math.inf, True, "zero code")
    if code.spec.p**k <= budget:
        return DistanceResult(_enumerate_distance(code), True, "enumeration")
    return _collision_distance(code, budget)


def hyperbolic_like_code(spec: FieldSpec, bounds: tuple[int, int], delta: int,
                         tau: Point = (0, 0), extra: Iterable[Point] = (),
                         alpha_choice: tuple[int, int] | None = None, name: str = "",
                         cover_reads: bool = False) -> AbelianCode:
    """Smallest code (plus ``extra`` orbits) whose defining set contains tau + B_delta.

    With ``cover_reads`` the defining set also contains tau + R, R being every
    syndrome index the restricted iteration can read (see
    :func:`bmsdecode.bms.read_closure`), so decoding never meets an unknown value.
    """
    from .bms import read_closure

    r1, r2 = bounds
    pts = read_closure((delta - 1) // 2) if cover_reads else b_delta(delta)
    reps = [((tau[0] + n[0]) % r1, (tau[1] + n[1]) % r2) for n in pts]
    return build_code(spec, bounds, reps + list(extra), alpha_choice, tau, delta, name)

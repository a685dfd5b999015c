"""Finite field arithmetic over GF(q) and an extension L = GF(q^s).

Elements are stored by discrete logarithm with respect to a fixed primitive
element ``a`` (the residue of X modulo the field modulus), with a distinct
representation for zero. Addition goes through a Zech logarithm table.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_FIELD_SIZE = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or an operation mixing different fields."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _power_table(p: int, modulus: Sequence[int]) -> list[tuple[int, ...]] | None:
    """Successive powers of X modulo ``modulus`` until they cycle back to 1.

    Returns the list of coefficient vectors (low-to-high) of X^0, X^1, ...
    if X has order p^n - 1, otherwise None.
    """
    n = len(modulus) - 1
    size = p**n - 1
    one = (1,) + (0,) * (n - 1)
    table = [one]
    cur = list(one)
    for _ in range(size):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * m) % p for c, m in zip(cur, modulus[:n])]
        vec = tuple(cur)
        if vec == one:
            break
        table.append(vec)
    if len(table) != size:
        return None
    return table


@functools.lru_cache(maxsize=None)
def primitive_polynomial(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree n over GF(p).

    Candidates are ranked by the integer whose base-p digits are the
    coefficients (low-to-high), so for GF(16) this yields x^4 + x + 1.
    """
    if p**n > MAX_FIELD_SIZE:
        raise FieldError(f"field GF({p}^{n}) exceeds the size cap {MAX_FIELD_SIZE}")
    for code in range(p**n):
        coeffs = []
        c = code
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        if coeffs[0] == 0:
            continue
        modulus = tuple(coeffs) + (1,)
        if _power_table(p, modulus) is not None:
            return modulus
    raise FieldError(f"no primitive polynomial of degree {n} over GF({p})")  # pragma: no cover


def primitive_polynomials(p: int, n: int) -> list[tuple[int, ...]]:
    """All monic primitive polynomials of degree n over GF(p), in the ranking
    used by :func:`primitive_polynomial`."""
    if p**n > MAX_FIELD_SIZE:
        raise FieldError(f"field GF({p}^{n}) exceeds the size cap {MAX_FIELD_SIZE}")
    out = []
    for code in range(p**n):
        coeffs = [(code // p**k) % p for k in range(n)]
        if coeffs[0] == 0:
            continue
        modulus = tuple(coeffs) + (1,)
        if _power_table(p, modulus) is not None:
            out.append(modulus)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of the tower GF(p) ⊂ GF(q) ⊂ L with q = p^m and |L| = q^s.

    ``modulus`` lists the coefficients (low-to-high degree) of a monic
    primitive polynomial of degree m*s over GF(p) defining L.
    """

    p: int
    m: int
    s: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.m < 1 or self.s < 1:
            raise FieldError("extension degrees must be positive")
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))
        if len(self.modulus) != self.m * self.s + 1 or self.modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.m * self.s}")
        if self.size > MAX_FIELD_SIZE:
            raise FieldError(f"|L| = {self.size} exceeds the size cap {MAX_FIELD_SIZE}")

    @classmethod
    def default(cls, p: int, m: int = 1, s: int = 1) -> "FieldSpec":
        return cls(p, m, s, primitive_polynomial(p, m * s))

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def size(self) -> int:
        return self.p ** (self.m * self.s)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "s": self.s, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FieldSpec":
        if "modulus" in d and d["modulus"] is not None:
            return cls(int(d["p"]), int(d.get("m", 1)), int(d.get("s", 1)), tuple(d["modulus"]))
        return cls.default(int(d["p"]), int(d.get("m", 1)), int(d.get("s", 1)))


class FieldElement:
    """An element of L, either zero (``log is None``) or a^log."""

    __slots__ = ("field", "log")

    def __init__(self, field: "GaloisField", log: int | None):
        self.field = field
        self.log = log

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field is not self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field.add(self, other)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field.add(self, -other)

    def __neg__(self) -> "FieldElement":
        if self.log is None or self.field.spec.p == 2:
            return self
        return FieldElement(self.field, (self.log + self.field.half) % self.field.n)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if self.log is None or other.log is None:
            return self.field.zero
        return FieldElement(self.field, (self.log + other.log) % self.field.n)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if other.log is None:
            raise ZeroDivisionError("division by zero in finite field")
        if self.log is None:
            return self
        return FieldElement(self.field, (self.log - other.log) % self.field.n)

    def inverse(self) -> "FieldElement":
        return self.field.one / self

    def __pow__(self, k: int) -> "FieldElement":
        if self.log is None:
            if k == 0:
                return self.field.one
            if k < 0:
                raise ZeroDivisionError("zero to a negative power")
            return self
        return FieldElement(self.field, (self.log * k) % self.field.n)

    def __bool__(self) -> bool:
        return self.log is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field is other.field and self.log == other.log

    def __hash__(self) -> int:
        return hash((id(self.field), self.log))

    def __repr__(self) -> str:
        return "0" if self.log is None else f"a^{self.log}"

    __str__ = __repr__


class GaloisField:
    """Log/antilog/Zech tables for L = GF(p^(m*s)), built once and read-only.

    Use :func:`GaloisField.get` to share one instance per spec; elements of
    two separately constructed instances never mix.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.size = spec.size
        self.n = self.size - 1
        self.half = self.n // 2
        table = _power_table(spec.p, spec.modulus)
        if table is None:
            raise FieldError(f"modulus {list(spec.modulus)} is not primitive over GF({spec.p})")
        p = spec.p
        self._antilog = [_vec_to_int(v, p) for v in table]
        self._log = [None] * self.size
        for k, key in enumerate(self._antilog):
            self._log[key] = k
        # zech[k] = log(1 + a^k)
        self._zech: list[int | None] = []
        for key in self._antilog:
            self._zech.append(self._log[_add_one(key, p)])
        self.zero = FieldElement(self, None)
        self.one = FieldElement(self, 0)
        self._sub_step = self.n // (spec.q - 1)

    @classmethod
    @functools.lru_cache(maxsize=None)
    def get(cls, spec: FieldSpec) -> "GaloisField":
        return cls(spec)

    def __repr__(self) -> str:
        return f"GaloisField(GF({self.spec.p}^{self.spec.m * self.spec.s}), q={self.spec.q})"

    # construction helpers
    def element(self, k: int | None) -> FieldElement:
        """a^k, or zero for ``None``."""
        return self.zero if k is None else FieldElement(self, k % self.n)

    def from_int(self, c: int) -> FieldElement:
        """Image of the integer c under Z -> GF(p) -> L."""
        c %= self.spec.p
        return self.zero if c == 0 else FieldElement(self, self._log[c])

    def from_vector(self, coeffs: Sequence[int]) -> FieldElement:
        """Element with the given polynomial-basis coordinates (low-to-high)."""
        key = _vec_to_int([c % self.spec.p for c in coeffs], self.spec.p)
        log = self._log[key]
        return self.zero if log is None else FieldElement(self, log)

    def to_vector(self, x: FieldElement) -> tuple[int, ...]:
        """Polynomial-basis coordinates of x over GF(p), low-to-high."""
        deg = self.spec.m * self.spec.s
        if x.log is None:
            return (0,) * deg
        return _int_to_vec(self._antilog[x.log], self.spec.p, deg)

    def parse(self, text: str) -> FieldElement:
        """Parse "0", "1", "a", or "a^k" (k may be negative)."""
        t = text.strip().replace(" ", "")
        if t == "0":
            return self.zero
        if t == "1":
            return self.one
        if t == "a":
            return self.element(1)
        if t.startswith("a^"):
            body = t[2:].strip("()")
            return self.element(int(body))
        raise FieldError(f"cannot parse field element {text!r}")

    # arithmetic
    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x.log is None:
            return y
        if y.log is None:
            return x
        z = self._zech[(y.log - x.log) % self.n]
        if z is None:
            return self.zero
        return FieldElement(self, (x.log + z) % self.n)

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x * y

    def sum(self, items: Iterable[FieldElement]) -> FieldElement:
        total = self.zero
        for v in items:
            total = self.add(total, v)
        return total

    # structure
    def elements(self) -> list[FieldElement]:
        return [self.zero] + [FieldElement(self, k) for k in range(self.n)]

    def element_of_order(self, n: int) -> FieldElement:
        """a^((|L|-1)/n), an element of multiplicative order exactly n."""
        if n < 1 or self.n % n:
            raise FieldError(f"{n} does not divide |L| - 1 = {self.n}")
        return FieldElement(self, (self.n // n) % self.n)

    def all_primitive_roots(self, n: int) -> list[FieldElement]:
        """All elements of multiplicative order exactly n, by increasing exponent."""
        if n < 1 or self.n % n:
            raise FieldError(f"{n} does not divide |L| - 1 = {self.n}")
        step = self.n // n
        return [FieldElement(self, step * k) for k in range(n) if math.gcd(k, n) == 1]

    def order_of(self, x: FieldElement) -> int:
        if x.log is None:
            raise FieldError("zero has no multiplicative order")
        return self.n // math.gcd(self.n, x.log)

    def in_base_field(self, x: FieldElement) -> bool:
        """True iff x^q = x, i.e. x lies in GF(q) ⊂ L."""
        return x.log is None or x.log % self._sub_step == 0

    def base_field_elements(self) -> list[FieldElement]:
        """Nonzero elements of GF(q) by increasing exponent."""
        return [FieldElement(self, k) for k in range(0, self.n, self._sub_step)]

    def to_key(self, x: FieldElement) -> int:
        """Integer whose base-p digits are the polynomial-basis coordinates."""
        return 0 if x.log is None else self._antilog[x.log]

    def from_key(self, key: int) -> FieldElement:
        log = self._log[key]
        return self.zero if log is None else FieldElement(self, log)

    def base_field_basis(self) -> list[FieldElement]:
        """A GF(p)-basis 1, g, ..., g^(m-1) of GF(q), g a generator of GF(q)*."""
        return [FieldElement(self, self._sub_step * i) for i in range(self.spec.m)]

    def check_bounds(self, r1: int, r2: int) -> None:
        """Semisimplicity and root-of-unity requirements for F(r1, r2)."""
        q = self.spec.q
        for r in (r1, r2):
            if r < 1:
                raise FieldError(f"period {r} must be positive")
            if math.gcd(r, q) != 1:
                raise FieldError(f"gcd({r}, {q}) != 1: F({r1},{r2}) is not semisimple")
            if self.n % r:
                raise FieldError(f"{r} does not divide |L| - 1 = {self.n}")


def _vec_to_int(vec: Sequence[int], p: int) -> int:
    key = 0
    for c in reversed(vec):
        key = key * p + c
    return key


def _int_to_vec(key: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(key % p)
        key //= p
    return tuple(out)


def _add_one(key: int, p: int) -> int:
    low = key % p
    return key - low + (low + 1) % p


def smallest_extension(q: int, *orders: int) -> int:
    """Least s such that every given order divides q^s - 1."""
    for o in orders:
        if math.gcd(o, q) != 1:
            raise FieldError(f"gcd({o}, {q}) != 1")
    s = 1
    while any((q**s - 1) % o for o in orders):
        s += 1
    return s

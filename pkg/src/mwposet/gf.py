"""Exact arithmetic in F_q, the absolute trace, and sums of p-th roots of unity.

Elements of F_q (q = p^m) are integers in [0, q).  The base-p digits of an
element are the coefficients of its polynomial-basis representation, lowest
degree first: for p = 2 the integer 3 is 1 + x.

The additive character used everywhere is chi(a) = zeta_p ** Tr(a).  Sums of
character values are kept exactly as :class:`CycSum` objects.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    DivisionByZero,
    LengthMismatch,
    NonPrimeCharacteristic,
    OutOfRangeElement,
    ReducibleModulus,
)

# Monic irreducible moduli, leading coefficient first.
BUILTIN_MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 0, 1, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 0, 0, 1, 1),  # x^4 + x + 1
    25: (1, 1, 2),  # x^2 + x + 2
    27: (1, 0, 2, 1),  # x^3 + 2x + 1
}

# Arithmetic tables are precomputed up to this field size.
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- polynomials over F_p, coefficient lists lowest degree first ------------

def _poly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _poly_trim(a)
    return a


def _is_irreducible(modulus_low: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus_low) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(modulus_low, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with q = p**m.

    ``modulus`` is the defining monic polynomial, leading coefficient first;
    it is ``None`` for prime fields.
    """

    p: int
    m: int
    modulus: Optional[Tuple[int, ...]] = None
    _add: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, repr=False, compare=False)
    _mul: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, repr=False, compare=False)
    _trace: Optional[Tuple[int, ...]] = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise OutOfRangeElement(f"{a!r} is not an element of F_{self.q}")
        return a

    # digit helpers -----------------------------------------------------
    def _digits(self, a: int) -> list:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    # raw arithmetic (no range checks, no tables) ------------------------
    def _add_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, list(reversed(self.modulus)), p)
        rem += [0] * (self.m - len(rem))
        return self._from_digits(rem)

    # public arithmetic ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self._from_digits([(-d) % self.p for d in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        if self._trace is not None:
            return self._trace[a]
        return self._trace_raw(a)

    def _trace_raw(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.m):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        if t >= self.p:  # pragma: no cover - would mean a broken modulus
            raise ArithmeticError(f"trace of {a} left the prime subfield")
        return t


def field_make(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build F_{p^m}.

    ``modulus`` lists the coefficients of a monic irreducible polynomial of
    degree m, leading coefficient first.  For m > 1 it may be omitted when
    q is one of 4, 8, 9, 16, 25, 27.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**m
    if m == 1:
        if modulus is not None and len(modulus) not in (0, 2):
            raise ReducibleModulus("a prime field takes no modulus (or a linear one)")
        mod = None
    else:
        if modulus is None:
            if q not in BUILTIN_MODULI:
                raise ValueError(f"no built-in modulus for q={q}; pass one explicitly")
            modulus = BUILTIN_MODULI[q]
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[0] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}: {modulus}")
        if not _is_irreducible(list(reversed(mod)), p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")

    F = FieldSpec(p, m, mod)
    if q <= _TABLE_LIMIT:
        add = tuple(tuple(F._add_raw(a, b) for b in range(q)) for a in range(q))
        mul = tuple(tuple(F._mul_raw(a, b) for b in range(q)) for a in range(q))
        F = FieldSpec(p, m, mod, add, mul)
        tr = tuple(F._trace_raw(a) for a in range(q))
        F = FieldSpec(p, m, mod, add, mul, tr)
    return F


def field_from_order(q: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build F_q from its order, factoring q as a prime power."""
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return field_make(p, m, modulus)


def field_arith(F: FieldSpec, op: str, a: int, b: Optional[int] = None) -> int:
    F.check(a)
    if op in ("add", "mul"):
        if b is None:
            raise ValueError(f"{op} needs two operands")
        F.check(b)
        return F.add(a, b) if op == "add" else F.mul(a, b)
    if op == "neg":
        return F.neg(a)
    if op == "inv":
        return F.inv(a)
    raise ValueError(f"unknown field operation {op!r}")


def trace(F: FieldSpec, a: int) -> int:
    return F.trace(F.check(a))


def dot(F: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"vectors of length {len(u)} and {len(v)}")
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = F.add(s, F.mul(a, b))
    return s


@dataclass(frozen=True, eq=False)
class CycSum:
    """An element sum(coeffs[c] * zeta_p**c) of Z[zeta_p].

    Because 1 + zeta + ... + zeta**(p-1) = 0, coefficient vectors are only
    meaningful modulo the all-ones vector; equality and hashing use the
    normal form obtained by subtracting the minimum coefficient.
    """

    p: int
    coeffs: Tuple[int, ...]

    def normalized(self) -> Tuple[int, ...]:
        lo = min(self.coeffs)
        return tuple(c - lo for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycSum.from_int(self.p, other)
        if not isinstance(other, CycSum):
            return NotImplemented
        return self.p == other.p and self.normalized() == other.normalized()

    def __hash__(self) -> int:
        return hash((self.p, self.normalized()))

    def __add__(self, other: "CycSum") -> "CycSum":
        if isinstance(other, int):
            other = CycSum.from_int(self.p, other)
        if other.p != self.p:
            raise ValueError("cannot add sums of roots of unity of different orders")
        return CycSum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    @classmethod
    def zero(cls, p: int) -> "CycSum":
        return cls(p, (0,) * p)

    @classmethod
    def from_int(cls, p: int, k: int) -> "CycSum":
        return cls(p, (k,) + (0,) * (p - 1))

    def is_integer(self) -> bool:
        return len(set(self.coeffs[1:])) <= 1

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] - (self.coeffs[1] if self.p > 1 else 0)

    def __repr__(self) -> str:
        return f"CycSum(p={self.p}, coeffs={self.coeffs})"


def char_sum(F: FieldSpec, values: Iterable[int]) -> CycSum:
    """Exact sum of chi(a) over a multiset of field elements."""
    counts = Counter(F.trace(F.check(a)) for a in values)
    return CycSum(F.p, tuple(counts.get(c, 0) for c in range(F.p)))

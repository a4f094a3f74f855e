"""Arithmetic in GF(2) and GF(2^k).

Elements are stored as ints whose bits are the coefficients of a residue
polynomial modulo a fixed irreducible.  Addition is XOR.  The `Field`
object does the arithmetic on raw ints; `FieldElement` is a small value
type on top of it for callers who prefer operators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

# Conway polynomials over GF(2), bit i = coefficient of t^i.
MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1011011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10001101111,
    11: 0b100000000101,
    12: 0b1000011101011,
    13: 0b10000000011011,
    14: 0b100000010101001,
    15: 0b1000000000110101,
    16: 0b10000000000101101,
}

MAX_K = max(MODULI)


class FieldError(ValueError):
    """Bad field request or mixed-field arithmetic."""


def _polymulmod(a: int, b: int, mod: int, k: int) -> int:
    r = 0
    top = 1 << k
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= mod
    return r


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def is_irreducible(mod: int) -> bool:
    """Rabin's test for a polynomial over GF(2) given as a bit vector."""
    k = mod.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def frob(x, times):
        for _ in range(times):
            x = _polymulmod(x, x, mod, k)
        return x

    primes = [p for p in range(2, k + 1) if k % p == 0 and all(p % q for q in range(2, p))]
    for p in primes:
        h = frob(0b10, k // p) ^ 0b10
        if _polygcd(mod, h) != 1:
            return False
    return frob(0b10, k) == 0b10


class Field:
    """GF(2^k) with a fixed modulus; elements are ints in [0, 2^k)."""

    def __init__(self, k: int = 1, modulus: Optional[int] = None):
        if k < 1 or k > MAX_K:
            raise FieldError(f"extension degree must be in 1..{MAX_K}, got {k}")
        if modulus is None:
            modulus = MODULI[k]
        if modulus.bit_length() - 1 != k or not is_irreducible(modulus):
            raise FieldError(f"modulus {modulus:#b} is not irreducible of degree {k}")
        self.k = k
        self.modulus = modulus
        self.order = 1 << k
        self._build_tables()

    def _build_tables(self):
        q = self.order
        if q == 2:
            self._exp = [1, 1]
            self._log = [None, 0]
            return
        # find a generator of the unit group
        for g in range(2, q):
            exp = [0] * (2 * q)
            x = 1
            ok = True
            for i in range(q - 1):
                exp[i] = x
                x = _polymulmod(x, g, self.modulus, self.k)
                if x == 1 and i < q - 2:
                    ok = False
                    break
            if ok:
                break
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        log = [None] * q
        for i in range(q - 1):
            log[exp[i]] = i
        self._exp = exp
        self._log = log

    @property
    def name(self) -> str:
        if self.k == 1:
            return "gf2"
        if self.k == 2:
            return "gf4"
        return f"gf2e{self.k}"

    def __repr__(self):
        return f"Field({self.name}, modulus={self.modulus:#b})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self):
        return hash((self.k, self.modulus))

    # raw arithmetic on ints

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.k == 1:
            return 1
        return self._exp[self._log[a] + self._log[b]]

    def sq(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in " + self.name)
        if self.k == 1:
            return 1
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if not a:
            return 0
        if self.k == 1:
            return 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def sqrt(self, a: int) -> int:
        """The unique b with b^2 = a, namely a^(2^(k-1))."""
        return self.pow(a, 1 << (self.k - 1)) if a else 0

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(k-1)), which lies in GF(2)."""
        t = 0
        x = a
        for _ in range(self.k):
            t ^= x
            x = self.sq(x)
        return t

    def artin_schreier(self, c: int) -> Optional[int]:
        """A root d of d^2 + d = c, or None when the trace of c is 1.

        Of the two roots d and d+1 the one with bit 0 clear is returned,
        which is also the smaller bit vector.
        """
        if self.trace(c):
            return None
        # d -> d^2 + d is GF(2)-linear; solve bit by bit
        k = self.k
        cols = [self.sq(1 << i) ^ (1 << i) for i in range(k)]
        # augmented rows: row r has bit i set when cols[i] has bit r
        rows = []
        for r in range(k):
            row = 0
            for i in range(k):
                if (cols[i] >> r) & 1:
                    row |= 1 << i
            rows.append((row, (c >> r) & 1))
        pivots = {}
        for row, rhs in rows:
            for p, (prow, prhs) in pivots.items():
                if (row >> p) & 1:
                    row ^= prow
                    rhs ^= prhs
            if row:
                p = (row & -row).bit_length() - 1
                for q in list(pivots):
                    prow, prhs = pivots[q]
                    if (prow >> p) & 1:
                        pivots[q] = (prow ^ row, prhs ^ rhs)
                pivots[p] = (row, rhs)
            elif rhs:
                return None
        d = 0
        for p, (_, rhs) in pivots.items():
            if rhs:
                d |= 1 << p
        return d

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def units(self) -> Iterator[int]:
        return iter(range(1, self.order))

    def random(self, rng) -> int:
        return rng.randrange(self.order)

    def __call__(self, bits: int) -> "FieldElement":
        return FieldElement(bits, self)

    def fmt(self, a: int) -> str:
        """Human-readable element: polynomial in t, or 0/1."""
        if a < 2:
            return str(a)
        terms = []
        for i in range(a.bit_length() - 1, -1, -1):
            if (a >> i) & 1:
                terms.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
        return "+".join(terms)


@dataclass(frozen=True)
class FieldElement:
    bits: int
    field: Field

    def __post_init__(self):
        if not 0 <= self.bits < self.field.order:
            raise FieldError(f"{self.bits} is not a residue of degree < {self.field.k}")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands live in different fields")
            return other.bits
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.bits ^ b, self.field)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field.mul(self.bits, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field.div(self.bits, b), self.field)

    def __pow__(self, e: int):
        return FieldElement(self.field.pow(self.bits, e), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.bits), self.field)

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.field.sqrt(self.bits), self.field)

    def trace(self) -> int:
        return self.field.trace(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __repr__(self):
        return f"{self.field.fmt(self.bits)} in {self.field.name}"


def field_arith(a: FieldElement, b: Optional[FieldElement], op: str, e: int = 0) -> FieldElement:
    """Dispatch one of add, mul, inv, pow."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** e
    raise FieldError(f"unknown operation {op!r}")


def sqrt(a: FieldElement) -> FieldElement:
    return a.sqrt()


def artin_schreier(c: FieldElement) -> Optional[FieldElement]:
    d = c.field.artin_schreier(c.bits)
    return None if d is None else FieldElement(d, c.field)


@lru_cache(maxsize=None)
def GF(k: int = 1) -> Field:
    """Shared field instance for GF(2^k) with the built-in modulus."""
    return Field(k)


_NAME = re.compile(r"^gf(?:2e(\d+)|(\d+))$")


def parse_field(name: str) -> Field:
    """Parse 'gf2', 'gf4', 'gf8', ... or 'gf2e<k>'."""
    m = _NAME.match(name.strip().lower())
    if not m:
        raise FieldError(f"unrecognised field {name!r}; use gf2, gf4 or gf2e<k>")
    if m.group(1):
        k = int(m.group(1))
    else:
        q = int(m.group(2))
        if q < 2 or q & (q - 1):
            raise FieldError(f"{name!r}: order must be a power of two")
        k = q.bit_length() - 1
    if k > MAX_K:
        raise FieldError(f"{name!r}: degree above {MAX_K} is not in the modulus table")
    return GF(k)


__all__ = [
    "MODULI", "Field", "FieldElement", "FieldError", "GF", "parse_field",
    "field_arith", "sqrt", "artin_schreier", "is_irreducible",
]

"""Arithmetic in GF(2^f) for 4 <= f <= 20.

Field elements are plain Python ints whose bit i is the coefficient of x^i.
A :class:`FieldCtx` holds the modulus and (for q <= 2^16) log/antilog tables
keyed to the smallest primitive element.  Every scalar operation also has a
numpy counterpart (``*_arr``) used by the graph builders.
"""
from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from .errors import PreconditionError
from .density import factorize

MIN_F = 4
MAX_F = 20
TABLE_MAX_F = 16


# --- GF(2)[x] helpers ----------------------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, polymod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    return polymod(clmul(a, b), m)


def is_irreducible(poly: int) -> bool:
    """Rabin's test: x^(2^d) = x mod P and gcd(x^(2^(d/r)) - x, P) = 1."""
    d = poly.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True

    def x_pow_2k(k):
        t = 0b10
        for _ in range(k):
            t = _mulmod(t, t, poly)
        return t

    if x_pow_2k(d) != polymod(0b10, poly):
        return False
    for r, _ in factorize(d).factors:
        t = x_pow_2k(d // r) ^ 0b10
        if polygcd(poly, t) != 1:
            return False
    return True


def smallest_irreducible(f: int) -> int:
    for poly in range((1 << f) | 1, 1 << (f + 1), 2):
        if is_irreducible(poly):
            return poly
    raise AssertionError("no irreducible polynomial found")  # unreachable


def to_hex(x: int) -> str:
    return f"{x:#x}"


def from_hex(s: str) -> int:
    return int(s, 16)


# --- the field -----------------------------------------------------------

class FieldCtx:
    """The finite field GF(2^f) with a fixed irreducible modulus.

    Instances are immutable after construction.  With ``use_tables=False``
    every multiplication goes through shift-and-reduce, which is what fields
    with f > 16 always use.
    """

    def __init__(self, f: int, poly: int | None = None, use_tables: bool | None = None):
        if not isinstance(f, int) or not MIN_F <= f <= MAX_F:
            raise PreconditionError(f"field exponent f={f} outside [{MIN_F}, {MAX_F}]")
        if poly is None:
            poly = smallest_irreducible(f)
        elif poly.bit_length() - 1 != f:
            raise PreconditionError(f"polynomial {poly:#x} does not have degree {f}")
        elif not is_irreducible(poly):
            raise PreconditionError(f"polynomial {poly:#x} is reducible")
        self.f = f
        self.q = 1 << f
        self.poly = poly
        self._order_primes = [r for r, _ in factorize(self.q - 1).factors]
        if use_tables is None:
            use_tables = f <= TABLE_MAX_F
        self.has_tables = use_tables
        self.generator = self._find_generator()
        if use_tables:
            self._build_tables()

    # construction helpers

    def _slow_mul(self, x: int, y: int) -> int:
        f, poly, top = self.f, self.poly, self.q
        r = 0
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= poly
        return r

    def _slow_pow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.q - 1
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in self._order_primes):
                return g
        raise AssertionError("field has no primitive element")  # unreachable

    def _build_tables(self):
        n = self.q - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        g = self.generator
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[n:] = exp[:n]
        self._exp_np = exp
        self._log_np = log
        self._exp = exp.tolist()
        self._log = log.tolist()

    # identity / serialization

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.f, self.poly) == (other.f, other.poly)

    def __hash__(self):
        return hash((self.f, self.poly))

    def __repr__(self):
        return f"FieldCtx(f={self.f}, poly={self.poly:#x})"

    def to_json(self) -> dict:
        return {"f": self.f, "poly": to_hex(self.poly)}

    @classmethod
    def from_json(cls, d: dict) -> "FieldCtx":
        return cls(int(d["f"]), from_hex(d["poly"]))

    def elements(self) -> range:
        return range(self.q)

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise PreconditionError(f"{x!r} is not an element of GF(2^{self.f})")
        return x

    # scalar arithmetic

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        if self.has_tables:
            return self._exp[self._log[x] + self._log[y]]
        return self._slow_mul(x, y)

    def inv(self, x: int) -> int:
        if not x:
            raise ZeroDivisionError("0 has no inverse")
        if self.has_tables:
            return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]
        return self._slow_pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 raised to a negative power")
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self.has_tables:
            return self._exp[self._log[x] * e % (self.q - 1)]
        return self._slow_pow(x, e)

    def frob(self, x: int, f0: int) -> int:
        """x^(2^f0), by f0 squarings."""
        for _ in range(f0):
            x = self.mul(x, x)
        return x

    def root_exp(self, x: int, m: int) -> int:
        """The unique y with y^m = x; needs gcd(m, q-1) = 1."""
        n = self.q - 1
        if gcd(m, n) != 1:
            raise PreconditionError(f"gcd({m}, {n}) != 1: x -> x^{m} is not a bijection")
        if x == 0:
            return 0
        return self.pow(x, pow(m, -1, n))

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        if not x:
            raise PreconditionError("0 has no multiplicative order")
        t = self.q - 1
        for r in self._order_primes:
            while t % r == 0 and self.pow(x, t // r) == 1:
                t //= r
        return t

    def is_primitive(self, x: int) -> bool:
        if not x:
            raise PreconditionError("0 is never primitive")
        n = self.q - 1
        return all(self.pow(x, n // r) != 1 for r in self._order_primes)

    def primitive_elements(self) -> list[int]:
        return [x for x in range(1, self.q) if self.is_primitive(x)]

    def dlog(self, eta: int, x: int) -> int:
        """The i in [0, q-2] with eta^i = x."""
        if not x:
            raise PreconditionError("discrete log of 0")
        if not eta or not self.is_primitive(eta):
            raise PreconditionError(f"{eta:#x} is not a primitive element")
        n = self.q - 1
        if self.has_tables:
            return self._log[x] * pow(self._log[eta], -1, n) % n
        return self.bsgs_log(eta, x)

    def bsgs_log(self, eta: int, x: int) -> int:
        """Baby-step giant-step discrete logarithm (no tables needed)."""
        n = self.q - 1
        m = isqrt(n) + 1
        baby = {}
        y = 1
        for j in range(m):
            baby.setdefault(y, j)
            y = self._slow_mul(y, eta)
        giant = self._slow_pow(self._slow_pow(eta, m), n - 1)  # eta^-m
        y = x
        for i in range(m + 1):
            j = baby.get(y)
            if j is not None:
                return (i * m + j) % n
            y = self._slow_mul(y, giant)
        raise PreconditionError(f"{x:#x} is not a power of {eta:#x}")

    # vectorized arithmetic on int64 arrays

    def mul_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.has_tables:
            r = self._exp_np[self._log_np[x] + self._log_np[y]]
            return np.where((x == 0) | (y == 0), 0, r)
        x, y = np.broadcast_arrays(x, y)
        x = x.copy()
        y = y.copy()
        r = np.zeros(x.shape, dtype=np.int64)
        for _ in range(self.f):
            r ^= np.where(y & 1, x, 0)
            y >>= 1
            x <<= 1
            x ^= np.where(x & self.q, self.poly, 0)
        return r

    def pow_arr(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        if e < 0:
            return self.pow_arr(self.inv_arr(x), -e)
        if e == 0:
            return np.ones_like(x)
        if self.has_tables:
            r = self._exp_np[self._log_np[x] * (e % (self.q - 1)) % (self.q - 1)]
            return np.where(x == 0, 0, r)
        r = np.ones_like(x)
        while e:
            if e & 1:
                r = self.mul_arr(r, x)
            x = self.mul_arr(x, x)
            e >>= 1
        return r

    def inv_arr(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self.pow_arr(x, self.q - 2)

    def frob_arr(self, x, f0: int):
        x = np.asarray(x, dtype=np.int64)
        for _ in range(f0):
            x = self.mul_arr(x, x)
        return x


def field_new(f: int, poly: int | None = None) -> FieldCtx:
    return FieldCtx(f, poly)

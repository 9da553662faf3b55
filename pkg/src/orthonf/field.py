"""Finite fields F_q, q = p^k, with elements encoded as integers.

An element sum(c_i * t^i) of F_p[t]/(modulus) is stored as the integer
index sum(c_i * p^i).  For prime fields the index is the residue itself.
All scalar arithmetic works on these plain ints; the ``v*`` methods are the
elementwise equivalents on numpy integer arrays.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

import numpy as np

from .errors import (
    DivisionByZero,
    FieldError,
    NoDefaultModulus,
    NonPrimeCharacteristic,
    ReducibleModulus,
)

__all__ = ["FiniteField", "is_prime", "field_of_order", "DEFAULT_MODULI"]

# Low-to-high coefficients of a monic irreducible polynomial for each q.
DEFAULT_MODULI = {
    4: (1, 1, 1),  # t^2 + t + 1
    8: (1, 1, 0, 1),  # t^3 + t + 1
    9: (2, 2, 1),  # t^2 + 2t + 2
    16: (1, 1, 0, 0, 1),  # t^4 + t + 1
    25: (2, 4, 1),  # t^2 + 4t + 2
    27: (1, 2, 0, 1),  # t^3 + 2t + 1
}

TABLE_LIMIT = 256
MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- dense polynomials over Z_p, low-to-high coefficient lists ------------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over Z_p."""
    a = _trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(m, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    k = len(m) - 1
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not _poly_mod(m, divisor, p):
                return False
    return True


class FiniteField:
    """The finite field with ``p**k`` elements.

    Parameters
    ----------
    p : int
        Prime characteristic.
    k : int
        Extension degree.
    modulus : sequence of int, optional
        Low-to-high coefficients ``(c_0, ..., c_k)`` of a monic irreducible
        polynomial of degree ``k`` over Z_p.  Ignored when ``k == 1``.
        Defaults to a built-in choice for q in 4, 8, 9, 16, 25, 27.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        p, k = int(p), int(k)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if p >= MAX_CHARACTERISTIC:
            raise FieldError(f"characteristic {p} exceeds the supported range")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        self._add = self._mul = self._neg = self._inv = None
        if k == 1:
            self.modulus = None
            return

        if modulus is None:
            if self.q not in DEFAULT_MODULI:
                raise NoDefaultModulus(
                    f"no built-in modulus for q = {self.q}; supply one"
                )
            modulus = DEFAULT_MODULI[self.q]
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(
                f"modulus must be monic of degree {k} (got {len(modulus)} coefficients)"
            )
        if any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(list(modulus), p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over Z_{p}")
        self.modulus = modulus
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self):
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self._poly_add(a, b)
                mul[a, b] = mul[b, a] = self._poly_mul(a, b)
        neg = np.array([self._poly_neg(a) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        for t in (add, mul, neg, inv):
            t.setflags(write=False)
        self._add, self._mul, self._neg, self._inv = add, mul, neg, inv

    # -- encoding ---------------------------------------------------------

    def decode(self, a: int) -> tuple:
        """Coefficient tuple (c_0, ..., c_{k-1}) of the element with index ``a``."""
        a = int(a)
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise FieldError(f"at most {self.k} coefficients expected")
        index = 0
        for c in reversed(coeffs):
            index = index * self.p + int(c) % self.p
        return index

    def _poly_add(self, a, b):
        return self.encode(
            (x + y) % self.p for x, y in zip(self.decode(a), self.decode(b))
        )

    def _poly_neg(self, a):
        return self.encode((-x) % self.p for x in self.decode(a))

    def _poly_mul(self, a, b):
        prod = _poly_mul(_trim(self.decode(a)), _trim(self.decode(b)), self.p)
        return self.encode(_poly_mod(prod, list(self.modulus), self.p))

    # -- scalar arithmetic ------------------------------------------------

    def __contains__(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.q

    def check(self, a) -> int:
        if a not in self:
            raise FieldError(f"{a!r} is not an element index of F_{self.q}")
        return int(a)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add is not None:
            return int(self._add[a, b])
        return self._poly_add(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self._neg is not None:
            return int(self._neg[a])
        return self._poly_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul is not None:
            return int(self._mul[a, b])
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(int(a), self.p - 2, self.p)
        if self._inv is not None:
            return int(self._inv[a])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """``a**e`` by square-and-multiply; ``0**0 == 1``."""
        if e < 0:
            raise ValueError("negative exponent")
        if self.k == 1:
            return pow(int(a), int(e), self.p)
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    # -- vectorized arithmetic on index arrays ----------------------------

    def vadd(self, a, b):
        if self.k == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self._add is not None:
            return self._add[a, b]
        return _vec2(self._poly_add)(a, b)

    def vneg(self, a):
        if self.k == 1:
            return (-np.asarray(a)) % self.p
        if self._neg is not None:
            return self._neg[a]
        return _vec1(self._poly_neg)(a)

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if self.k == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        if self._mul is not None:
            return self._mul[a, b]
        return _vec2(self._poly_mul)(a, b)

    def vdot(self, a, b):
        """Field dot product of two 1-D arrays (or matrix-vector along the last axis)."""
        prod = self.vmul(a, b)
        if self.k == 1:
            return prod.sum(axis=-1) % self.p
        return self.vsum(prod)

    def vsum(self, a, axis=-1):
        a = np.moveaxis(np.asarray(a), axis, -1)
        if self.k == 1:
            return a.sum(axis=-1) % self.p
        out = np.zeros(a.shape[:-1], dtype=np.int64)
        for i in range(a.shape[-1]):
            out = self.vadd(out, a[..., i])
        return out

    @cached_property
    def power_table(self) -> np.ndarray:
        """``table[a, e] = a**e`` for exponents ``0 <= e < q``."""
        t = np.ones((self.q, self.q), dtype=np.int64)
        if self.q > 1:
            t[:, 1] = np.arange(self.q)
        for e in range(2, self.q):
            t[:, e] = self.vmul(t[:, e - 1], t[:, 1])
        t.setflags(write=False)
        return t

    # -- misc ---------------------------------------------------------------

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.k == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.k}, modulus={self.modulus})"

    def spec(self) -> str:
        """Field spec string understood by :func:`FiniteField.from_spec`."""
        if self.k == 1:
            return str(self.p)
        return f"{self.p}^{self.k}:m={self.encode_modulus()}"

    def encode_modulus(self) -> int:
        index = 0
        for c in reversed(self.modulus):
            index = index * self.p + c
        return index

    @classmethod
    def from_spec(cls, text: str) -> "FiniteField":
        """Parse ``p``, ``p^k`` or ``p^k:m=<index>``.

        ``<index>`` is the base-p encoding of the modulus coefficients,
        leading coefficient included (``t^2+t+1`` over F_2 is ``m=7``).
        """
        text = text.strip()
        base, _, opt = text.partition(":")
        try:
            if "^" in base:
                ps, ks = base.split("^", 1)
                p, k = int(ps), int(ks)
            else:
                p, k = int(base), 1
        except ValueError:
            raise FieldError(f"malformed field spec {text!r}") from None
        modulus = None
        if opt:
            key, _, val = opt.partition("=")
            if key.strip() != "m" or not val.strip().isdigit():
                raise FieldError(f"malformed modulus option in {text!r}")
            if not is_prime(p):
                raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
            index = int(val)
            modulus = []
            while index:
                index, c = divmod(index, p)
                modulus.append(c)
        return cls(p, k, modulus)


def field_of_order(q: int) -> FiniteField:
    """The field with ``q`` elements, using the built-in modulus if ``q`` is not prime."""
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            return FiniteField(p, k)
    raise FieldError(f"invalid field order {q}")


def _vec2(fn):
    uf = np.frompyfunc(lambda a, b: fn(int(a), int(b)), 2, 1)
    return lambda a, b: np.asarray(uf(a, b)).astype(np.int64)


def _vec1(fn):
    uf = np.frompyfunc(lambda a: fn(int(a)), 1, 1)
    return lambda a: np.asarray(uf(a)).astype(np.int64)

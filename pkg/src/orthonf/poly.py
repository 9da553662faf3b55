"""Sparse multivariate polynomials over a finite field.

Terms are stored as ``{exponent tuple: coefficient index}`` with zero
coefficients pruned.  Variables are ``x1 .. xn``; exponent position ``i``
belongs to ``x{i+1}``.
"""

from __future__ import annotations

import heapq
import re
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    CoefficientOutOfRange,
    ContextMismatch,
    LengthMismatch,
    ParseError,
    VariableOutOfRange,
    ZeroDivisor,
    ZeroPolynomial,
)
from .field import FiniteField
from .orders import LEX, MonomialBasis, MonomialOrder, get_order

__all__ = [
    "Polynomial",
    "parse_polynomial",
    "format_polynomial",
    "divide",
    "s_polynomial",
    "buchberger_check",
    "phi_coordinates",
    "phi_inverse",
    "reduce_exponent",
]


class Polynomial:
    """Immutable polynomial in ``n`` variables over ``field``."""

    __slots__ = ("field", "n", "_terms", "_hash")

    def __init__(self, field: FiniteField, n: int, terms: Mapping | None = None):
        self.field = field
        self.n = int(n)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.n:
                raise LengthMismatch(f"exponent {e} for a polynomial in {self.n} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = field.check(c)
            if c:
                clean[e] = field.add(clean.get(e, 0), c)
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, n, terms):
        # terms already canonical
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field, n):
        return cls._raw(field, n, {})

    @classmethod
    def constant(cls, field, n, c):
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, field, n, exps, c=1):
        return cls(field, n, {tuple(exps): c})

    @classmethod
    def variable(cls, field, n, i):
        """The variable ``x{i}`` (1-based)."""
        if not 1 <= i <= n:
            raise VariableOutOfRange(0, f"x{i} with n={n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(field, n, {tuple(e): 1})

    @classmethod
    def parse(cls, text, n, field):
        return parse_polynomial(text, n, field)

    # -- basic protocol --------------------------------------------------

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (
                self.field == other.field
                and self.n == other.n
                and self._terms == other._terms
            )
        if isinstance(other, int):
            # compare with the constant whose element index is ``other``
            if other == 0:
                return not self._terms
            return other in self.field and self._terms == {(0,) * self.n: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, n={self.n}, q={self.field.q})"

    def __str__(self):
        return format_polynomial(self)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def max_exponent(self) -> int:
        return max((max(e) for e in self._terms if e), default=0)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if self.field != other.field or self.n != other.n:
            raise ContextMismatch("polynomials over different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.n, other % self.field.q)
        self._check(other)
        F = self.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(F, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial._raw(F, self.n, {e: F.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.n, other % self.field.q)
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, (int, np.integer)):
            c = F.check(int(other))
            if not c:
                return Polynomial.zero(F, self.n)
            return Polynomial._raw(F, self.n, {e: F.mul(a, c) for e, a in self._terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, 0), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(F, self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.field, self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exps, c):
        """Multiply by the single term ``c * x^exps``."""
        F = self.field
        if not c:
            return Polynomial.zero(F, self.n)
        return Polynomial._raw(
            F,
            self.n,
            {tuple(a + b for a, b in zip(e, exps)): F.mul(v, c) for e, v in self._terms.items()},
        )

    # -- order-dependent -------------------------------------------------

    def leading_term(self, order=LEX):
        """``(exponent, coefficient)`` of the order-maximal term."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        key = get_order(order).key
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def sorted_terms(self, order=LEX):
        key = get_order(order).key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at ``point``; exponents of any size, ``0**0 == 1``."""
        if len(point) != self.n:
            raise LengthMismatch(f"point of length {len(point)} for n={self.n}")
        F = self.field
        point = [F.check(int(x)) for x in point]
        if F.k == 1:
            p = F.p
            total = 0
            for e, c in self._terms.items():
                v = c
                for x, k in zip(point, e):
                    if k:
                        v = v * pow(x, k, p) % p
                total += v
            return total % p
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = F.mul(v, F.pow(x, k))
                    if not v:
                        break
            total = F.add(total, v)
        return total

    __call__ = evaluate


# -- parsing and formatting ----------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x)|(?P<op>[-+*^]))")


def _tokenize(text):
    pos = 0
    toks = []
    end = len(text)
    while pos < end:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(pos + stripped, f"unexpected character {text[pos + stripped]!r}")
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_polynomial(text: str, n: int, field: FiniteField) -> Polynomial:
    """Parse ``text`` into a canonical polynomial in ``x1..xn``.

    Grammar::

        poly   := term (('+'|'-') term)*
        term   := coeff ('*' factor)* | factor ('*' factor)*
        factor := 'x' INT ('^' INT)?

    Coefficients are element indices (``< q``); ``-`` negates in the field.
    A leading ``-`` is accepted as well.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind, value=None):
        nonlocal i
        tk = toks[i]
        if tk[0] != kind or (value is not None and tk[1] != value):
            want = value or kind
            got = tk[1] or "end of input"
            raise ParseError(tk[2], f"expected {want}, found {got!r}")
        i += 1
        return tk

    def factor(exps):
        _, _, pos = take("var")
        _, num, npos = take("int")
        v = int(num)
        if not 1 <= v <= n:
            raise VariableOutOfRange(npos, f"variable x{v} outside x1..x{n}")
        power = 1
        if peek()[:2] == ("op", "^"):
            take("op", "^")
            power = int(take("int")[1])
        exps[v - 1] += power

    def term():
        exps = [0] * n
        coeff = 1
        kind, val, pos = peek()
        if kind == "int":
            take("int")
            coeff = int(val)
            if coeff >= field.q:
                raise CoefficientOutOfRange(pos, f"coefficient {coeff} outside F_{field.q}")
        elif kind == "var":
            factor(exps)
        else:
            raise ParseError(pos, f"expected a term, found {val or 'end of input'!r}")
        while peek()[:2] == ("op", "*"):
            take("op", "*")
            factor(exps)
        return tuple(exps), coeff

    F = field
    out = {}

    def accumulate(e, c, negate):
        if negate:
            c = F.neg(c)
        s = F.add(out.get(e, 0), c)
        if s:
            out[e] = s
        else:
            out.pop(e, None)

    negate = False
    if peek()[:2] == ("op", "-"):
        take("op", "-")
        negate = True
    accumulate(*term(), negate)
    while peek()[0] == "op" and peek()[1] in "+-":
        negate = take("op")[1] == "-"
        accumulate(*term(), negate)
    if peek()[0] != "end":
        raise ParseError(peek()[2], f"unexpected {peek()[1]!r}")
    return Polynomial._raw(F, n, out)


def _format_monomial(e):
    parts = []
    for i, k in enumerate(e, start=1):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order=LEX) -> str:
    """Terms joined by `` + `` in strictly decreasing order."""
    if not f:
        return "0"
    pieces = []
    for e, c in f.sorted_terms(order):
        mono = _format_monomial(e)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        else:
            pieces.append(f"{c}*{mono}")
    return " + ".join(pieces)


# -- division --------------------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def divide(f: Polynomial, divisors: Sequence[Polynomial], order=LEX):
    """Multivariate division of ``f`` by an ordered list of divisors.

    Returns ``(quotients, remainder)`` with ``f == sum(h*d) + remainder``.
    Each step uses the first divisor whose leading term divides the current
    leading term; terms no leading term divides move to the remainder.
    """
    order = get_order(order)
    order.require_monomial_order()
    F, n = f.field, f.n
    for d in divisors:
        if d.field != F or d.n != n:
            raise ContextMismatch("divisor over a different ring")
        if not d:
            raise ZeroDivisor("division by the zero polynomial")
    key = order.key

    def negkey(e):
        return tuple(-x for x in key(e))

    leads = []
    tails = []
    for d in divisors:
        lt, lc = d.leading_term(order)
        leads.append((lt, F.inv(lc)))
        tails.append([(e, c) for e, c in d._terms.items() if e != lt])

    p = dict(f._terms)
    heap = [(negkey(e), e) for e in p]
    heapq.heapify(heap)
    quotients = [{} for _ in divisors]
    rem = {}
    add, mul, neg = F.add, F.mul, F.neg
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for idx, (lt, inv) in enumerate(leads):
            if all(x <= y for x, y in zip(lt, e)):
                shift = tuple(y - x for x, y in zip(lt, e))
                coef = mul(c, inv)
                qd = quotients[idx]
                s = add(qd.get(shift, 0), coef)
                if s:
                    qd[shift] = s
                else:
                    qd.pop(shift, None)
                ncoef = neg(coef)
                for te, tc in tails[idx]:
                    ne = tuple(a + b for a, b in zip(te, shift))
                    old = p.get(ne)
                    v = mul(ncoef, tc)
                    if old is None:
                        p[ne] = v
                        heapq.heappush(heap, (negkey(ne), ne))
                    else:
                        v = add(old, v)
                        if v:
                            p[ne] = v
                        else:
                            del p[ne]
                break
        else:
            rem[e] = c
    return (
        [Polynomial._raw(F, n, qd) for qd in quotients],
        Polynomial._raw(F, n, rem),
    )


def remainder(f, divisors, order=LEX) -> Polynomial:
    return divide(f, divisors, order)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order=LEX) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L`` the lcm of the leading monomials."""
    order = get_order(order)
    if f.field != g.field or f.n != g.n:
        raise ContextMismatch("polynomials over different rings")
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    F = f.field
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    left = f.mul_term(tuple(l - a for l, a in zip(lcm, ef)), F.inv(cf))
    right = g.mul_term(tuple(l - b for l, b in zip(lcm, eg)), F.inv(cg))
    return left - right


def buchberger_check(G: Sequence[Polynomial], order=LEX, criteria: bool = True) -> bool:
    """True iff every S-pair of ``G`` reduces to zero modulo ``G``.

    With ``criteria`` the coprime-leading-monomial and chain criteria skip
    pairs whose reduction to zero is already implied; the verdict is the
    same either way.
    """
    order = get_order(order)
    order.require_monomial_order()
    G = list(G)
    for g in G:
        if not g:
            raise ZeroPolynomial("zero polynomial in basis")
    leads = [g.leading_term(order)[0] for g in G]
    t = len(G)
    pending = set(combinations(range(t), 2))

    def lcm(i, j):
        return tuple(max(a, b) for a, b in zip(leads[i], leads[j]))

    def covered(i, j):
        L = lcm(i, j)
        for k in range(t):
            if k == i or k == j:
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            if _divides(leads[k], L):
                return True
        return False

    # smallest lcm first, which lets the chain criterion fire most often
    for i, j in sorted(pending, key=lambda ij: (order.key(lcm(*ij)), ij)):
        skip = False
        if criteria:
            coprime = all(min(a, b) == 0 for a, b in zip(leads[i], leads[j]))
            skip = coprime or covered(i, j)
        if not skip:
            if remainder(s_polynomial(G[i], G[j], order), G, order):
                return False
        pending.discard((i, j))
    return True


# -- coordinates on the fundamental monomial basis ----------------------------


def reduce_exponent(e: int, q: int) -> int:
    """Exponent with the same function on F_q: 0 stays 0, else into 1..q-1."""
    if e == 0:
        return 0
    return (e - 1) % (q - 1) + 1


def phi_coordinates(f: Polynomial, basis: MonomialBasis) -> np.ndarray:
    """Coordinates of the function of ``f`` on the ordered basis."""
    F = f.field
    if basis.q != F.q or basis.n != f.n:
        raise ContextMismatch(f"basis for q={basis.q}, n={basis.n} vs polynomial q={F.q}, n={f.n}")
    q = F.q
    out = np.zeros(len(basis), dtype=np.int64)
    pos = basis.position
    for e, c in f._terms.items():
        j = pos[tuple(reduce_exponent(x, q) for x in e)]
        out[j] = F.add(int(out[j]), c)
    return out


def phi_inverse(coords, basis: MonomialBasis, field: FiniteField) -> Polynomial:
    """The bounded-exponent polynomial with the given basis coordinates."""
    coords = np.asarray(coords, dtype=np.int64)
    if coords.shape != (len(basis),):
        raise LengthMismatch(f"{coords.shape[0]} coordinates for a basis of size {len(basis)}")
    if basis.q != field.q:
        raise ContextMismatch("basis and field disagree on q")
    terms = {basis.exponents[j]: int(coords[j]) for j in np.flatnonzero(coords)}
    return Polynomial(field, basis.n, terms)

"""Term orders on exponent vectors and the ordered bounded monomial basis."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionGuard, LengthMismatch, NotMonomialOrder

__all__ = ["MonomialOrder", "MonomialBasis", "LEX", "GRLEX", "GREVLEX", "get_order"]

DEFAULT_CAP = 4096


def _lex_key(e):
    return e


def _grlex_key(e):
    return (sum(e),) + tuple(e)


def _grevlex_key(e):
    # equal degree: the smaller last differing exponent wins
    return (sum(e),) + tuple(-x for x in reversed(e))


class MonomialOrder:
    """A strict total order on exponent vectors, exposed as a sort key.

    ``key(a) > key(b)`` iff ``a > b``.  The built-in orders are lex, grlex
    and grevlex with variable priority x1 > x2 > ... > xn.  A custom order
    is a ranking of the bounded box ``{0..q-1}^n`` only; it drives the
    orthogonal path but cannot be used for Groebner division.
    """

    def __init__(self, kind: str, key, ranking=None):
        self.kind = kind
        self.key = key
        self._ranking = ranking
        self.n = self.q = None

    @classmethod
    def custom(cls, decreasing: Iterable[Sequence[int]]) -> "MonomialOrder":
        """Order the box by an explicit list, largest exponent vector first."""
        vectors = [tuple(int(x) for x in v) for v in decreasing]
        if not vectors:
            raise ValueError("custom order needs at least one exponent vector")
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise LengthMismatch("exponent vectors of differing lengths")
        if len(set(vectors)) != len(vectors):
            raise ValueError("custom order lists an exponent vector twice")
        q = max(max(v) for v in vectors) + 1
        if q**n != len(vectors) or any(min(v) < 0 for v in vectors):
            raise ValueError("custom order must list every vector of {0..q-1}^n exactly once")
        total = len(vectors)
        ranking = {v: total - i for i, v in enumerate(vectors)}

        def key(e):
            try:
                return (ranking[tuple(e)],)
            except KeyError:
                raise ValueError(
                    f"exponent vector {tuple(e)} lies outside the custom order's box"
                ) from None

        order = cls("custom", key, ranking)
        order.n, order.q = n, q
        return order

    @property
    def is_monomial_order(self) -> bool:
        return self._ranking is None

    def require_monomial_order(self):
        if not self.is_monomial_order:
            raise NotMonomialOrder(
                "custom total orders are only defined on the bounded box and "
                "cannot drive Groebner division; use lex, grlex or grevlex"
            )

    def compare(self, a, b) -> int:
        """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
        if len(a) != len(b):
            raise LengthMismatch(f"exponent vectors of lengths {len(a)} and {len(b)}")
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return (ka > kb) - (ka < kb)

    def is_translation_invariant(self, q: int, n: int) -> bool:
        """Check a > b  =>  a + c > b + c wherever all sums stay in the box."""
        box = list(product(range(q), repeat=n))
        for a in box:
            for b in box:
                if self.compare(a, b) <= 0:
                    continue
                for c in box:
                    ac = tuple(x + y for x, y in zip(a, c))
                    bc = tuple(x + y for x, y in zip(b, c))
                    if max(ac) < q and max(bc) < q and self.compare(ac, bc) <= 0:
                        return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self._ranking == other._ranking
        )

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"

    def __str__(self):
        return self.kind


LEX = MonomialOrder("lex", _lex_key)
GRLEX = MonomialOrder("grlex", _grlex_key)
GREVLEX = MonomialOrder("grevlex", _grevlex_key)
BUILTIN_ORDERS = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


def get_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    try:
        return BUILTIN_ORDERS[str(order).lower()]
    except KeyError:
        raise ValueError(
            f"unknown order {order!r}; expected one of {sorted(BUILTIN_ORDERS)}"
        ) from None


class MonomialBasis:
    """The box ``{0..q-1}^n`` sorted decreasingly under a term order.

    Position ``j`` holds the exponent vector of the j-th fundamental
    monomial function; the last position is always ``(0, ..., 0)`` for the
    built-in orders.
    """

    def __init__(self, n: int, q: int, order, cap: int = DEFAULT_CAP):
        order = get_order(order)
        d = q**n
        if d > cap:
            raise DimensionGuard(d, cap)
        if order._ranking is not None and (order.n, order.q) != (n, q):
            raise LengthMismatch(
                f"custom order covers q={order.q}, n={order.n}; need q={q}, n={n}"
            )
        self.n = n
        self.q = q
        self.order = order
        self.exponents = tuple(
            sorted(product(range(q), repeat=n), key=order.key, reverse=True)
        )
        self.position = {e: j for j, e in enumerate(self.exponents)}

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, j):
        return self.exponents[j]

    def __repr__(self):
        return f"MonomialBasis(n={self.n}, q={self.q}, order={self.order.kind})"

"""Point sets, the evaluation map on fundamental monomials, and the
explicit Groebner basis of the vanishing ideal built from its kernel."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContextMismatch, DuplicatePoints, InvalidPoints, InvariantViolation
from .field import FiniteField
from .linalg import Matrix
from .orders import DEFAULT_CAP, MonomialBasis, MonomialOrder, get_order
from .poly import Polynomial, buchberger_check, phi_inverse

__all__ = [
    "PointSet",
    "VanishingBasis",
    "evaluation_matrix",
    "cleaned_kernel_basis",
    "field_equations",
    "vanishing_groebner_basis",
    "vanishes_on",
]


class PointSet:
    """An ordered tuple of ``m >= 1`` pairwise distinct points of F_q^n."""

    def __init__(self, points, field: FiniteField, n: int | None = None):
        arr = np.array(points, dtype=np.int64)
        if arr.ndim == 1 and n == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise InvalidPoints("expected a non-empty (m, n) array of points")
        if n is not None and arr.shape[1] != n:
            raise InvalidPoints(f"points have {arr.shape[1]} coordinates, expected {n}")
        if arr.shape[1] == 0:
            raise InvalidPoints("points need at least one coordinate")
        if arr.min() < 0 or arr.max() >= field.q:
            raise InvalidPoints(f"coordinates must be element indices of F_{field.q}")
        seen = {}
        for i, row in enumerate(map(tuple, arr.tolist())):
            if row in seen:
                raise DuplicatePoints(f"point {row} repeated (rows {seen[row]} and {i})")
            seen[row] = i
        arr.setflags(write=False)
        self.field = field
        self.points = arr

    @property
    def m(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.m

    def __iter__(self):
        return iter(map(tuple, self.points.tolist()))

    def __repr__(self):
        return f"PointSet(m={self.m}, n={self.n}, q={self.field.q})"


def as_points(X, field, n=None) -> PointSet:
    if isinstance(X, PointSet):
        if X.field != field:
            raise ContextMismatch("point set over a different field")
        if n is not None and X.n != n:
            raise ContextMismatch(f"point set has {X.n} coordinates, expected {n}")
        return X
    return PointSet(X, field, n)


def evaluation_matrix(X: PointSet, basis: MonomialBasis) -> Matrix:
    """``A[i, j]`` = the j-th fundamental monomial evaluated at the i-th point.

    Always of full row rank ``m``; this is checked on construction.
    """
    F = X.field
    if basis.q != F.q or basis.n != X.n:
        raise ContextMismatch("basis does not match the point set")
    exps = np.array(basis.exponents, dtype=np.int64).reshape(len(basis), X.n)
    table = F.power_table
    A = np.ones((X.m, len(basis)), dtype=np.int64)
    for k in range(X.n):
        A = F.vmul(A, table[X.points[:, k][:, None], exps[:, k][None, :]])
    A = Matrix._wrap(F, A)
    r = A.rank()
    if r != X.m:
        raise InvariantViolation(f"evaluation matrix has rank {r}, expected {X.m}")
    return A


def cleaned_kernel_basis(A: Matrix) -> Matrix:
    """Kernel basis of ``A`` as rows in reduced row echelon form."""
    return A.nullspace()


def field_equations(n: int, field: FiniteField) -> list:
    """``x_i^q - x_i`` for ``i = 1..n``."""
    q = field.q
    out = []
    for i in range(n):
        hi = [0] * n
        hi[i] = q
        lo = [0] * n
        lo[i] = 1
        out.append(Polynomial(field, n, {tuple(hi): 1, tuple(lo): field.neg(1)}))
    return out


@dataclass(frozen=True)
class VanishingBasis:
    generators: tuple
    order: MonomialOrder
    s: int
    n: int

    @property
    def field_part(self):
        return self.generators[: self.n]

    @property
    def kernel_part(self):
        return self.generators[self.n :]

    def check(self) -> bool:
        return buchberger_check(self.generators, self.order)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def kernel_polynomials(X: PointSet, order, cap: int = DEFAULT_CAP):
    basis = MonomialBasis(X.n, X.field.q, order, cap)
    K = cleaned_kernel_basis(evaluation_matrix(X, basis))
    return [phi_inverse(row, basis, X.field) for row in K.data]


def vanishing_groebner_basis(X: PointSet, order, cap: int = DEFAULT_CAP) -> VanishingBasis:
    """Field equations followed by the polynomials of the cleaned kernel basis."""
    order = get_order(order)
    order.require_monomial_order()
    kernel = kernel_polynomials(X, order, cap)
    gens = tuple(field_equations(X.n, X.field)) + tuple(kernel)
    return VanishingBasis(generators=gens, order=order, s=len(kernel), n=X.n)


def vanishes_on(f: Polynomial, X: PointSet) -> bool:
    if f.field != X.field or f.n != X.n:
        raise ContextMismatch("polynomial and point set live in different rings")
    return all(f.evaluate(x) == 0 for x in X)

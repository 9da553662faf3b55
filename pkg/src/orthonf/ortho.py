"""Normal forms modulo a vanishing ideal as orthogonal solutions.

The kernel of the evaluation map is given a cleaned (rref) basis, extended
by the unit vectors of its non-pivot columns, and that frame is declared
orthonormal.  The solution of ``A z = b`` orthogonal to the kernel under
this form, read back as a polynomial, is the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    ContextMismatch,
    DimensionMismatch,
    FrameMismatch,
    InvariantViolation,
    LengthMismatch,
    NotRref,
)
from .linalg import Matrix
from .orders import DEFAULT_CAP, MonomialBasis, get_order
from .poly import Polynomial, divide, phi_inverse
from .vanishing import (
    PointSet,
    as_points,
    cleaned_kernel_basis,
    evaluation_matrix,
    vanishing_groebner_basis,
)

__all__ = [
    "OrthonormalFrame",
    "BilinearForm",
    "OrthogonalSystem",
    "standard_orthonormalization",
    "gram_matrix",
    "orthogonal_solution",
    "fourier_coefficients",
    "normal_form",
    "normal_form_via_division",
    "interpolate_orthogonal",
]


@dataclass(frozen=True)
class OrthonormalFrame:
    """Rows of ``B`` are the frame vectors: kernel rows first, then unit vectors."""

    B: Matrix
    s: int
    pivots: tuple

    @property
    def d(self) -> int:
        return self.B.rows

    @property
    def kernel(self) -> Matrix:
        return self.B[: self.s]

    @property
    def extension_columns(self) -> tuple:
        return tuple(j for j in range(self.d) if j not in set(self.pivots))

    @cached_property
    def _coord_inverse(self) -> Matrix:
        # frame coordinates c of a vector v satisfy v = B^T c
        return self.B.T.inv()

    def coordinates(self, v) -> np.ndarray:
        return self._coord_inverse @ np.asarray(v, dtype=np.int64)


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric form given by its matrix on the fundamental monomial basis."""

    S: Matrix

    def __call__(self, u, v) -> int:
        F = self.S.field
        return int(F.vdot(np.asarray(u, dtype=np.int64), self.S @ np.asarray(v, dtype=np.int64)))


def standard_orthonormalization(kernel_rref: Matrix) -> OrthonormalFrame:
    """Extend an rref kernel basis by unit vectors at every non-pivot column."""
    F = kernel_rref.field
    R, pivots = kernel_rref.rref()
    if R != kernel_rref or len(pivots) != kernel_rref.rows:
        raise NotRref("kernel basis must be in reduced row echelon form with no zero rows")
    s, d = kernel_rref.shape
    if s > d:
        raise DimensionMismatch(f"{s} kernel rows in dimension {d}")
    free = [j for j in range(d) if j not in set(pivots)]
    ext = np.zeros((len(free), d), dtype=np.int64)
    ext[np.arange(len(free)), free] = 1
    B = Matrix._wrap(F, np.vstack([kernel_rref.data.reshape(s, d), ext]))
    return OrthonormalFrame(B=B, s=s, pivots=tuple(pivots))


def gram_matrix(frame: OrthonormalFrame) -> BilinearForm:
    """``S = (B^T B)^-1``, so that ``B S B^T`` is the identity."""
    B = frame.B
    return BilinearForm((B.T @ B).inv())


def fourier_coefficients(v, frame: OrthonormalFrame, form: BilinearForm) -> np.ndarray:
    """``lambda_i = <v, u_i>``; then ``v == sum(lambda_i * u_i)``."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (frame.d,) or form.S.rows != frame.d:
        raise DimensionMismatch("vector, frame and form dimensions disagree")
    return frame.B @ (form.S @ v)


def _check_frame(A: Matrix, frame: OrthonormalFrame):
    if frame.d != A.cols:
        raise FrameMismatch(f"frame of dimension {frame.d} for {A.cols} unknowns")
    if frame.s:
        if np.any((A @ frame.kernel.T).data):
            raise FrameMismatch("frame kernel rows are not in the kernel of A")


def orthogonal_solution(A: Matrix, b, frame: OrthonormalFrame, strategy: str = "A", form=None):
    """The solution of ``A z = b`` orthogonal to the frame's kernel rows.

    Strategy ``"A"`` takes any particular solution, writes it in frame
    coordinates, and zeroes the kernel coordinates.  Strategy ``"B"``
    solves ``A z = b`` stacked with ``y_i^T S z = 0`` directly.
    """
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (A.rows,):
        raise DimensionMismatch(f"right-hand side of length {b.shape} for {A.rows} equations")
    _check_frame(A, frame)
    if strategy == "A":
        xi = A.solve(b)
        if frame.s == 0:
            return xi
        c = frame.coordinates(xi)
        c[: frame.s] = 0
        return frame.B.T @ c
    if strategy == "B":
        S = (form or gram_matrix(frame)).S
        stacked = A.vstack(frame.kernel @ S) if frame.s else A
        rhs = np.concatenate([b, np.zeros(frame.s, dtype=np.int64)])
        if stacked.rank() != A.cols:
            raise InvariantViolation("orthogonality system is not uniquely solvable")
        return stacked.solve(rhs)
    raise ValueError(f"unknown strategy {strategy!r}")


class OrthogonalSystem:
    """Everything derived from a point set and an order, built once.

    Attributes: ``basis`` (ordered fundamental monomials), ``A`` (evaluation
    matrix), ``kernel`` (cleaned kernel basis) and ``frame``.
    """

    def __init__(self, X: PointSet, order, cap: int = DEFAULT_CAP):
        self.X = X
        self.field = X.field
        self.order = get_order(order)
        self.basis = MonomialBasis(X.n, X.field.q, self.order, cap)
        self.A = evaluation_matrix(X, self.basis)
        self.kernel = cleaned_kernel_basis(self.A)
        if self.kernel.rows != len(self.basis) - X.m:
            raise InvariantViolation("kernel dimension differs from q^n - m")
        self.frame = standard_orthonormalization(self.kernel)

    @cached_property
    def form(self) -> BilinearForm:
        return gram_matrix(self.frame)

    def values(self, f: Polynomial) -> np.ndarray:
        if f.field != self.field or f.n != self.X.n:
            raise ContextMismatch("polynomial and point set live in different rings")
        return np.array([f.evaluate(x) for x in self.X], dtype=np.int64)

    def solve(self, b, strategy="A") -> np.ndarray:
        form = self.form if strategy == "B" else None
        return orthogonal_solution(self.A, b, self.frame, strategy, form)

    def interpolate(self, b, strategy="A") -> Polynomial:
        b = np.asarray(b, dtype=np.int64)
        if b.shape != (self.X.m,):
            raise LengthMismatch(f"{b.shape[0] if b.ndim else 1} values for {self.X.m} points")
        if b.size and (b.min() < 0 or b.max() >= self.field.q):
            raise ValueError(f"values must be element indices of F_{self.field.q}")
        return phi_inverse(self.solve(b, strategy), self.basis, self.field)

    def normal_form(self, f: Polynomial, strategy="A") -> Polynomial:
        return self.interpolate(self.values(f), strategy)


def normal_form(f: Polynomial, X, order, cap: int = DEFAULT_CAP, strategy="A") -> Polynomial:
    """Normal form of ``f`` modulo the vanishing ideal of ``X``, orthogonal route."""
    X = as_points(X, f.field, f.n)
    return OrthogonalSystem(X, order, cap).normal_form(f, strategy)


def normal_form_via_division(f: Polynomial, X, order, cap: int = DEFAULT_CAP) -> Polynomial:
    """Remainder of ``f`` on division by the explicit Groebner basis of I(X)."""
    X = as_points(X, f.field, f.n)
    G = vanishing_groebner_basis(X, order, cap)
    return divide(f, G.generators, G.order)[1]


def interpolate_orthogonal(X, b, order, field=None, cap: int = DEFAULT_CAP) -> Polynomial:
    """The interpolant of ``b`` on ``X`` orthogonal to the kernel of evaluation."""
    if not isinstance(X, PointSet):
        if field is None:
            raise ValueError("field is required when X is not a PointSet")
        X = PointSet(X, field)
    return OrthogonalSystem(X, order, cap).interpolate(b)

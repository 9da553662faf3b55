"""Dense exact linear algebra over a :class:`~orthonf.field.FiniteField`.

Matrices hold element indices in an int64 numpy array.  Elimination is
row-vectorized through the field's ``v*`` operations, so the same code
serves prime fields and table-driven extension fields.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, NoSolution, Singular
from .field import FiniteField

__all__ = ["Matrix"]


class Matrix:
    """Immutable ``rows x cols`` matrix over a finite field."""

    def __init__(self, field: FiniteField, data, shape=None):
        arr = np.array(data, dtype=np.int64)
        if shape is not None:
            arr = arr.reshape(shape)
        if arr.ndim == 1 and shape is None:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D matrix, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise FieldMismatch(f"matrix entries outside F_{field.q}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def _wrap(cls, field, arr):
        m = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        m.field = field
        m.data = arr
        return m

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, d):
        return cls._wrap(field, np.eye(d, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self.field, self.data.T)

    def tolist(self):
        return self.data.tolist()

    def __getitem__(self, idx):
        out = self.data[idx]
        if isinstance(out, np.ndarray):
            if out.ndim == 2:
                return Matrix._wrap(self.field, out)
            return out
        return int(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self):
        return f"Matrix(F_{self.field.q}, {self.data.tolist()})"

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return Matrix._wrap(self.field, self.field.vadd(self.data, other.data))

    def __sub__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return Matrix._wrap(self.field, self.field.vsub(self.data, other.data))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._same_field(other)
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            return Matrix._wrap(self.field, matmul(self.field, self.data, other.data))
        vec = np.asarray(other, dtype=np.int64)
        if vec.ndim != 1 or vec.shape[0] != self.cols:
            raise DimensionMismatch(f"{self.shape} @ vector of shape {vec.shape}")
        return matmul(self.field, self.data, vec[:, None])[:, 0]

    def vstack(self, other) -> "Matrix":
        self._same_field(other)
        return Matrix._wrap(self.field, np.vstack([self.data, other.data]))

    # -- elimination --------------------------------------------------------

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        R, pivots = _rref(self.field, self.data)
        return Matrix._wrap(self.field, R), pivots

    def is_rref(self) -> bool:
        R, _ = _rref(self.field, self.data)
        return bool(np.array_equal(R, self.data))

    def rank(self) -> int:
        return len(_rref(self.field, self.data)[1])

    def nullspace(self) -> "Matrix":
        """Kernel basis as rows, itself in reduced row echelon form.

        Every row ``y`` satisfies ``self @ y == 0``.  The free-variable basis
        read off the rref is passed through a second rref so the result is
        canonical regardless of how it was produced.
        """
        F = self.field
        R, pivots = _rref(F, self.data)
        cols = self.cols
        pivset = set(pivots)
        free = [j for j in range(cols) if j not in pivset]
        N = np.zeros((len(free), cols), dtype=np.int64)
        N[np.arange(len(free)), free] = 1
        if pivots and free:
            N[:, pivots] = F.vneg(R[: len(pivots)][:, free].T)
        N, _ = _rref(F, N)
        return Matrix._wrap(F, N)

    def solve(self, b):
        """One solution of ``self @ z == b``, free variables set to zero."""
        F = self.field
        b = np.asarray(b, dtype=np.int64)
        if b.shape != (self.rows,):
            raise DimensionMismatch(f"right-hand side of shape {b.shape} for {self.shape}")
        aug = np.hstack([self.data, b[:, None]])
        R, pivots = _rref(F, aug)
        if pivots and pivots[-1] == self.cols:
            raise NoSolution("inconsistent linear system")
        z = np.zeros(self.cols, dtype=np.int64)
        for i, pc in enumerate(pivots):
            z[pc] = R[i, -1]
        return z

    def inv(self) -> "Matrix":
        if self.rows != self.cols:
            raise Singular(f"non-square matrix {self.shape} has no inverse")
        d = self.rows
        aug = np.hstack([self.data, np.eye(d, dtype=np.int64)])
        R, pivots = _rref(self.field, aug)
        if [p for p in pivots if p < d] != list(range(d)):
            raise Singular("matrix is singular")
        return Matrix._wrap(self.field, R[:, d:])


def matmul(F: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.k == 1:
        if a.shape[1] * (F.p - 1) ** 2 < 2**62:
            return (a @ b) % F.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        # accumulate one rank-1 update at a time to stay inside int64
        for i in range(a.shape[1]):
            out = (out + np.outer(a[:, i], b[i, :]) % F.p) % F.p
        return out
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = F.vadd(out, F.vmul(a[:, i][:, None], b[i, :][None, :]))
    return out


def _rref(F: FiniteField, M: np.ndarray):
    """Gauss-Jordan elimination; pivot = first nonzero entry of each column."""
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    # p < 2**31 keeps factor * entry inside int64
    prime, p = F.k == 1, F.p
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = F.vmul(R[r], F.inv(lead))
        col = R[:, c].copy()
        col[r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            factors = col[targets][:, None]
            if prime:
                R[targets] = (R[targets] - factors * R[r]) % p
            else:
                R[targets] = F.vsub(R[targets], F.vmul(factors, R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots

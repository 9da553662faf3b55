"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

import numpy as np

from .errors import FieldError, LengthMismatch
from .field import FiniteField
from .poly import Polynomial, parse_polynomial
from .vanishing import PointSet


def check_field(field) -> FiniteField:
    """Accept a FiniteField, a prime int, or a spec string such as ``"2^2"``."""
    if isinstance(field, FiniteField):
        return field
    if isinstance(field, (int, np.integer)):
        return FiniteField(int(field))
    if isinstance(field, str):
        return FiniteField.from_spec(field)
    raise FieldError(f"cannot interpret {field!r} as a finite field")


def check_points(X, field: FiniteField, n: int | None = None) -> PointSet:
    if isinstance(X, PointSet):
        if X.field != field:
            raise FieldError("point set is over a different field")
        if n is not None and X.n != n:
            raise LengthMismatch(f"points have {X.n} coordinates, expected {n}")
        return X
    return PointSet(X, field, n)


def check_values(y, field: FiniteField, m: int) -> np.ndarray:
    y = np.asarray(y, dtype=np.int64).reshape(-1)
    if y.shape[0] != m:
        raise LengthMismatch(f"got {y.shape[0]} values for {m} points")
    if y.size and (y.min() < 0 or y.max() >= field.q):
        raise FieldError(f"values must be element indices of F_{field.q}")
    return y


def check_polynomial(f, field: FiniteField, n: int) -> Polynomial:
    if isinstance(f, str):
        return parse_polynomial(f, n, field)
    if isinstance(f, Polynomial):
        if f.field != field or f.n != n:
            raise LengthMismatch("polynomial lives in a different ring")
        return f
    raise TypeError(f"expected a Polynomial or a string, got {type(f).__name__}")

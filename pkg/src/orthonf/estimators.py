"""scikit-learn style wrappers.

``VanishingIdealNormalizer`` is fitted on a point set and transforms
polynomials into their normal forms modulo the vanishing ideal.
``OrthogonalInterpolator`` is fitted on points and values and predicts by
evaluating the orthogonal interpolant.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .orders import DEFAULT_CAP
from .ortho import OrthogonalSystem
from .poly import divide
from .validation import check_field, check_points, check_polynomial, check_values
from .vanishing import vanishing_groebner_basis


class VanishingIdealNormalizer(TransformerMixin, BaseEstimator):
    """Normal forms modulo I(X) via orthogonal solutions.

    Parameters
    ----------
    field : FiniteField, int or str, default="2"
        The coefficient field, e.g. ``3`` or ``"2^2"``.
    order : {"lex", "grlex", "grevlex"} or MonomialOrder, default="lex"
    cap : int, default=4096
        Largest allowed basis dimension ``q**n``.
    strategy : {"A", "B"}, default="A"
        ``"A"`` zeroes kernel coordinates of a particular solution;
        ``"B"`` solves the stacked orthogonality system.

    Attributes
    ----------
    field_ : FiniteField
    points_ : PointSet
    system_ : OrthogonalSystem
    n_features_in_ : int
    """

    def __init__(self, field="2", order="lex", cap=DEFAULT_CAP, strategy="A"):
        self.field = field
        self.order = order
        self.cap = cap
        self.strategy = strategy

    def fit(self, X, y=None):
        self.field_ = check_field(self.field)
        self.points_ = check_points(X, self.field_)
        self.n_features_in_ = self.points_.n
        self.system_ = OrthogonalSystem(self.points_, self.order, self.cap)
        return self

    def transform(self, polys):
        """Map each polynomial (or polynomial string) to its normal form."""
        check_is_fitted(self, "system_")
        if isinstance(polys, str):
            polys = [polys]
        out = []
        for f in polys:
            f = check_polynomial(f, self.field_, self.n_features_in_)
            out.append(self.system_.normal_form(f, self.strategy))
        return out

    def fit_transform(self, X, y=None, polys=()):
        # X holds points, not polynomials, so the mixin default does not apply
        return self.fit(X).transform(polys)

    def groebner_basis(self):
        """The explicit Groebner basis of I(X) for the fitted order."""
        check_is_fitted(self, "system_")
        return vanishing_groebner_basis(self.points_, self.system_.order, self.cap)

    def transform_via_division(self, polys):
        """Same as :meth:`transform` but by division; an independent check."""
        G = self.groebner_basis()
        if isinstance(polys, str):
            polys = [polys]
        return [
            divide(check_polynomial(f, self.field_, self.n_features_in_), G.generators, G.order)[1]
            for f in polys
        ]


class OrthogonalInterpolator(BaseEstimator):
    """Interpolant of data on distinct points, orthogonal to the evaluation kernel.

    Attributes
    ----------
    polynomial_ : Polynomial
        The fitted interpolant, with all exponents below ``q``.
    """

    def __init__(self, field="2", order="lex", cap=DEFAULT_CAP):
        self.field = field
        self.order = order
        self.cap = cap

    def fit(self, X, y):
        self.field_ = check_field(self.field)
        self.points_ = check_points(X, self.field_)
        self.n_features_in_ = self.points_.n
        values = check_values(y, self.field_, self.points_.m)
        system = OrthogonalSystem(self.points_, self.order, self.cap)
        self.polynomial_ = system.interpolate(values)
        return self

    def predict(self, X):
        check_is_fitted(self, "polynomial_")
        arr = np.asarray(X, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != self.n_features_in_:
            raise ValueError(f"expected points of shape (k, {self.n_features_in_})")
        return np.array([self.polynomial_.evaluate(row) for row in arr.tolist()], dtype=np.int64)

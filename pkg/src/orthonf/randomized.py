"""Seeded random instances for oracle-equivalence runs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .field import FiniteField, field_of_order
from .ortho import OrthogonalSystem
from .poly import Polynomial, divide
from .vanishing import PointSet, field_equations, vanishing_groebner_basis, vanishes_on

__all__ = ["Instance", "random_instance", "random_polynomial", "random_ideal_element", "check_instance"]

DEFAULT_SHAPES = tuple(
    (q, n) for q in (2, 3, 5) for n in (1, 2, 3) if q**n <= 125
)
ORDERS = ("lex", "grlex", "grevlex")


@dataclass
class Instance:
    field: FiniteField
    points: PointSet
    f: Polynomial

    @property
    def n(self):
        return self.points.n


def random_polynomial(rng: random.Random, field, n, max_terms=8, max_exp=None) -> Polynomial:
    max_exp = 2 * field.q if max_exp is None else max_exp
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        terms[e] = rng.randrange(1, field.q)
    return Polynomial(field, n, terms)


def random_points(rng: random.Random, field, n, m) -> PointSet:
    box = list(product(range(field.q), repeat=n))
    return PointSet(rng.sample(box, m), field, n)


def random_instance(rng: random.Random, shapes=DEFAULT_SHAPES, fields=None) -> Instance:
    q, n = rng.choice(shapes)
    field = (fields or {}).get(q) or field_of_order(q)
    m = rng.randint(1, q**n - 1)
    X = random_points(rng, field, n, m)
    return Instance(field, X, random_polynomial(rng, field, n))


def random_ideal_element(rng: random.Random, X: PointSet, kernel_polys) -> Polynomial:
    """A random member of I(X): a kernel combination plus ideal multiples.

    Made of a random linear combination of the kernel polynomials, plus
    random polynomial multiples of the field equations and of one kernel
    polynomial.
    """
    F, n = X.field, X.n
    g = Polynomial.zero(F, n)
    for k in kernel_polys:
        g = g + k * rng.randrange(F.q)
    for eq in field_equations(n, F):
        g = g + eq * random_polynomial(rng, F, n, max_terms=3, max_exp=F.q)
    if kernel_polys:
        g = g + rng.choice(kernel_polys) * random_polynomial(rng, F, n, max_terms=2, max_exp=2)
    return g


def check_instance(inst: Instance, order, corrupt: bool = False) -> bool:
    """Orthogonal normal form equals the division remainder; also checks
    membership, idempotence and that ideal elements reduce to zero."""
    X, f = inst.points, inst.f
    system = OrthogonalSystem(X, order)
    nf = system.normal_form(f)
    if corrupt:
        nf = nf + 1
    G = vanishing_groebner_basis(X, order)
    oracle = divide(f, G.generators, G.order)[1]
    if nf != oracle:
        return False
    if not vanishes_on(f - nf, X):
        return False
    if system.normal_form(nf) != nf:
        return False
    return system.normal_form(f - nf).is_zero()

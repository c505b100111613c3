"""State functionals on the exponentiated-pair algebra.

Three built-in kinds:

* ``position(lam)``  - value ``exp(i a lam)`` on W(a, 0), exactly 0 on any
  generator with a nonzero translation part.  The vanishing is an exact
  rational support test, not a numeric limit; it is the algebraic shadow of
  the broken continuity in the sharp-position representation.
* ``momentum(mu)``   - the mirror: ``exp(i b mu)`` on W(0, b), 0 when a != 0.
* ``vacuum``         - the Gaussian vector state
  ``exp(-i a b / 2) * exp(-(a^2 + b^2) / 4)``, continuous in both directions.
  The formula is cross-checked against the grid quadrature oracle.

Positivity is tested, not assumed: finite Gram matrices of the functional
are handed to a dense Hermitian eigensolver and the minimum eigenvalue is
reported.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .algebra import RationalLike, WeylElement, as_fraction
from .reps import MOMENTUM, POSITION

VACUUM = "vacuum"
KINDS = (POSITION, MOMENTUM, VACUUM)


class EigensolverError(RuntimeError):
    """Eigenvalue iteration failed; distinct from a negative verdict."""


@dataclass(frozen=True)
class StateFunctional:
    """Positive normalised linear functional on the generator algebra."""

    kind: str
    parameter: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown state kind: {self.kind!r}")
        if self.kind == VACUUM and self.parameter is not None:
            raise ValueError("the vacuum state takes no parameter")
        if self.kind != VACUUM and self.parameter is None:
            raise ValueError(f"{self.kind} state needs a rational parameter")

    def generator_value(self, a: Fraction, b: Fraction) -> complex:
        """Value on the single generator W(a, b)."""
        if self.kind == POSITION:
            if b == 0:
                return cmath.exp(1j * float(a * self.parameter))
            return 0j
        if self.kind == MOMENTUM:
            if a == 0:
                return cmath.exp(1j * float(b * self.parameter))
            return 0j
        # vacuum: normal-ordering phase times the Gaussian envelope
        return cmath.exp(complex(-float(a * a + b * b) / 4.0, -float(a * b) / 2.0))

    def __call__(self, element: WeylElement) -> complex:
        """Linear extension of the generator rule."""
        total = 0j
        for index, coeff in element.terms.items():
            total += coeff * self.generator_value(index.a, index.b)
        return total

    def __repr__(self) -> str:
        if self.kind == VACUUM:
            return "StateFunctional(vacuum)"
        return f"StateFunctional({self.kind}, {self.parameter})"


def position_state(lam: RationalLike) -> StateFunctional:
    return StateFunctional(POSITION, as_fraction(lam))


def momentum_state(mu: RationalLike) -> StateFunctional:
    return StateFunctional(MOMENTUM, as_fraction(mu))


def vacuum_state() -> StateFunctional:
    return StateFunctional(VACUUM)


def gram_matrix(
    state: StateFunctional, basis: Sequence[WeylElement]
) -> np.ndarray:
    """Matrix of state(x_i* x_j); Hermitian up to coefficient roundoff."""
    basis = list(basis)
    if not basis:
        raise ValueError("basis must be non-empty")
    adjoints = [x.adjoint() for x in basis]
    n = len(basis)
    g = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            g[i, j] = state(adjoints[i] * basis[j])
    return g


def check_positivity(state: StateFunctional, basis: Sequence[WeylElement]) -> float:
    """Minimum eigenvalue of the Gram matrix; >= -1e-10 for a valid state.

    Raises :class:`EigensolverError` if the eigensolver fails, so a broken
    iteration is never reported as a negative eigenvalue.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("basis must be non-empty")
    if len(basis) > 64:
        raise ValueError("basis too large (limit 64)")
    g = gram_matrix(state, basis)
    hermitian = (g + g.conj().T) / 2.0
    try:
        eigenvalues = np.linalg.eigvalsh(hermitian)
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(f"Hermitian eigensolver failed: {exc}") from exc
    return float(eigenvalues[0])

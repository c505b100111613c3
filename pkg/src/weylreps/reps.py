"""Sharp-point representations on finitely supported vectors.

Vectors are finite complex combinations of basis points ``phi_x`` indexed by
exact rationals.  The ``position`` flavor acts by

    U_a phi_x = exp(i a x) phi_x        (pointwise phase)
    V_b phi_x = phi_{x-b}               (translation)

so every basis vector is a sharp eigenvector of the phase family, while the
translation family moves basis vectors onto orthogonal ones: the diagonal
matrix element ``<phi_x, V_b phi_x>`` is the exact indicator of ``b = 0``,
discontinuous at 0 no matter how small ``b`` gets.  The ``momentum`` flavor
swaps the two roles (``U_a`` translates ``x -> x+a``, ``V_b`` multiplies by
``exp(i b x)``); the exchange relation holds exactly in both flavors.

Only the phase direction has a self-adjoint generator.  Asking for the other
one raises :class:`NonexistentObservableError` - the representation-level
form of position/momentum complementarity.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple, Union

from .algebra import PRUNE_TOL, RationalLike, WeylElement, as_fraction, phase

POSITION = "position"
MOMENTUM = "momentum"
FLAVORS = (POSITION, MOMENTUM)


class FlavorMismatchError(ValueError):
    """Vectors of different flavors have no common inner product."""


class NonexistentObservableError(ValueError):
    """Asked a flavor for the generator that does not exist in it."""


class FiniteSupportVector:
    """Finitely supported map from exact rational points to amplitudes."""

    __slots__ = ("_amplitudes", "flavor")

    def __init__(
        self,
        amplitudes: Union[Mapping, Iterable[Tuple], None] = None,
        flavor: str = POSITION,
    ):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor: {flavor!r}")
        clean: dict[Fraction, complex] = {}
        if amplitudes is not None:
            items = (
                amplitudes.items() if isinstance(amplitudes, Mapping) else amplitudes
            )
            for key, amp in items:
                c = complex(amp)
                if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                    raise ValueError(f"non-finite amplitude at {key}: {amp!r}")
                point = as_fraction(key)
                merged = clean.get(point, 0j) + c
                if abs(merged) <= PRUNE_TOL:
                    clean.pop(point, None)
                else:
                    clean[point] = merged
        self._amplitudes = clean
        self.flavor = flavor

    @property
    def amplitudes(self) -> Mapping[Fraction, complex]:
        return MappingProxyType(self._amplitudes)

    def __bool__(self) -> bool:
        return bool(self._amplitudes)

    def __len__(self) -> int:
        return len(self._amplitudes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSupportVector):
            return NotImplemented
        return self.flavor == other.flavor and self._amplitudes == other._amplitudes

    __hash__ = None

    def _check_flavor(self, other: "FiniteSupportVector") -> None:
        if self.flavor != other.flavor:
            raise FlavorMismatchError(
                f"cannot combine {self.flavor} with {other.flavor}"
            )

    def __add__(self, other: "FiniteSupportVector") -> "FiniteSupportVector":
        if not isinstance(other, FiniteSupportVector):
            return NotImplemented
        self._check_flavor(other)
        out = dict(self._amplitudes)
        for point, c in other._amplitudes.items():
            out[point] = out.get(point, 0j) + c
        return FiniteSupportVector(out, self.flavor)

    def __sub__(self, other: "FiniteSupportVector") -> "FiniteSupportVector":
        if not isinstance(other, FiniteSupportVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "FiniteSupportVector":
        return FiniteSupportVector(
            {p: -c for p, c in self._amplitudes.items()}, self.flavor
        )

    def __mul__(self, other) -> "FiniteSupportVector":
        if isinstance(other, (int, float, complex)):
            return FiniteSupportVector(
                {p: c * other for p, c in self._amplitudes.items()}, self.flavor
            )
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> float:
        return math.sqrt(math.fsum(abs(c) ** 2 for c in self._amplitudes.values()))

    def max_amplitude(self) -> float:
        return max((abs(c) for c in self._amplitudes.values()), default=0.0)

    def __repr__(self) -> str:
        pts = ", ".join(
            f"{p}: {c:.6g}" for p, c in sorted(self._amplitudes.items())[:6]
        )
        return f"FiniteSupportVector({{{pts}}}, flavor={self.flavor!r})"


def basis_vector(point: RationalLike, flavor: str = POSITION) -> FiniteSupportVector:
    """The characteristic function of a single point."""
    return FiniteSupportVector({as_fraction(point): 1.0 + 0j}, flavor)


def inner(u: FiniteSupportVector, v: FiniteSupportVector) -> complex:
    """Sum over the exact key intersection, conjugate-linear in ``u``."""
    u._check_flavor(v)
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    total = 0j
    for point in small._amplitudes:
        if point in large._amplitudes:
            total += u._amplitudes[point].conjugate() * v._amplitudes[point]
    return total


def apply_U(a: RationalLike, v: FiniteSupportVector) -> FiniteSupportVector:
    """Phase multiplication in the position flavor, translation in momentum."""
    a = as_fraction(a)
    if v.flavor == POSITION:
        return FiniteSupportVector(
            {p: c * phase(a * p) for p, c in v.amplitudes.items()}, POSITION
        )
    return FiniteSupportVector({p + a: c for p, c in v.amplitudes.items()}, MOMENTUM)


def apply_V(b: RationalLike, v: FiniteSupportVector) -> FiniteSupportVector:
    """Translation in the position flavor, phase multiplication in momentum."""
    b = as_fraction(b)
    if v.flavor == POSITION:
        return FiniteSupportVector({p - b: c for p, c in v.amplitudes.items()}, POSITION)
    return FiniteSupportVector(
        {p: c * phase(b * p) for p, c in v.amplitudes.items()}, MOMENTUM
    )


def apply_Q(v: FiniteSupportVector) -> FiniteSupportVector:
    """Position operator: multiply each amplitude by its point.

    Exists only in the position flavor.  In the momentum flavor the phase
    family ``U_a`` is discontinuous, so it has no self-adjoint generator.
    """
    if v.flavor != POSITION:
        raise NonexistentObservableError(
            "nonexistent observable: no position operator in the momentum flavor"
        )
    return FiniteSupportVector(
        {p: c * float(p) for p, c in v.amplitudes.items()}, POSITION
    )


def apply_P(v: FiniteSupportVector) -> FiniteSupportVector:
    """Momentum operator, the mirror of :func:`apply_Q`.

    Exists only in the momentum flavor; in the position flavor ``V_b`` is
    discontinuous and has no generator.
    """
    if v.flavor != MOMENTUM:
        raise NonexistentObservableError(
            "nonexistent observable: no momentum operator in the position flavor"
        )
    return FiniteSupportVector(
        {p: c * float(p) for p, c in v.amplitudes.items()}, MOMENTUM
    )


def finite_difference_generator(
    step: RationalLike, v: FiniteSupportVector
) -> FiniteSupportVector:
    """-i * step^-1 * (G_step - I) v for the continuous direction.

    Approximates :func:`apply_Q` (position flavor, via ``U``) or
    :func:`apply_P` (momentum flavor, via ``V``) with per-basis-vector error
    bounded by ``|step| * x**2 / 2`` at point ``x``.
    """
    step = as_fraction(step)
    if step == 0:
        raise ValueError("step must be nonzero")
    moved = apply_U(step, v) if v.flavor == POSITION else apply_V(step, v)
    return (-1j / float(step)) * (moved - v)


def apply_element(x: WeylElement, v: FiniteSupportVector) -> FiniteSupportVector:
    """Act by a normal-ordered element: each W(a, b) applies V_b then U_a."""
    total: dict[Fraction, complex] = {}
    for (a, b), c in x.terms.items():
        moved = apply_U(a, apply_V(b, v))
        for point, amp in moved.amplitudes.items():
            total[point] = total.get(point, 0j) + c * amp
    return FiniteSupportVector(total, v.flavor)


def weyl_relation_check(
    a: RationalLike, b: RationalLike, point: RationalLike, flavor: str = POSITION
) -> float:
    """Max amplitude deviation of U_a V_b phi - exp(-iab) V_b U_a phi."""
    a = as_fraction(a)
    b = as_fraction(b)
    phi = basis_vector(point, flavor)
    lhs = apply_U(a, apply_V(b, phi))
    rhs = phase(-a * b) * apply_V(b, apply_U(a, phi))
    return (lhs - rhs).max_amplitude()


def v_direction_matrix_element(b: RationalLike, point: RationalLike) -> complex:
    """<phi_x, V_b phi_x> in the position flavor: the exact indicator of b=0."""
    phi = basis_vector(point, POSITION)
    return inner(phi, apply_V(b, phi))


def u_direction_matrix_element(a: RationalLike, point: RationalLike) -> complex:
    """<phi_x, U_a phi_x> in the momentum flavor: the exact indicator of a=0."""
    phi = basis_vector(point, MOMENTUM)
    return inner(phi, apply_U(a, phi))

"""Exact sparse algebra of an exponentiated canonical pair.

Generators are labelled by pairs of rationals.  ``W(a, b)`` stands for the
normal-ordered product ``U_a V_b`` of two one-parameter unitary families
obeying the exchange relation

    U_a V_b = exp(-i a b) V_b U_a

so a product of generators collapses to a single generator times a
unit-modulus phase:

    W(a, b) * W(a2, b2) = exp(i a2 b) W(a + a2, b + b2)

A general element is a finitely supported complex combination of generators.
Index arithmetic is exact (`fractions.Fraction`); only the coefficients live
in floating point.  Elements are immutable; every operation returns a new
element in normal form with near-zero coefficients pruned.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Tuple, Union

RationalLike = Union[Fraction, int, str]

# coefficients at or below this modulus are dropped during normalisation
PRUNE_TOL = 1e-15


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, a Fraction, or an exact string such as ``"3/2"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def phase(theta: Union[Fraction, int, float]) -> complex:
    """exp(i*theta), the unit-modulus phase attached to exact angles."""
    return cmath.exp(1j * float(theta))


class WeylIndex(NamedTuple):
    """Label (a, b) of the normal-ordered generator W(a, b) = U_a V_b."""

    a: Fraction
    b: Fraction


def _as_index(key) -> WeylIndex:
    if isinstance(key, WeylIndex):
        return key
    a, b = key
    return WeylIndex(as_fraction(a), as_fraction(b))


class WeylElement:
    """Finite linear combination of generators, kept in normal form.

    Supports ``+``, ``-``, ``*`` (both the algebra product and scalar
    multiples), ``adjoint`` and the l1 norm bound.  Equality compares the
    stored terms exactly; use :meth:`max_coeff` of a difference for
    tolerance-based comparison.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple], None] = None):
        clean: dict[WeylIndex, complex] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                c = complex(coeff)
                if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                    raise ValueError(f"non-finite coefficient at {key}: {coeff!r}")
                index = _as_index(key)
                merged = clean.get(index, 0j) + c
                if abs(merged) <= PRUNE_TOL:
                    clean.pop(index, None)
                else:
                    clean[index] = merged
        self._terms = clean

    @property
    def terms(self) -> Mapping[WeylIndex, complex]:
        """Read-only view of the normal-form terms."""
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        out = dict(self._terms)
        for index, c in other._terms.items():
            out[index] = out.get(index, 0j) + c
        return WeylElement(out)

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "WeylElement":
        return WeylElement({i: -c for i, c in self._terms.items()})

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            out: dict[WeylIndex, complex] = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    index = WeylIndex(a1 + a2, b1 + b2)
                    out[index] = out.get(index, 0j) + c1 * c2 * phase(a2 * b1)
            return WeylElement(out)
        if isinstance(other, (int, float, complex)):
            return WeylElement({i: c * other for i, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "WeylElement":
        if isinstance(other, (int, float, complex)):
            return WeylElement({i: other * c for i, c in self._terms.items()})
        return NotImplemented

    def adjoint(self) -> "WeylElement":
        """Conjugate-linear star operation: W(a,b)* = exp(iab) W(-a,-b)."""
        return WeylElement(
            {
                WeylIndex(-a, -b): c.conjugate() * phase(a * b)
                for (a, b), c in self._terms.items()
            }
        )

    def l1_bound(self) -> float:
        """Sum of coefficient moduli; an upper bound for the operator norm.

        The true norm is not computed anywhere in this package; every norm
        statement goes through this bound.
        """
        return math.fsum(abs(c) for c in self._terms.values())

    def max_coeff(self) -> float:
        """Largest coefficient modulus (0 for the zero element)."""
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def __repr__(self) -> str:
        if not self._terms:
            return "WeylElement(0)"
        parts = []
        for (a, b), c in sorted(self._terms.items())[:6]:
            parts.append(f"({c:.6g})*W({a},{b})")
        if len(self._terms) > 6:
            parts.append(f"... {len(self._terms) - 6} more")
        return "WeylElement(" + " + ".join(parts) + ")"


def generator(a: RationalLike, b: RationalLike) -> WeylElement:
    """Single generator W(a, b) with coefficient one."""
    return WeylElement({WeylIndex(as_fraction(a), as_fraction(b)): 1.0 + 0j})


def identity() -> WeylElement:
    """The unit W(0, 0)."""
    return generator(0, 0)


def zero() -> WeylElement:
    return WeylElement()

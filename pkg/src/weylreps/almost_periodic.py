"""Trigonometric polynomials with exact rational frequencies.

A polynomial is a finite map frequency -> complex coefficient standing for
``f(x) = sum_j c_j exp(i a_j x)``.  Multiplication convolves frequency
supports, conjugation negates them, and the translation-invariant mean is
literally the coefficient at frequency 0 - which makes translation
invariance and positivity of the mean exact statements rather than limits.

The same frequency-0 functional returns as ``haar_fourier``: the Fourier
coefficients of the normalised invariant measure on the character
compactification of the line.  :func:`momentum_fourier_witness` checks that
the translation family's diagonal matrix elements in a sharp-position basis
vector reproduce exactly those coefficients; all spectral weight of the
momentum data then sits at infinity, which is the computable face of "no
real momentum value coexists with a point position".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .algebra import PRUNE_TOL, RationalLike, as_fraction, phase
from .reps import v_direction_matrix_element

#: sample points used for the certified lower sup-norm bound
_SUP_SAMPLES = tuple(Fraction(k, 16) for k in range(1024))


class TrigPolynomial:
    """Finite complex combination of characters exp(i a x), a rational."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Union[Mapping, Iterable[Tuple], None] = None):
        clean: dict[Fraction, complex] = {}
        if coefficients is not None:
            items = (
                coefficients.items()
                if isinstance(coefficients, Mapping)
                else coefficients
            )
            for key, coeff in items:
                c = complex(coeff)
                if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                    raise ValueError(f"non-finite coefficient at {key}: {coeff!r}")
                freq = as_fraction(key)
                merged = clean.get(freq, 0j) + c
                if abs(merged) <= PRUNE_TOL:
                    clean.pop(freq, None)
                else:
                    clean[freq] = merged
        self._coeffs = clean

    @property
    def coefficients(self) -> Mapping[Fraction, complex]:
        return MappingProxyType(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other) -> "TrigPolynomial":
        if isinstance(other, TrigPolynomial):
            out = dict(self._coeffs)
            for freq, c in other._coeffs.items():
                out[freq] = out.get(freq, 0j) + c
            return TrigPolynomial(out)
        if isinstance(other, (int, float, complex)):
            return self + constant(other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "TrigPolynomial":
        return self + (-1) * other if isinstance(other, TrigPolynomial) else self + (-other)

    def __neg__(self) -> "TrigPolynomial":
        return TrigPolynomial({f: -c for f, c in self._coeffs.items()})

    def __mul__(self, other) -> "TrigPolynomial":
        if isinstance(other, TrigPolynomial):
            out: dict[Fraction, complex] = {}
            for f1, c1 in self._coeffs.items():
                for f2, c2 in other._coeffs.items():
                    freq = f1 + f2
                    out[freq] = out.get(freq, 0j) + c1 * c2
            return TrigPolynomial(out)
        if isinstance(other, (int, float, complex)):
            return TrigPolynomial({f: c * other for f, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "TrigPolynomial":
        """Star operation: frequencies flip sign, coefficients conjugate."""
        return TrigPolynomial({-f: c.conjugate() for f, c in self._coeffs.items()})

    def translate(self, t: RationalLike) -> "TrigPolynomial":
        """f(. + t): each coefficient picks up the phase exp(i a t)."""
        t = as_fraction(t)
        return TrigPolynomial(
            {f: c * phase(f * t) for f, c in self._coeffs.items()}
        )

    def evaluate_at(self, x: RationalLike) -> complex:
        """Pointwise value; a multiplicative functional on the algebra."""
        x = as_fraction(x)
        return sum((c * phase(f * x) for f, c in self._coeffs.items()), 0j)

    def invariant_mean(self) -> complex:
        """The frequency-0 coefficient: exact value of the symmetric-average limit."""
        return self._coeffs.get(Fraction(0), 0j)

    def l1_bound(self) -> float:
        return math.fsum(abs(c) for c in self._coeffs.values())

    def max_coeff(self) -> float:
        """Largest coefficient modulus (0 for the zero polynomial)."""
        return max((abs(c) for c in self._coeffs.values()), default=0.0)

    def sup_norm_bounds(self) -> Tuple[float, float]:
        """(lower, upper) certified bracket for the sup norm.

        Upper is the coefficient l1 sum; lower is the max modulus over a
        fixed 1024-point rational sample, so lower <= sup <= upper always.
        """
        upper = self.l1_bound()
        lower = max(abs(self.evaluate_at(x)) for x in _SUP_SAMPLES)
        return lower, upper

    def __repr__(self) -> str:
        if not self._coeffs:
            return "TrigPolynomial(0)"
        parts = [
            f"({c:.6g})*e(i*{f}*x)" for f, c in sorted(self._coeffs.items())[:6]
        ]
        if len(self._coeffs) > 6:
            parts.append(f"... {len(self._coeffs) - 6} more")
        return "TrigPolynomial(" + " + ".join(parts) + ")"


def trig_generator(a: RationalLike) -> TrigPolynomial:
    """The character u_a(x) = exp(i a x)."""
    return TrigPolynomial({as_fraction(a): 1.0 + 0j})


def constant(c) -> TrigPolynomial:
    return TrigPolynomial({Fraction(0): complex(c)})


def invariant_mean(f: TrigPolynomial) -> complex:
    """Module-level alias for :meth:`TrigPolynomial.invariant_mean`."""
    return f.invariant_mean()


def haar_fourier(a: RationalLike) -> complex:
    """Fourier coefficient of the invariant measure: 1 at frequency 0, else 0."""
    return (1.0 + 0j) if as_fraction(a) == 0 else 0j


@dataclass(frozen=True)
class FourierWitness:
    """Per-probe comparison of momentum spectral data with the mean's."""

    point: Fraction
    rows: Tuple[Tuple[Fraction, complex, complex], ...]  # (probe, measured, mean)

    @property
    def passed(self) -> bool:
        return all(measured == expected for _, measured, expected in self.rows)


def momentum_fourier_witness(
    lam: RationalLike, probes: Sequence[RationalLike]
) -> FourierWitness:
    """Fourier data of the translation family in a sharp-position vector.

    For each probe ``a`` the diagonal element ``<phi_lam, V_a phi_lam>`` is
    computed in the point model and compared, exactly, against
    :func:`haar_fourier`.  Agreement means the induced spectral measure has
    the Fourier coefficients of the invariant measure, whose entire weight
    lies off the real line.
    """
    probes = [as_fraction(a) for a in probes]
    if not probes:
        raise ValueError("probes must be non-empty")
    lam = as_fraction(lam)
    rows = tuple(
        (a, v_direction_matrix_element(a, lam), haar_fourier(a)) for a in probes
    )
    return FourierWitness(point=lam, rows=rows)

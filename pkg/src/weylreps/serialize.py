"""Record-based text formats shared by the command line surface.

Rationals travel as exact strings ("3/2", "-7", "1/1000000"); complex
coefficients as pairs of floats, which JSON renders as shortest round-trip
decimals.  Records are plain dicts/lists, so callers pick the transport
(json module, CSV writer) themselves.
"""

from __future__ import annotations

from fractions import Fraction
from typing import IO, Iterable, Mapping, Sequence, Tuple

from .algebra import WeylElement, WeylIndex, as_fraction
from .almost_periodic import TrigPolynomial
from .reps import FLAVORS, FiniteSupportVector
from .states import (
    MOMENTUM,
    POSITION,
    VACUUM,
    StateFunctional,
    momentum_state,
    position_state,
    vacuum_state,
)


class RecordError(ValueError):
    """Malformed record data (bad rational string, missing field...)."""


def _fraction_from(text) -> Fraction:
    try:
        return as_fraction(text if isinstance(text, str) else int(text))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise RecordError(f"not an exact rational: {text!r}") from exc


def element_to_records(element: WeylElement) -> list[dict]:
    return [
        {"a": str(a), "b": str(b), "re": c.real, "im": c.imag}
        for (a, b), c in sorted(element.terms.items())
    ]


def element_from_records(records: Iterable[Mapping]) -> WeylElement:
    terms = []
    for rec in records:
        try:
            index = WeylIndex(_fraction_from(rec["a"]), _fraction_from(rec["b"]))
            coeff = complex(float(rec["re"]), float(rec["im"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordError(f"bad element record: {rec!r}") from exc
        terms.append((index, coeff))
    return WeylElement(terms)


def state_to_record(state: StateFunctional) -> dict:
    if state.kind == POSITION:
        return {"kind": POSITION, "lambda": str(state.parameter)}
    if state.kind == MOMENTUM:
        return {"kind": MOMENTUM, "mu": str(state.parameter)}
    return {"kind": VACUUM}


def state_from_record(record: Mapping) -> StateFunctional:
    kind = record.get("kind")
    if kind == POSITION:
        return position_state(_fraction_from(record.get("lambda")))
    if kind == MOMENTUM:
        return momentum_state(_fraction_from(record.get("mu")))
    if kind == VACUUM:
        return vacuum_state()
    raise RecordError(f"unknown state kind: {kind!r}")


def parse_state_arg(text: str) -> StateFunctional:
    """Compact command line form: 'vacuum', 'position:3/2', 'momentum:-1'."""
    kind, _, param = text.partition(":")
    kind = kind.strip().lower()
    if kind == VACUUM:
        if param:
            raise RecordError("the vacuum state takes no parameter")
        return vacuum_state()
    if kind == POSITION:
        return position_state(_fraction_from(param))
    if kind == MOMENTUM:
        return momentum_state(_fraction_from(param))
    raise RecordError(f"unknown state kind: {kind!r}")


def vector_to_records(vector: FiniteSupportVector) -> list[dict]:
    return [
        {"point": str(p), "re": c.real, "im": c.imag, "flavor": vector.flavor}
        for p, c in sorted(vector.amplitudes.items())
    ]


def vector_from_records(records: Sequence[Mapping]) -> FiniteSupportVector:
    if not records:
        raise RecordError("empty vector record list (flavor undeterminable)")
    flavor = records[0].get("flavor")
    if flavor not in FLAVORS:
        raise RecordError(f"unknown flavor: {flavor!r}")
    amplitudes = []
    for rec in records:
        if rec.get("flavor") != flavor:
            raise RecordError("mixed flavors in one vector record list")
        try:
            amplitudes.append(
                (_fraction_from(rec["point"]), complex(float(rec["re"]), float(rec["im"])))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordError(f"bad vector record: {rec!r}") from exc
    return FiniteSupportVector(amplitudes, flavor)


def trig_to_records(poly: TrigPolynomial) -> list[dict]:
    return [
        {"freq": str(f), "re": c.real, "im": c.imag}
        for f, c in sorted(poly.coefficients.items())
    ]


def trig_from_records(records: Iterable[Mapping]) -> TrigPolynomial:
    coeffs = []
    for rec in records:
        try:
            coeffs.append(
                (_fraction_from(rec["freq"]), complex(float(rec["re"]), float(rec["im"])))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordError(f"bad polynomial record: {rec!r}") from exc
    return TrigPolynomial(coeffs)


def scan_to_csv(rows: Sequence[Tuple[Fraction, complex]], stream: IO[str]) -> None:
    """Write 'parameter,re,im' rows, parameter as an exact rational string."""
    stream.write("parameter,re,im\n")
    for parameter, value in rows:
        stream.write(f"{parameter},{value.real!r},{value.imag!r}\n")

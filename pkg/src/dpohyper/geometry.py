"""Exact planar points and the two orders used throughout: strict dominance
and the down-right relation.

Coordinates are :class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator and compare exactly.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DPOError, EqualPoints

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` (optional sign) or a bare integer ``"p"``.

    Decimal and exponent notation are rejected, as is a zero denominator.
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise DPOError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise DPOError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DPOError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DPOError(f"not a rational: {value!r}")


@dataclass(frozen=True)
class Point2:
    id: str
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    @property
    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)

    def to_json(self) -> dict:
        return {"id": self.id, "x": format_rational(self.x), "y": format_rational(self.y)}

    @classmethod
    def from_json(cls, doc: dict) -> "Point2":
        try:
            ident, x, y = doc["id"], doc["x"], doc["y"]
        except (KeyError, TypeError) as exc:
            raise DPOError(f"malformed point entry: {doc!r}") from exc
        if not isinstance(ident, str):
            raise DPOError(f"point id must be a string: {ident!r}")
        # Integers are accepted as a convenience; strings use the p/q form.
        return cls(ident, as_rational(x), as_rational(y))


def strictly_dominated(p: Point2, q: Point2) -> bool:
    """True iff ``p`` lies strictly below and strictly left of ``q``."""
    return p.x < q.x and p.y < q.y


def down_right(p: Point2, q: Point2) -> bool:
    """True iff ``q`` is weakly to the right of and weakly below ``p``, p != q."""
    if p.x == q.x and p.y == q.y:
        return False
    return p.x <= q.x and p.y >= q.y


class PairClass(enum.Enum):
    PREC_FORWARD = "PrecForward"
    PREC_BACKWARD = "PrecBackward"
    DOWN_RIGHT_FORWARD = "DownRightForward"
    DOWN_RIGHT_BACKWARD = "DownRightBackward"


def classify_pair(p: Point2, q: Point2) -> PairClass:
    """Place two distinct points in exactly one of the four relative positions."""
    if p.x == q.x and p.y == q.y:
        raise EqualPoints(f"{p.id} and {q.id} share coordinates")
    if strictly_dominated(p, q):
        return PairClass.PREC_FORWARD
    if strictly_dominated(q, p):
        return PairClass.PREC_BACKWARD
    if down_right(p, q):
        return PairClass.DOWN_RIGHT_FORWARD
    return PairClass.DOWN_RIGHT_BACKWARD

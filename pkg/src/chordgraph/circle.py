"""Exact rational arithmetic on the unit circle.

The circle is the quotient of [0, 1] with the two endpoints glued, and a
point is stored as a fully reduced fraction in [0, 1). The predicates in
this module (cyclic order, interleaving, dense insertion) are the
order-theoretic kernel of the whole package, so everything runs on
arbitrary-precision rationals and nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

__all__ = [
    "CirclePoint",
    "cyclic_between",
    "insert_between",
    "interleaves",
    "parse_rational",
    "reflected",
    "rotated",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``<int>`` or ``<int>/<posint>`` into a reduced fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational: {text!r}") from exc


@total_ordering
class CirclePoint:
    """A rational point of the circle, canonically stored in [0, 1).

    Input values are taken mod 1, so 0 and 1 denote the same point and it
    is always stored as 0.
    """

    __slots__ = ("value",)

    def __init__(self, value: Fraction | int | str) -> None:
        self.value = Fraction(value) % 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CirclePoint) and self.value == other.value

    def __lt__(self, other: "CirclePoint") -> bool:
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"CirclePoint({str(self.value)!r})"

    def __str__(self) -> str:
        return str(self.value)


def rotated(p: CirclePoint, r: Fraction | int) -> CirclePoint:
    """Rotate a point counterclockwise by the rational angle r (mod 1)."""
    return CirclePoint(p.value + r)


def reflected(p: CirclePoint, r: Fraction | int) -> CirclePoint:
    """Reflect a point, x -> r - x (mod 1)."""
    return CirclePoint(r - p.value)


def cyclic_between(a: CirclePoint, b: CirclePoint, c: CirclePoint) -> bool:
    """True iff a, b, c are pairwise distinct and b lies strictly inside
    the counterclockwise arc from a to c."""
    if a == b or b == c or a == c:
        return False
    return (b.value - a.value) % 1 < (c.value - a.value) % 1


def interleaves(
    p: tuple[CirclePoint, CirclePoint], q: tuple[CirclePoint, CirclePoint]
) -> bool:
    """True iff the chords spanned by the two pairs cross inside the disc.

    Equivalently, the four points are distinct and the pairs alternate
    around the circle. A shared endpoint is incidence, not interleaving,
    and yields False; a degenerate pair (equal points) is rejected.
    """
    a, b = p
    c, d = q
    if a == b or c == d:
        raise ValueError("point pair must consist of two distinct points")
    if c in (a, b) or d in (a, b):
        return False
    return cyclic_between(a, c, b) != cyclic_between(a, d, b)


def insert_between(a: CirclePoint, b: CirclePoint) -> CirclePoint:
    """The midpoint of the counterclockwise arc from a to b.

    Deterministic witness that the rational circle is dense in itself: the
    result lies strictly inside the arc, for every pair of distinct points.
    """
    if a == b:
        raise ValueError("empty arc: endpoints coincide")
    span = (b.value - a.value) % 1
    return CirclePoint(a.value + span / 2)

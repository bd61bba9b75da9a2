# coding=UTF-8
"""Linear orders X for interval algebras: finite explicit orders or the rationals, with -inf / +inf sentinels.

Points of a finite order are ids compared by position; rational points are Fractions. Comparisons go through
LinearOrder.key, which maps sentinels to themselves so that NEG_INF < every key < POS_INF.
"""
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from fnlab.helpers.errors import FormatError, PreconditionFailed, UnknownElement
from fnlab.order.poset import Poset, chain


@total_ordering
class Sentinel:
    """Point at infinity; compares below (sign -1) or above (sign +1) every other key."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        """Instantiate Sentinel."""
        self.sign = sign

    def __eq__(self, other) -> bool:
        """Sentinels of one sign are equal."""
        return isinstance(other, Sentinel) and other.sign == self.sign

    def __lt__(self, other) -> bool:
        """-inf is below everything but itself, +inf below nothing."""
        if isinstance(other, Sentinel):
            return self.sign < other.sign
        return self.sign < 0

    def __hash__(self) -> int:
        """Hash on the sign."""
        return hash(("inf", self.sign))

    def __repr__(self) -> str:
        """-inf or +inf."""
        return "-inf" if self.sign < 0 else "+inf"


NEG_INF = Sentinel(-1)
POS_INF = Sentinel(1)

Point = Union[Hashable, Sentinel]


class LinearOrder:
    """Total order X.

    :param kind: finite or rational
    :param points: Ordered ids of a finite order (None for the rationals)
    """

    def __init__(self, kind: str, points: Optional[Sequence[str]] = None):
        """Instantiate LinearOrder."""
        assert kind in ("finite", "rational"), "kind must be finite or rational"
        self.kind = kind
        self.points: Optional[Tuple[str, ...]] = None
        self._position: Dict[str, int] = {}
        if kind == "finite":
            assert points is not None, "A finite order needs its points"
            points = tuple(points)
            if len(set(points)) != len(points):
                raise FormatError("Linear order lists a point twice")
            self.points = points
            self._position = {p: ix for ix, p in enumerate(points)}

    @classmethod
    def finite(cls, points: Sequence[str]) -> "LinearOrder":
        """Finite order listing its points from least to greatest."""
        return cls("finite", points)

    @classmethod
    def rational(cls) -> "LinearOrder":
        """The rationals."""
        return cls("rational")

    @property
    def is_finite(self) -> bool:
        """Check for a finite explicit order."""
        return self.kind == "finite"

    def key(self, point: Point):
        """Comparable key of a point (sentinels map to themselves).

        :raises UnknownElement: If point is not in X
        """
        if isinstance(point, Sentinel):
            return point
        if self.is_finite:
            try:
                return self._position[point]
            except KeyError:
                raise UnknownElement(f"{point} is not a point of the order") from None
        if isinstance(point, (int, Fraction)):
            return Fraction(point)
        raise UnknownElement(f"{point!r} is not a rational")

    def point(self, point: Point) -> Point:
        """Normalize a point (rationals become Fractions) after checking membership."""
        self.key(point)
        if not self.is_finite and not isinstance(point, Sentinel):
            return Fraction(point)
        return point

    def contains(self, point: Point) -> bool:
        """Check that a non-sentinel point belongs to X."""
        try:
            self.key(point)
        except UnknownElement:
            return False
        return not isinstance(point, Sentinel)

    def sort(self, points: Iterable[Point]) -> List[Point]:
        """Sort points along the order."""
        return sorted(set(points), key=self.key)

    def parse_point(self, text: str) -> Point:
        """Parse a point: -inf, +inf, an id of a finite order or p/q for the rationals.

        :raises FormatError: On text that names no point
        """
        text = text.strip()
        if text == "-inf":
            return NEG_INF
        if text in ("+inf", "inf"):
            return POS_INF
        if self.is_finite:
            if text not in self._position:
                raise FormatError(f"{text!r} is not a point of the order")
            return text
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{text!r} is not a rational") from None

    def label(self, point: Point) -> str:
        """Printable point."""
        return repr(point) if isinstance(point, Sentinel) else str(point)

    def to_poset(self) -> Poset:
        """The finite order as a chain poset."""
        if not self.is_finite:
            raise PreconditionFailed("Only finite orders convert to posets")
        return chain(*self.points)

    def __len__(self) -> int:
        """Number of points of a finite order."""
        assert self.is_finite, "The rationals have no length"
        return len(self.points)

    def __eq__(self, other) -> bool:
        """Same kind and points."""
        return isinstance(other, LinearOrder) and (self.kind, self.points) == (other.kind, other.points)

    def __hash__(self) -> int:
        """Hash on kind and points."""
        return hash((self.kind, self.points))

    def __repr__(self) -> str:
        """Get helpful representation."""
        if self.is_finite:
            return f"LinearOrder.finite({list(self.points)})"
        return "LinearOrder.rational()"

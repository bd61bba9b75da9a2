# coding=UTF-8
"""Elements of the interval algebra Intalg(X): finite unions of half-open intervals [x, y).

An element is stored as its standard representation: the sorted boundary sequence x_0 < x_1 < ... < x_{2n-1} of
the disjoint, non-adjacent intervals [x_0, x_1), [x_2, x_3), ... Lower ends may be -inf and upper ends +inf.

The points of the algebra are X together with -inf; -inf lies in an element iff one of its intervals starts there.
Boolean operations evaluate both operands on the cells cut out by the union of their boundaries, so results are
normalized by construction.
"""
from bisect import bisect_right
from typing import Callable, FrozenSet, Iterable, List, Sequence, Tuple

from fnlab.helpers.errors import OrderMismatch
from fnlab.intervals.linear_order import NEG_INF, POS_INF, LinearOrder, Point, Sentinel


class IntervalElement:
    """Normalized finite union of half-open intervals over a linear order.

    :param order: The linear order X
    :param bounds: Standard representation (strictly increasing, even length)
    """

    __slots__ = ("order", "bounds", "_keys")

    def __init__(self, order: LinearOrder, bounds: Sequence[Point]):
        """Instantiate IntervalElement (the representation is validated)."""
        bounds = tuple(order.point(p) for p in bounds)
        keys = [order.key(p) for p in bounds]
        assert len(bounds) % 2 == 0, "Standard representation has an even number of boundaries"
        assert all(lo < hi for lo, hi in zip(keys, keys[1:])), "Boundaries must strictly increase"
        assert POS_INF not in bounds[0::2] and NEG_INF not in bounds[1::2], "Misplaced infinite boundary"
        self.order = order
        self.bounds = bounds
        self._keys = keys

    @classmethod
    def empty(cls, order: LinearOrder) -> "IntervalElement":
        """The zero element."""
        return cls(order, ())

    @classmethod
    def full(cls, order: LinearOrder) -> "IntervalElement":
        """The unit [-inf, +inf)."""
        return cls(order, (NEG_INF, POS_INF))

    @classmethod
    def interval(cls, order: LinearOrder, lo: Point, hi: Point) -> "IntervalElement":
        """Single interval [lo, hi) (empty unless lo < hi)."""
        if order.key(lo) < order.key(hi):
            return cls(order, (lo, hi))
        return cls.empty(order)

    @classmethod
    def initial_segment(cls, order: LinearOrder, x: Point) -> "IntervalElement":
        """[-inf, x)."""
        return cls.interval(order, NEG_INF, x)

    @classmethod
    def from_intervals(cls, order: LinearOrder, intervals: Iterable[Tuple[Point, Point]]) -> "IntervalElement":
        """Union of arbitrary (possibly overlapping or adjacent) intervals."""
        result = cls.empty(order)
        for lo, hi in intervals:
            result = result | cls.interval(order, lo, hi)
        return result

    # queries

    def intervals(self) -> List[Tuple[Point, Point]]:
        """The intervals of the standard representation."""
        return list(zip(self.bounds[0::2], self.bounds[1::2]))

    def contains(self, point: Point) -> bool:
        """Membership of a point of X or of -inf."""
        return bisect_right(self._keys, self.order.key(point)) % 2 == 1

    def endpoints(self) -> FrozenSet[Point]:
        """ep(b): the boundary points other than the sentinels."""
        return frozenset(p for p in self.bounds if not isinstance(p, Sentinel))

    def is_empty(self) -> bool:
        """Check for zero."""
        return not self.bounds

    def is_full(self) -> bool:
        """Check for the unit."""
        return self.bounds == (NEG_INF, POS_INF)

    # operations

    def _check(self, other: "IntervalElement") -> None:
        if not isinstance(other, IntervalElement):
            raise TypeError(f"Cannot combine IntervalElement with {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch("Elements live over different linear orders")

    def _combine(self, other: "IntervalElement", op: Callable[[bool, bool], bool]) -> "IntervalElement":
        cuts = self.order.sort([NEG_INF, *self.bounds, *other.bounds])
        bounds = []
        inside = False
        for p in cuts:
            if p == POS_INF:
                break
            value = op(self.contains(p), other.contains(p))
            if value != inside:
                bounds.append(p)
                inside = value
        if inside:
            bounds.append(POS_INF)
        return IntervalElement(self.order, bounds)

    def __or__(self, other: "IntervalElement") -> "IntervalElement":
        """Union."""
        self._check(other)
        return self._combine(other, lambda x, y: x or y)

    def __and__(self, other: "IntervalElement") -> "IntervalElement":
        """Intersection."""
        self._check(other)
        return self._combine(other, lambda x, y: x and y)

    def __sub__(self, other: "IntervalElement") -> "IntervalElement":
        """Difference."""
        self._check(other)
        return self._combine(other, lambda x, y: x and not y)

    def __xor__(self, other: "IntervalElement") -> "IntervalElement":
        """Symmetric difference."""
        self._check(other)
        return self._combine(other, lambda x, y: x != y)

    def __invert__(self) -> "IntervalElement":
        """Complement."""
        return self._combine(self, lambda x, _: not x)

    def __le__(self, other: "IntervalElement") -> bool:
        """Inclusion."""
        self._check(other)
        return (self - other).is_empty()

    def __lt__(self, other: "IntervalElement") -> bool:
        """Strict inclusion."""
        return self <= other and self != other

    def __ge__(self, other: "IntervalElement") -> bool:
        """Reverse inclusion."""
        return other <= self

    def __gt__(self, other: "IntervalElement") -> bool:
        """Reverse strict inclusion."""
        return other < self

    def __eq__(self, other) -> bool:
        """Equal orders and representations."""
        if not isinstance(other, IntervalElement):
            return NotImplemented
        return self.order == other.order and self.bounds == other.bounds

    def __hash__(self) -> int:
        """Hash on the representation."""
        return hash(self.bounds)

    def to_text(self) -> str:
        """Text form [a,b) [c,d) ..., or 0 for the empty element."""
        if self.is_empty():
            return "0"
        label = self.order.label
        return " ".join(f"[{label(lo)},{label(hi)})" for lo, hi in self.intervals())

    def __str__(self) -> str:
        """Text form."""
        return self.to_text()

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"IntervalElement({self.to_text()!r})"


def union(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    """a | b."""
    return a | b


def intersection(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    """a & b."""
    return a & b


def complement(a: IntervalElement) -> IntervalElement:
    """~a."""
    return ~a


def difference(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    """a - b."""
    return a - b


def symmetric_difference(a: IntervalElement, b: IntervalElement) -> IntervalElement:
    """a ^ b."""
    return a ^ b


def leq(a: IntervalElement, b: IntervalElement) -> bool:
    """a <= b."""
    return a <= b


def endpoints(b: IntervalElement) -> FrozenSet[Point]:
    """ep(b)."""
    return b.endpoints()


def hull(a: IntervalElement, cuts: Iterable[Point]) -> IntervalElement:
    """Least element above a whose endpoints lie in cuts: the union of the cells of cuts meeting a."""
    order = a.order
    cells = order.sort(p for p in cuts if not isinstance(p, Sentinel))
    bounds = [NEG_INF, *cells, POS_INF]
    result = IntervalElement.empty(order)
    for lo, hi in zip(bounds, bounds[1:]):
        cell = IntervalElement.interval(order, lo, hi)
        if not (cell & a).is_empty():
            result = result | cell
    return result

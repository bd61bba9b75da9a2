# coding=UTF-8
"""Finite interval algebras as carriers, and the mappings that live on them.

IntervalAlgebra(order, grid) holds every element whose endpoints lie in a finite grid of X. The grid points
g_1 < ... < g_m cut the line into the m + 1 cells [-inf, g_1), [g_1, g_2), ..., [g_m, +inf), which are the atoms;
an element is identified with the bitmask of the cells it contains, and that mask is its canonical index.

Mappings:
    dense_wfn_mapping  g(b) = {c : ep(c) within D | ep(b)} for a finite skeleton D
    lift_mapping       g(b) = {c : ep(c) within the union of f(x) over x in ep(b)} for f on a finite X
    project_mapping    f(x) = union of ep(b) over b in g([-inf, x)) for g on Intalg(X)

The intensional witnesses return the hull of a over the endpoints admissible on both sides, the least candidate
above a; the interpolation condition holds for a pair iff that hull lies below b.
"""
import logging
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from fnlab.algebra.subalgebra import BooleanStructure
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import CarrierMismatch, PreconditionFailed, SizeLimitExceeded, UnknownElement
from fnlab.intervals.element import IntervalElement, hull
from fnlab.intervals.linear_order import NEG_INF, POS_INF, LinearOrder, Point
from fnlab.mapping.fn_mapping import FnMapping, passes

logger = logging.getLogger(__name__)


class IntervalAlgebra(BooleanStructure):
    """Elements of Intalg(X) with endpoints in a finite grid.

    :param order: X
    :param grid: Finite set of points of X (defaults to all of a finite X)
    :param limits: limits.max_subalgebra caps the 2^(m+1) elements
    """

    def __init__(self, order: LinearOrder, grid: Optional[Iterable[Point]] = None, limits: Limits = DEFAULT_LIMITS):
        """Instantiate IntervalAlgebra."""
        if grid is None:
            if not order.is_finite:
                raise PreconditionFailed("A grid is required over the rationals")
            grid = order.points
        self.order = order
        self.grid: Tuple[Point, ...] = tuple(order.sort(order.point(p) for p in grid))
        if 2 ** (len(self.grid) + 1) > limits.max_subalgebra:
            raise SizeLimitExceeded(f"Interval algebra on {len(self.grid)} grid points is too large")
        self._grid_set = frozenset(self.grid)
        self._cuts = (NEG_INF, *self.grid, POS_INF)
        self._elements: Optional[Tuple[IntervalElement, ...]] = None

    # masks

    @property
    def cell_count(self) -> int:
        """Number of atoms m + 1."""
        return len(self.grid) + 1

    def mask_of(self, a: IntervalElement) -> int:
        """Bitmask of the cells inside a."""
        if a not in self:
            raise UnknownElement(f"{a} is not an element of this interval algebra")
        return sum(1 << ix for ix, lo in enumerate(self._cuts[:-1]) if a.contains(lo))

    def element_of(self, mask: int) -> IntervalElement:
        """Union of the cells in a bitmask."""
        bounds = []
        inside = False
        for ix, lo in enumerate(self._cuts[:-1]):
            value = bool(mask >> ix & 1)
            if value != inside:
                bounds.append(lo)
                inside = value
        if inside:
            bounds.append(POS_INF)
        return IntervalElement(self.order, bounds)

    def atoms(self):
        """The cells."""
        return [self.element_of(1 << ix) for ix in range(self.cell_count)]

    # OrderedStructure

    @property
    def elements(self) -> Tuple[IntervalElement, ...]:
        """Every element, in mask order."""
        if self._elements is None:
            self._elements = tuple(self.element_of(mask) for mask in range(2**self.cell_count))
        return self._elements

    def index(self, a: IntervalElement) -> int:
        """Canonical position: the cell mask."""
        return self.mask_of(a)

    def __contains__(self, a) -> bool:
        """Elements over X with every endpoint on the grid."""
        return isinstance(a, IntervalElement) and a.order == self.order and a.endpoints() <= self._grid_set

    def __len__(self) -> int:
        """2^(m+1)."""
        return 2**self.cell_count

    def le(self, a: IntervalElement, b: IntervalElement) -> bool:
        """Inclusion."""
        return a <= b

    def label(self, a: IntervalElement) -> str:
        """Text form."""
        return a.to_text()

    @property
    def le_matrix(self) -> np.ndarray:
        """Inclusion of cell masks."""
        cached = self.__dict__.get("_le_matrix")
        if cached is None:
            masks = np.arange(len(self), dtype=np.int64)
            cached = (masks[:, None] & ~masks[None, :]) == 0
            cached.flags.writeable = False
            self.__dict__["_le_matrix"] = cached
        return cached

    # BooleanStructure

    @property
    def bottom(self) -> IntervalElement:
        """Empty element."""
        return IntervalElement.empty(self.order)

    @property
    def top(self) -> IntervalElement:
        """[-inf, +inf)."""
        return IntervalElement.full(self.order)

    def meet(self, a: IntervalElement, b: IntervalElement) -> IntervalElement:
        """Intersection."""
        return a & b

    def join(self, a: IntervalElement, b: IntervalElement) -> IntervalElement:
        """Union."""
        return a | b

    def complement(self, a: IntervalElement) -> IntervalElement:
        """Complement."""
        return ~a

    def same_as(self, other) -> bool:
        """Same order and grid."""
        if isinstance(other, IntervalAlgebra):
            return self.order == other.order and self.grid == other.grid
        return super().same_as(other)

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"IntervalAlgebra({len(self.grid)} grid points, {len(self)} elements)"


def _adm(points: FrozenSet[Point], b: IntervalElement) -> FrozenSet[Point]:
    return points | b.endpoints()


def dense_wfn_mapping(algebra: IntervalAlgebra, skeleton: Iterable[Point]) -> FnMapping:
    """Mapping g(b) = {c : ep(c) within D | ep(b)} for a finite skeleton D of X.

    :param algebra: Carrier
    :param skeleton: D
    """
    order = algebra.order
    skeleton = frozenset(order.point(p) for p in skeleton)

    def membership(b: IntervalElement, c: IntervalElement) -> bool:
        return c.endpoints() <= _adm(skeleton, b)

    def witness(a: IntervalElement, b: IntervalElement) -> IntervalElement:
        return hull(a, _adm(skeleton, a) & _adm(skeleton, b))

    return FnMapping.intensional(algebra, membership, witness, name=f"dense:{len(skeleton)}")


def lift_mapping(f: FnMapping, algebra: IntervalAlgebra, check: bool = True) -> FnMapping:
    """Lift f on a finite X to g(b) = {c : ep(c) within F(b)}, F(b) the union of f(x) over x in ep(b).

    :param f: Admissible mapping on the chain X
    :param algebra: Intalg(X) over the whole of X
    :param check: Verify that f is admissible
    :raises PreconditionFailed: If f fails the interpolation condition
    """
    order = algebra.order
    if not order.is_finite or not f.carrier.same_as(order.to_poset()):
        raise CarrierMismatch("f must be defined on the finite order of the algebra")
    if check and not passes(f.carrier, f):
        raise PreconditionFailed("f does not satisfy the interpolation condition on X")
    f = f.materialize()

    def spread(b: IntervalElement) -> FrozenSet[Point]:
        return frozenset().union(*(f(x) for x in b.endpoints()))

    def membership(b: IntervalElement, c: IntervalElement) -> bool:
        return c.endpoints() <= spread(b)

    def witness(a: IntervalElement, b: IntervalElement) -> IntervalElement:
        return hull(a, spread(a) & spread(b))

    return FnMapping.intensional(algebra, membership, witness, name="lift")


def project_mapping(g: FnMapping, algebra: IntervalAlgebra, check: bool = True) -> FnMapping:
    """Project g on Intalg(X) to f(x) = union of ep(b) over b in g([-inf, x)).

    :param g: Admissible mapping on Intalg(X) over the whole of a finite X
    :param algebra: The carrier of g
    :param check: Verify that g is admissible
    :raises PreconditionFailed: If g fails the interpolation condition or the algebra does not cover X
    """
    order = algebra.order
    if not g.carrier.same_as(algebra):
        raise CarrierMismatch("g is not defined on this interval algebra")
    if not order.is_finite or algebra.grid != tuple(order.points):
        raise PreconditionFailed("Projection needs the interval algebra over all of a finite X")
    if check and not passes(algebra, g):
        raise PreconditionFailed("g does not satisfy the interpolation condition")

    chain_ = order.to_poset()
    table = {}
    for x in order.points:
        values = g(IntervalElement.initial_segment(order, x))
        table[x] = frozenset().union(*(b.endpoints() for b in values))
    logger.debug("Projected a mapping onto %d points", len(table))
    return FnMapping.extensional(chain_, table)

# coding=UTF-8
"""Finite partially ordered structures, cones, cofinality and order preserving maps.

OrderedStructure is the carrier interface every structure in fnlab implements (posets, finite Boolean algebras,
finite interval algebras). Elements are hashable values kept in a canonical order; that order decides every
deterministic tie-break downstream (first counterexample, search branching, report order).

Poset is the bare order on opaque string ids. OrderMap is a total map between two carriers.
"""
import logging
from abc import ABC, abstractmethod
from functools import cached_property
from typing import (
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Sequence,
    Tuple,
)

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from fnlab.helpers.errors import CycleError, DomainMismatch, NotAChain, UnknownElement

logger = logging.getLogger(__name__)

Element = Hashable


class OrderedStructure(ABC):
    """Finite carrier with a partial order.

    Subclasses provide the canonical element tuple and the order test; everything else is derived.
    """

    is_boolean_algebra = False

    @property
    @abstractmethod
    def elements(self) -> Tuple[Element, ...]:
        """Get the elements in canonical order."""

    @abstractmethod
    def le(self, a: Element, b: Element) -> bool:
        """Test a <= b."""

    def label(self, a: Element) -> str:
        """Get the printable id of an element."""
        return str(a)

    @cached_property
    def _index(self) -> Dict[Element, int]:
        return {e: ix for ix, e in enumerate(self.elements)}

    def index(self, a: Element) -> int:
        """Position of an element in the canonical order.

        :raises UnknownElement: If a is not in the structure
        """
        try:
            return self._index[a]
        except KeyError:
            raise UnknownElement(f"Unknown element {self.label(a)}") from None

    def __contains__(self, a) -> bool:
        """Membership of an element."""
        return a in self._index

    def __len__(self) -> int:
        """Number of elements."""
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        """Iterate elements in canonical order."""
        return iter(self.elements)

    @cached_property
    def le_matrix(self) -> np.ndarray:
        """Read-only boolean matrix: le_matrix[i, j] iff elements[i] <= elements[j]."""
        els = self.elements
        leq = np.array([[self.le(a, b) for b in els] for a in els], dtype=bool).reshape(len(els), len(els))
        leq.flags.writeable = False
        return leq

    def check_subset(self, subset: Iterable[Element]) -> FrozenSet[Element]:
        """Validate that every element of subset belongs to the structure.

        :param subset: Elements to check
        :return: The subset as a frozenset
        :raises UnknownElement: On the first foreign element
        """
        subset = frozenset(subset)
        for a in subset:
            self.index(a)
        return subset

    def sort(self, subset: Iterable[Element]) -> List[Element]:
        """Sort elements into canonical order."""
        return sorted(subset, key=self.index)

    def labels(self, subset: Iterable[Element]) -> List[str]:
        """Labels of a subset in canonical order."""
        return [self.label(a) for a in self.sort(subset)]

    def comparable_pairs(self) -> Iterator[Tuple[Element, Element]]:
        """Iterate all pairs a <= b in lexicographic (row-major) canonical order."""
        els = self.elements
        rows, cols = np.nonzero(self.le_matrix)
        for i, j in zip(rows, cols):
            yield els[i], els[j]

    def maximal_elements(self, subset: Iterable[Element]) -> FrozenSet[Element]:
        """Elements of subset with nothing in subset strictly above them."""
        subset = self.sort(set(subset))
        return frozenset(a for a in subset if not any(a != c and self.le(a, c) for c in subset))

    def minimal_elements(self, subset: Iterable[Element]) -> FrozenSet[Element]:
        """Elements of subset with nothing in subset strictly below them."""
        subset = self.sort(set(subset))
        return frozenset(a for a in subset if not any(a != c and self.le(c, a) for c in subset))

    def maximum(self, subset: Iterable[Element]):
        """Get the greatest element of subset or None if there is none."""
        top = self.maximal_elements(subset)
        if len(top) != 1:
            return None
        (candidate,) = top
        return candidate if all(self.le(a, candidate) for a in subset) else None

    def minimum(self, subset: Iterable[Element]):
        """Get the least element of subset or None if there is none."""
        bottom = self.minimal_elements(subset)
        if len(bottom) != 1:
            return None
        (candidate,) = bottom
        return candidate if all(self.le(candidate, a) for a in subset) else None

    def is_chain(self) -> bool:
        """Check if the order is total."""
        leq = self.le_matrix
        return bool(np.all(leq | leq.T))

    def same_as(self, other: "OrderedStructure") -> bool:
        """Structural equality: same canonical elements and the same order."""
        if self is other:
            return True
        if len(self) != len(other):
            return False
        return self.elements == other.elements and np.array_equal(self.le_matrix, other.le_matrix)

    def induced(self, subset: Iterable[Element]) -> "OrderedStructure":
        """Get subset as a structure with the induced order."""
        return InducedOrder(self, subset)

    def is_substructure_of(self, other: "OrderedStructure") -> bool:
        """Check if every element is in other with the induced order agreeing."""
        if not all(a in other for a in self.elements):
            return False
        return all(self.le(a, b) == other.le(a, b) for a in self.elements for b in self.elements)

    def __repr__(self) -> str:
        """Get helpful representation of class name and size."""
        return f"{self.__class__.__name__}({len(self)} elements)"


class Poset(OrderedStructure):
    """Finite poset on opaque string ids.

    Constructed through build_poset (from covering pairs) or from_matrix (from a full order matrix).

    :param elements: Unique ids
    :param leq: Boolean matrix of the order over elements (in the given order)
    """

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        """Instantiate Poset; ids are re-sorted lexicographically."""
        assert len(set(elements)) == len(elements), "Element ids must be unique"
        leq = np.asarray(leq, dtype=bool)
        assert leq.shape == (len(elements), len(elements)), "Order matrix must be square over the elements"

        order = sorted(range(len(elements)), key=lambda ix: elements[ix])
        self._elements = tuple(elements[ix] for ix in order)
        matrix = leq[np.ix_(order, order)].copy()
        matrix.flags.writeable = False
        self.__dict__["le_matrix"] = matrix  # seed the cached property
        validate_partial_order(self._elements, matrix)

    @property
    def elements(self) -> Tuple[str, ...]:
        """Get the ids in lexicographic order."""
        return self._elements

    def le(self, a: str, b: str) -> bool:
        """Test a <= b."""
        return bool(self.le_matrix[self.index(a), self.index(b)])

    @classmethod
    def from_matrix(cls, elements: Sequence[str], leq: np.ndarray) -> "Poset":
        """Build a poset from a full order matrix (checked)."""
        return cls(list(elements), leq)

    def restrict(self, subset: Iterable[str]) -> "Poset":
        """Get the induced subposet on subset."""
        keep = self.sort(self.check_subset(subset))
        ix = [self.index(a) for a in keep]
        return Poset(keep, self.le_matrix[np.ix_(ix, ix)])

    def induced(self, subset: Iterable[str]) -> "Poset":
        """Posets restrict to posets."""
        return self.restrict(subset)

    def dual(self) -> "Poset":
        """Get the poset with the reversed order."""
        return Poset(list(self.elements), self.le_matrix.T)

    def covers(self) -> List[Tuple[str, str]]:
        """Get the Hasse diagram edges (a, b) where b covers a."""
        lt = self.le_matrix.copy()
        np.fill_diagonal(lt, False)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cover = lt & ~between
        return [(self.elements[i], self.elements[j]) for i, j in zip(*np.nonzero(cover))]

    def __eq__(self, other) -> bool:
        """Structural equality."""
        return isinstance(other, Poset) and self.same_as(other)

    def __hash__(self) -> int:
        """Hash on the ids and the order."""
        return hash((self.elements, self.le_matrix.tobytes()))


class InducedOrder(OrderedStructure):
    """A subset of a structure with the order inherited from it.

    :param ambient: The enclosing structure
    :param subset: Elements kept, listed in the ambient canonical order
    """

    def __init__(self, ambient: OrderedStructure, subset: Iterable[Element]):
        """Instantiate InducedOrder."""
        self.ambient = ambient
        self._elements = tuple(ambient.sort(ambient.check_subset(subset)))

    @property
    def elements(self) -> Tuple[Element, ...]:
        """Kept elements."""
        return self._elements

    def le(self, a: Element, b: Element) -> bool:
        """Ambient order."""
        return self.ambient.le(a, b)

    def label(self, a: Element) -> str:
        """Ambient label."""
        return self.ambient.label(a)


def validate_partial_order(elements: Sequence[str], leq: np.ndarray) -> None:
    """Validate reflexivity, antisymmetry and transitivity of an order matrix.

    :raises CycleError: If antisymmetry fails
    :raises ValueError: If the matrix is not reflexive or transitive
    """
    if not np.all(np.diag(leq)):
        raise ValueError("Order is not reflexive")

    both = leq & leq.T
    np.fill_diagonal(both, False)
    if np.any(both):
        i, j = np.argwhere(both)[0]
        raise CycleError(f"Antisymmetry violated between {elements[i]} and {elements[j]}")

    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    if np.any(composed & ~leq):
        raise ValueError("Order is not transitive")


def build_poset(elements: Iterable[str], le_pairs: Iterable[Tuple[str, str]]) -> Poset:
    """Build a poset from (covering) pairs by reflexive-transitive closure.

    :param elements: Element ids
    :param le_pairs: Pairs (a, b) meaning a <= b
    :return: The closed poset
    :raises UnknownElement: If a pair mentions an undeclared id
    :raises CycleError: If the closure is not antisymmetric
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("Element ids must be unique")

    position = {e: ix for ix, e in enumerate(elements)}
    n = len(elements)
    adjacency = np.zeros((n, n), dtype=np.int8)
    for a, b in le_pairs:
        for e in (a, b):
            if e not in position:
                raise UnknownElement(f"Pair references undeclared element {e}")
        adjacency[position[a], position[b]] = 1

    # reachability: finite path length means a <= b
    if n:
        reach = np.isfinite(shortest_path(csr_matrix(adjacency), directed=True, unweighted=True))
    else:
        reach = np.zeros((0, 0), dtype=bool)

    logger.debug("Closed %d pairs over %d elements", int(adjacency.sum()), n)
    return Poset(elements, reach)


def chain(*ids: str) -> Poset:
    """Build the chain ids[0] < ids[1] < ... (convenience constructor)."""
    return build_poset(ids, zip(ids[:-1], ids[1:]))


def antichain(*ids: str) -> Poset:
    """Build the antichain on ids."""
    return build_poset(ids, [])


def lower_cone(structure: OrderedStructure, subset: Iterable[Element], b: Element) -> FrozenSet[Element]:
    """Get A restricted below b: {a in A : a <= b}.

    :param structure: Ambient structure B
    :param subset: The subset A of B
    :param b: Element of B
    :raises UnknownElement: If b or any member of A is not in B
    """
    subset = structure.check_subset(subset)
    structure.index(b)
    return frozenset(a for a in subset if structure.le(a, b))


def upper_cone(structure: OrderedStructure, subset: Iterable[Element], b: Element) -> FrozenSet[Element]:
    """Get A restricted above b: {a in A : a >= b}."""
    subset = structure.check_subset(subset)
    structure.index(b)
    return frozenset(a for a in subset if structure.le(b, a))


def is_cofinal(cofinal: Iterable[Element], subset: Iterable[Element], structure: OrderedStructure) -> bool:
    """Check that every s in S lies below some u in U (U a subset of S).

    The empty set is cofinal in the empty set.
    """
    cofinal = structure.check_subset(cofinal)
    subset = structure.check_subset(subset)
    if not cofinal <= subset:
        return False
    return all(any(structure.le(s, u) for u in cofinal) for s in subset)


def is_coinitial(coinitial: Iterable[Element], subset: Iterable[Element], structure: OrderedStructure) -> bool:
    """Check that every s in S lies above some u in U (U a subset of S)."""
    coinitial = structure.check_subset(coinitial)
    subset = structure.check_subset(subset)
    if not coinitial <= subset:
        return False
    return all(any(structure.le(u, s) for u in coinitial) for s in subset)


class OrderMap:
    """Total map between two carriers.

    :param source: Domain structure
    :param target: Codomain structure
    :param table: Image of every source element
    """

    def __init__(self, source: OrderedStructure, target: OrderedStructure, table: Mapping[Element, Element]):
        """Instantiate OrderMap (totality checked)."""
        self.source = source
        self.target = target
        missing = [a for a in source.elements if a not in table]
        if missing:
            raise DomainMismatch(f"Map is not total: no image for {source.label(missing[0])}")
        for a, b in table.items():
            source.index(a)
            target.index(b)
        self.table: Dict[Element, Element] = {a: table[a] for a in source.elements}

    def __call__(self, a: Element) -> Element:
        """Apply the map."""
        try:
            return self.table[a]
        except KeyError:
            raise UnknownElement(f"{self.source.label(a)} is not in the source") from None

    def image(self, subset: Iterable[Element]) -> FrozenSet[Element]:
        """Image of a subset."""
        return frozenset(self(a) for a in subset)

    def is_order_preserving(self) -> bool:
        """Check a <= a' implies map(a) <= map(a')."""
        return all(self.target.le(self(a), self(b)) for a, b in self.source.comparable_pairs())

    def compose(self, inner: "OrderMap") -> "OrderMap":
        """Get self after inner (inner first)."""
        if not inner.target.same_as(self.source):
            raise DomainMismatch("Maps do not compose")
        return OrderMap(inner.source, self.target, {a: self(inner(a)) for a in inner.source.elements})


def identity_map(structure: OrderedStructure) -> OrderMap:
    """Identity map on a structure."""
    return OrderMap(structure, structure, {a: a for a in structure.elements})


def inclusion_map(sub: OrderedStructure, ambient: OrderedStructure) -> OrderMap:
    """Inclusion of a substructure into its ambient structure."""
    return OrderMap(sub, ambient, {a: a for a in sub.elements})


def check_retraction(i: OrderMap, j: OrderMap) -> bool:
    """Check that i: A -> B and j: B -> A are order preserving with j after i the identity on A.

    :raises DomainMismatch: If the maps do not go back and forth between the same carriers
    """
    if not (i.source.same_as(j.target) and i.target.same_as(j.source)):
        raise DomainMismatch("i must map A -> B and j must map B -> A")

    if not (i.is_order_preserving() and j.is_order_preserving()):
        return False
    return all(j(i(a)) == a for a in i.source.elements)


def sup_retraction(i: OrderMap) -> OrderMap:
    """Build the retraction j(b) = max{a : i(a) <= b} for an embedding i of a finite chain.

    An element of B above no image is sent to the least element of the chain.

    :param i: Order embedding of a chain A into B
    :return: j: B -> A
    """
    chain_ = i.source
    if not chain_.is_chain():
        raise NotAChain("Source of the embedding must be a chain")
    ordered = sorted(chain_.elements, key=lambda a: int(chain_.le_matrix[:, chain_.index(a)].sum()))
    table = {}
    for b in i.target.elements:
        below = [a for a in ordered if i.target.le(i(a), b)]
        table[b] = below[-1] if below else ordered[0]
    return OrderMap(i.target, chain_, table)

# coding=UTF-8
"""Finite Boolean algebras: the BooleanStructure interface, subalgebras of Fr(n), quotients and independence.

A FiniteBooleanAlgebra is a set of elements of Fr(n) closed under meet, join and complement relative to its top.
With top = 1 it is a subalgebra of Fr(n); with a smaller top it is a relativized algebra (used for quotients,
where B/I is carried by the representatives x & !m of the classes, m the largest element of the ideal I).

A finite Boolean algebra is determined by its atoms; subalgebras are generated by partitioning the assignments
under the top by the value signature of the generators.
"""
import logging
from abc import abstractmethod
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from fnlab.algebra.free import FreeBAElement
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import (
    ArityMismatch,
    FamilyTooLarge,
    NotAnIdeal,
    NotASubstructure,
    SizeLimitExceeded,
    UnknownElement,
)
from fnlab.helpers.type_helpers import IndependenceResult
from fnlab.order.poset import Element, OrderedStructure, OrderMap

logger = logging.getLogger(__name__)


class BooleanStructure(OrderedStructure):
    """Ordered structure carrying Boolean operations."""

    is_boolean_algebra = True

    @property
    @abstractmethod
    def bottom(self) -> Element:
        """Least element."""

    @property
    @abstractmethod
    def top(self) -> Element:
        """Greatest element."""

    @abstractmethod
    def meet(self, a: Element, b: Element) -> Element:
        """Meet."""

    @abstractmethod
    def join(self, a: Element, b: Element) -> Element:
        """Join."""

    @abstractmethod
    def complement(self, a: Element) -> Element:
        """Complement relative to the top."""

    def same_as(self, other: OrderedStructure) -> bool:
        """Boolean carriers with equal element tuples carry the same order."""
        if self is other:
            return True
        if isinstance(other, FreeAlgebra):
            return other.same_as(self)
        if not isinstance(other, BooleanStructure):
            return super().same_as(other)
        return len(self) == len(other) and self.elements == other.elements

    def boolean_closure(self, subset: Iterable[Element], limits: Limits = DEFAULT_LIMITS) -> FrozenSet[Element]:
        """Least superset of subset and {0, 1} closed under the operations (fixpoint iteration).

        :raises SizeLimitExceeded: If the closure grows past limits.max_subalgebra
        """
        closed = set(self.check_subset(subset)) | {self.bottom, self.top}
        frontier = list(closed)
        while frontier:
            found = set()
            for a in frontier:
                found.add(self.complement(a))
                for b in list(closed):
                    found.add(self.meet(a, b))
                    found.add(self.join(a, b))
            frontier = [c for c in found if c not in closed]
            closed.update(frontier)
            if len(closed) > limits.max_subalgebra:
                raise SizeLimitExceeded(f"Closure exceeds {limits.max_subalgebra} members")
        return frozenset(closed)

    def is_subalgebra(self, subset: Iterable[Element]) -> bool:
        """Check that subset contains 0 and 1 and is closed under the operations."""
        subset = self.check_subset(subset)
        if self.bottom not in subset or self.top not in subset:
            return False
        for a in subset:
            if self.complement(a) not in subset:
                return False
            for b in subset:
                if self.meet(a, b) not in subset or self.join(a, b) not in subset:
                    return False
        return True

    def check_subalgebra(self, subset: Iterable[Element]) -> FrozenSet[Element]:
        """Validate a subalgebra.

        :raises NotASubstructure: If subset is not closed
        """
        subset = self.check_subset(subset)
        if not self.is_subalgebra(subset):
            raise NotASubstructure("Subset is not closed under the Boolean operations")
        return subset

    def subalgebra(self, subset: Iterable[Element]) -> OrderedStructure:
        """Subset as a carrier of its own.

        :raises NotASubstructure: If it is not closed
        """
        return self.induced(self.check_subalgebra(subset))

    def atoms(self) -> List[Element]:
        """Minimal nonzero elements in canonical order."""
        nonzero = [a for a in self.elements if a != self.bottom]
        return self.sort(self.minimal_elements(nonzero))

    def join_all(self, subset: Iterable[Element]) -> Element:
        """Join of a finite subset (0 for the empty set)."""
        result = self.bottom
        for a in subset:
            result = self.join(result, a)
        return result

    def is_ideal(self, subset: Iterable[Element]) -> bool:
        """Check for an ideal: contains 0, downward closed and closed under join."""
        subset = self.check_subset(subset)
        if self.bottom not in subset:
            return False
        for a in subset:
            for b in self.elements:
                if self.le(b, a) and b not in subset:
                    return False
            for b in subset:
                if self.join(a, b) not in subset:
                    return False
        return True

    def principal_ideal(self, m: Element) -> FrozenSet[Element]:
        """All elements below m."""
        self.index(m)
        return frozenset(a for a in self.elements if self.le(a, m))


class FiniteBooleanAlgebra(BooleanStructure):
    """Finite Boolean algebra of elements of Fr(n) below a top.

    :param arity: n
    :param members: Elements (closure under the operations relative to top is verified)
    :param top: Greatest element (defaults to 1 of Fr(n))
    :param validate: Skip the closure check for members produced by generation
    """

    def __init__(
        self,
        arity: int,
        members: Iterable[FreeBAElement],
        top: Optional[FreeBAElement] = None,
        validate: bool = True,
    ):
        """Instantiate FiniteBooleanAlgebra."""
        self.arity = arity
        self._top = FreeBAElement.one(arity) if top is None else top
        members = frozenset(members)
        for a in members:
            if a.arity != arity:
                raise ArityMismatch(f"Member of arity {a.arity} in an algebra of arity {arity}")
        self._elements = tuple(sorted(members, key=lambda e: e.code))

        if validate:
            if not all(a <= self._top for a in members):
                raise NotASubstructure("Members must lie below the top")
            if FreeBAElement.zero(arity) not in members or self._top not in members:
                raise NotASubstructure("Members must contain 0 and the top")
            if len(members) != 2 ** len(self._partition()):
                raise NotASubstructure("Members are not closed under meet, join and complement")

    # construction

    @classmethod
    def full(cls, n: int, limits: Limits = DEFAULT_LIMITS) -> "FiniteBooleanAlgebra":
        """All of Fr(n)."""
        if 2 ** (2**n) > limits.max_subalgebra:
            raise SizeLimitExceeded(f"Fr({n}) has {2 ** (2**n)} elements")
        return cls(n, (FreeBAElement.from_code(n, code) for code in range(2 ** (2**n))), validate=False)

    @classmethod
    def generated(
        cls,
        n: int,
        gens: Iterable[FreeBAElement],
        top: Optional[FreeBAElement] = None,
        limits: Limits = DEFAULT_LIMITS,
    ) -> "FiniteBooleanAlgebra":
        """Subalgebra (relative to top) generated by gens."""
        top = FreeBAElement.one(n) if top is None else top
        gens = [g & top for g in gens]
        for g in gens:
            if g.arity != n:
                raise ArityMismatch(f"Generator of arity {g.arity} in Fr({n})")
        atoms = atoms_of(n, gens, top)
        if 2 ** len(atoms) > limits.max_subalgebra:
            raise SizeLimitExceeded(f"Generated subalgebra has 2^{len(atoms)} members")
        algebra = cls(n, unions_of(n, atoms), top=top, validate=False)
        logger.debug("Generated %d members from %d generators in Fr(%d)", len(algebra), len(gens), n)
        return algebra

    def _partition(self) -> List[FreeBAElement]:
        """Atoms of the algebra the members generate (relative to top)."""
        return atoms_of(self.arity, self._elements, self._top)

    # OrderedStructure

    @property
    def elements(self) -> Tuple[FreeBAElement, ...]:
        """Members in canonical (code) order."""
        return self._elements

    def le(self, a: FreeBAElement, b: FreeBAElement) -> bool:
        """Order of Fr(n)."""
        return a <= b

    def label(self, a: FreeBAElement) -> str:
        """Printable expression."""
        return a.to_expression()

    @property
    def le_matrix(self) -> np.ndarray:
        """Vectorized order matrix."""
        cached = self.__dict__.get("_le_matrix")
        if cached is None:
            tables = np.stack([a.table for a in self._elements]).astype(np.int32)
            cached = (tables @ (1 - tables).T) == 0
            cached.flags.writeable = False
            self.__dict__["_le_matrix"] = cached
        return cached

    # BooleanStructure

    @property
    def bottom(self) -> FreeBAElement:
        """Zero of Fr(n)."""
        return FreeBAElement.zero(self.arity)

    @property
    def top(self) -> FreeBAElement:
        """Top (1 unless relativized)."""
        return self._top

    def meet(self, a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
        """Meet."""
        return a & b

    def join(self, a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
        """Join."""
        return a | b

    def complement(self, a: FreeBAElement) -> FreeBAElement:
        """Complement relative to the top."""
        return self._top - a

    def atoms(self) -> List[FreeBAElement]:
        """Atoms in canonical order."""
        return sorted(self._partition(), key=lambda e: e.code)

    def boolean_closure(self, subset: Iterable[FreeBAElement], limits: Limits = DEFAULT_LIMITS) -> FrozenSet:
        """Generated subalgebra of a subset (through atoms)."""
        subset = self.check_subset(subset)
        return frozenset(FiniteBooleanAlgebra.generated(self.arity, subset, self._top, limits).elements)

    def is_subalgebra(self, subset: Iterable[FreeBAElement]) -> bool:
        """Closed iff the subset has 2^(number of atoms it generates) members and contains 0 and 1."""
        subset = self.check_subset(subset)
        if self.bottom not in subset or self._top not in subset:
            return False
        return len(subset) == 2 ** len(atoms_of(self.arity, subset, self._top))

    def subalgebra(self, subset: Iterable[FreeBAElement]) -> "FiniteBooleanAlgebra":
        """Subset as an algebra of its own.

        :raises NotASubstructure: If it is not closed
        """
        return FiniteBooleanAlgebra(self.arity, self.check_subalgebra(subset), top=self._top, validate=False)

    def subalgebras(self) -> Iterator["FiniteBooleanAlgebra"]:
        """Every subalgebra, one per partition of the atoms."""
        atoms = self.atoms()
        for blocks in set_partitions(atoms):
            merged = [self.join_all(block) for block in blocks]
            yield FiniteBooleanAlgebra(self.arity, unions_of(self.arity, merged), top=self._top, validate=False)

    def is_ideal(self, subset: Iterable[FreeBAElement]) -> bool:
        """An ideal of a finite algebra is the principal ideal of its join."""
        subset = self.check_subset(subset)
        if not subset:
            return False
        return subset == self.principal_ideal(self.join_all(subset))

    def quotient(self, ideal: Iterable[FreeBAElement]) -> Tuple["FiniteBooleanAlgebra", OrderMap]:
        """Quotient B/I carried by the representatives x & !m, plus the class map x -> [x].

        :raises NotAnIdeal: If ideal is not an ideal of this algebra
        """
        ideal = frozenset(ideal)
        if not all(a in self for a in ideal) or not self.is_ideal(ideal):
            raise NotAnIdeal("Subset is not an ideal")
        m = self.join_all(ideal)
        top = self._top - m
        table = {x: x - m for x in self._elements}
        algebra = FiniteBooleanAlgebra(self.arity, set(table.values()), top=top, validate=False)
        return algebra, OrderMap(self, algebra, table)

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"FiniteBooleanAlgebra(n={self.arity}, {len(self)} elements)"


class FreeAlgebra(BooleanStructure):
    """All of Fr(n) as a carrier; elements are enumerated only while Fr(n) is small.

    Index of an element is its code, so canonical order needs no enumeration. Verification over a large Fr(n)
    works on an explicit pair sample.

    :param n: Number of generators
    """

    def __init__(self, n: int, limits: Limits = DEFAULT_LIMITS):
        """Instantiate FreeAlgebra."""
        limits.check_arity(n)
        self.arity = n
        self.limits = limits
        self._enumerated: Optional[Tuple[FreeBAElement, ...]] = None

    @property
    def elements(self) -> Tuple[FreeBAElement, ...]:
        """Every element (only for small n).

        :raises SizeLimitExceeded: If Fr(n) exceeds limits.max_subalgebra
        """
        if self._enumerated is None:
            self._enumerated = FiniteBooleanAlgebra.full(self.arity, self.limits).elements
        return self._enumerated

    def index(self, a: FreeBAElement) -> int:
        """Position in canonical order (the code)."""
        if a not in self:
            raise UnknownElement(f"{a!r} is not an element of Fr({self.arity})")
        return a.code

    def __contains__(self, a) -> bool:
        """Every element of arity n belongs."""
        return isinstance(a, FreeBAElement) and a.arity == self.arity

    def __len__(self) -> int:
        """2^(2^n)."""
        return 2 ** (2**self.arity)

    def le(self, a: FreeBAElement, b: FreeBAElement) -> bool:
        """Order of Fr(n)."""
        return a <= b

    def label(self, a: FreeBAElement) -> str:
        """Printable expression."""
        return a.to_expression()

    @property
    def bottom(self) -> FreeBAElement:
        """0."""
        return FreeBAElement.zero(self.arity)

    @property
    def top(self) -> FreeBAElement:
        """1."""
        return FreeBAElement.one(self.arity)

    def meet(self, a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
        """Meet."""
        return a & b

    def join(self, a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
        """Join."""
        return a | b

    def complement(self, a: FreeBAElement) -> FreeBAElement:
        """Complement."""
        return ~a

    def boolean_closure(self, subset: Iterable[FreeBAElement], limits: Limits = DEFAULT_LIMITS) -> FrozenSet:
        """Generated subalgebra of a subset (through atoms)."""
        subset = self.check_subset(subset)
        return frozenset(FiniteBooleanAlgebra.generated(self.arity, subset, limits=limits).elements)

    def is_subalgebra(self, subset: Iterable[FreeBAElement]) -> bool:
        """Closed iff the subset has 2^(number of atoms it generates) members and contains 0 and 1."""
        subset = self.check_subset(subset)
        if self.bottom not in subset or self.top not in subset:
            return False
        return len(subset) == 2 ** len(atoms_of(self.arity, subset, self.top))

    def subalgebra(self, subset: Iterable[FreeBAElement]) -> FiniteBooleanAlgebra:
        """Subset as a finite algebra.

        :raises NotASubstructure: If it is not closed
        """
        return FiniteBooleanAlgebra(self.arity, self.check_subalgebra(subset), validate=False)

    def same_as(self, other: OrderedStructure) -> bool:
        """Same arity; a materialized full algebra of the same arity also matches."""
        if isinstance(other, FreeAlgebra):
            return other.arity == self.arity
        if isinstance(other, FiniteBooleanAlgebra):
            return other.arity == self.arity and other.top.is_one() and len(other) == len(self)
        return False

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"FreeAlgebra(n={self.arity})"


def atoms_of(n: int, elements: Iterable[FreeBAElement], top: FreeBAElement) -> List[FreeBAElement]:
    """Atoms of the algebra generated by elements relative to top.

    Assignments under top are grouped by their value signature across elements; each group is an atom.
    """
    elements = list(elements)
    cells = np.flatnonzero(top.table)
    if cells.size == 0:
        return []
    if not elements:
        return [top]
    signatures = np.stack([e.table[cells] for e in elements], axis=1)
    _, inverse = np.unique(signatures, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    atoms = []
    for group in range(int(inverse.max()) + 1):
        table = np.zeros(2**n, dtype=bool)
        table[cells[inverse == group]] = True
        atoms.append(FreeBAElement(n, table))
    return atoms


def unions_of(n: int, atoms: Sequence[FreeBAElement]) -> List[FreeBAElement]:
    """All joins of subsets of atoms (2^len(atoms) elements)."""
    members = [FreeBAElement.zero(n)]
    for atom in atoms:
        members = members + [m | atom for m in members]
    return members


def set_partitions(items: Sequence) -> Iterator[List[List]]:
    """All partitions of a sequence into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for ix in range(len(partition)):
            yield partition[:ix] + [[first] + partition[ix]] + partition[ix + 1 :]


def generate_subalgebra(
    n: int, gens: Iterable[FreeBAElement], limits: Limits = DEFAULT_LIMITS
) -> FiniteBooleanAlgebra:
    """Least subalgebra of Fr(n) containing gens, 0 and 1.

    :raises SizeLimitExceeded: Above limits.max_subalgebra members
    """
    return FiniteBooleanAlgebra.generated(n, gens, limits=limits)


def _check_family(family: Sequence[FreeBAElement], limits: Limits) -> int:
    if len(family) > limits.max_family:
        raise FamilyTooLarge(f"Family of {len(family)} exceeds {limits.max_family}")
    arities = {e.arity for e in family}
    if len(arities) > 1:
        raise ArityMismatch(f"Family mixes arities {sorted(arities)}")
    return arities.pop() if arities else 0


def is_independent(
    family: Sequence[FreeBAElement], limits: Limits = DEFAULT_LIMITS, top: Optional[FreeBAElement] = None
) -> IndependenceResult:
    """Test that every elementary product of the family is nonzero (below top, when given).

    Sign patterns are visited with 1 (the member) before 0 (its complement); a zero partial product closes its whole
    subtree, whose first pattern continues with 1s. The witness is the first zero pattern in that order.

    :raises FamilyTooLarge: Above limits.max_family members
    """
    family = list(family)
    n = _check_family(family + ([top] if top is not None else []), limits)
    if not family:
        return IndependenceResult(True, None)

    def search(depth: int, partial: np.ndarray, pattern: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
        if not partial.any():
            return pattern + (1,) * (len(family) - depth)
        if depth == len(family):
            return None
        table = family[depth].table
        return search(depth + 1, partial & table, pattern + (1,)) or search(
            depth + 1, partial & ~table, pattern + (0,)
        )

    start = np.ones(2**n, dtype=bool) if top is None else top.table.copy()
    witness = search(0, start, ())
    return IndependenceResult(witness is None, witness)


def is_independent_by_count(family: Sequence[FreeBAElement], limits: Limits = DEFAULT_LIMITS) -> bool:
    """Independence by counting the distinct sign patterns the assignments realize."""
    family = list(family)
    _check_family(family, limits)
    if not family:
        return True
    signatures = np.stack([e.table for e in family], axis=1)
    return len(np.unique(signatures, axis=0)) == 2 ** len(family)


def elementary_product(family: Sequence[FreeBAElement], pattern: Sequence[int]) -> FreeBAElement:
    """Meet of each member (sign 1) or its complement (sign 0)."""
    if len(pattern) != len(family):
        raise ValueError("Pattern length must match the family")
    if not family:
        raise ValueError("Empty family has no arity")
    result = FreeBAElement.one(family[0].arity)
    for e, sign in zip(family, pattern):
        result = result & (e if sign else ~e)
    return result


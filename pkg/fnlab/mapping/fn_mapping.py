# coding=UTF-8
"""Mappings f: S -> [S]^{<k} and the interpolation condition they are checked against.

A mapping satisfies the interpolation condition on S when every pair a <= b has some c in f(a) & f(b) with
a <= c <= b. verify_star checks it and reports the first failing pair in canonical order.

Extensional mappings carry an explicit table of finite sets. Intensional mappings carry a membership predicate
(membership(b, c) means c is in f(b)) and a witness oracle proposing c for a pair; their value sets never need to be
materialized, which is what makes the interpolation mapping on Fr(n) tractable.

WitnessFamily holds, for every element b of an ambient structure B, a cofinal subset U(b) of A restricted below b
and a coinitial subset V(b) of A restricted above b.
"""
import logging
from typing import Callable, Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from fnlab.algebra.free import FreeBAElement, craig_interpolant
from fnlab.algebra.subalgebra import FiniteBooleanAlgebra, FreeAlgebra
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import (
    BoundExceeded,
    CarrierMismatch,
    NotAnEnumeration,
    UnknownElement,
    WitnessInvalid,
)
from fnlab.helpers.type_helpers import Counterexample
from fnlab.order.poset import (
    Element,
    OrderedStructure,
    is_cofinal,
    is_coinitial,
    lower_cone,
    upper_cone,
)

logger = logging.getLogger(__name__)

Membership = Callable[[Element, Element], bool]
WitnessOracle = Callable[[Element, Element], Optional[Element]]
ClosureHook = Callable[[FrozenSet, bool], FrozenSet]


class FnMapping:
    """Assignment of a finite subset f(a) of the carrier to every element a.

    Use the extensional / intensional constructors.

    :param carrier: Structure the mapping is defined on
    :param table: Extensional values (None for intensional mappings)
    :param membership: Intensional predicate membership(b, c) for c in f(b)
    :param witness: Intensional oracle returning c for a pair a <= b (or None)
    :param bound: Strict size bound k on |f(a)|; None is unbounded
    :param closure_hook: Optional closure of a seed (seed, algebraic) -> closed set, for carriers too large to scan
    :param name: Printable name of an intensional mapping
    """

    def __init__(
        self,
        carrier: OrderedStructure,
        table: Optional[Mapping[Element, Iterable[Element]]] = None,
        membership: Optional[Membership] = None,
        witness: Optional[WitnessOracle] = None,
        bound: Optional[int] = None,
        closure_hook: Optional[ClosureHook] = None,
        name: str = "",
    ):
        """Instantiate FnMapping."""
        assert (table is None) != (membership is None), "Provide either a table or a membership predicate"
        assert bound is None or bound >= 1, "Bound must be at least 1"
        self.carrier = carrier
        self.bound = bound
        self.membership = membership
        self.witness_oracle = witness
        self.closure_hook = closure_hook
        self.name = name
        self.table: Optional[Dict[Element, FrozenSet[Element]]] = None

        if table is not None:
            self.table = {}
            for a in carrier.elements:
                if a not in table:
                    raise CarrierMismatch(f"Mapping is not defined on {carrier.label(a)}")
                values = carrier.check_subset(table[a])
                if bound is not None and len(values) >= bound:
                    raise BoundExceeded(f"|f({carrier.label(a)})| = {len(values)} is not below k={bound}")
                self.table[a] = values
            extra = [a for a in table if a not in carrier]
            if extra:
                raise UnknownElement(f"Mapping defined on foreign element {extra[0]}")

    @classmethod
    def extensional(
        cls, carrier: OrderedStructure, table: Mapping[Element, Iterable[Element]], bound: Optional[int] = None
    ) -> "FnMapping":
        """Mapping given by an explicit table."""
        return cls(carrier, table=table, bound=bound)

    @classmethod
    def intensional(
        cls,
        carrier: OrderedStructure,
        membership: Membership,
        witness: WitnessOracle,
        bound: Optional[int] = None,
        closure_hook: Optional[ClosureHook] = None,
        name: str = "",
    ) -> "FnMapping":
        """Mapping given by a membership predicate and a witness oracle."""
        return cls(carrier, membership=membership, witness=witness, bound=bound, closure_hook=closure_hook, name=name)

    @property
    def kind(self) -> str:
        """extensional or intensional."""
        return "extensional" if self.table is not None else "intensional"

    @property
    def is_extensional(self) -> bool:
        """Check for an explicit table."""
        return self.table is not None

    def __call__(self, a: Element) -> FrozenSet[Element]:
        """Value set f(a); intensional mappings scan the carrier."""
        if self.table is not None:
            try:
                return self.table[a]
            except KeyError:
                raise UnknownElement(f"{self.carrier.label(a)} is not in the carrier") from None
        self.carrier.index(a)
        return frozenset(c for c in self.carrier.elements if self.membership(a, c))

    def contains(self, a: Element, c: Element) -> bool:
        """Test c in f(a)."""
        if self.table is not None:
            return c in self(a)
        return bool(self.membership(a, c))

    def witness(self, a: Element, b: Element) -> Optional[Element]:
        """Interpolating element for a <= b or None.

        Extensional mappings return the first c (canonical order) of f(a) & f(b) with a <= c <= b.
        """
        if self.table is None:
            return self.witness_oracle(a, b)
        for c in self.carrier.sort(self(a) & self(b)):
            if self.carrier.le(a, c) and self.carrier.le(c, b):
                return c
        return None

    def materialize(self) -> "FnMapping":
        """Extensional copy (membership tested against every carrier element)."""
        if self.table is not None:
            return self
        return FnMapping.extensional(self.carrier, {a: self(a) for a in self.carrier.elements}, bound=self.bound)

    def max_size(self) -> int:
        """Largest value set."""
        return max((len(self(a)) for a in self.carrier.elements), default=0)

    def total_size(self) -> int:
        """Sum of the value set sizes."""
        return sum(len(self(a)) for a in self.carrier.elements)

    def pointwise_union(self, other: "FnMapping") -> "FnMapping":
        """Mapping a -> f(a) | g(a) on a common carrier (unbounded)."""
        if not self.carrier.same_as(other.carrier):
            raise CarrierMismatch("Mappings live on different carriers")
        return FnMapping.extensional(self.carrier, {a: self(a) | other(a) for a in self.carrier.elements})

    def closure(
        self, seed: Iterable[Element], algebraic: bool = False, limits: Limits = DEFAULT_LIMITS
    ) -> FrozenSet[Element]:
        """Least superset of seed closed under f (and the Boolean operations when algebraic).

        :param seed: Starting set
        :param algebraic: Also close under meet, join and complement (Boolean carriers only)
        :param limits: Caps for the Boolean closure
        """
        seed = self.carrier.check_subset(seed)
        if self.closure_hook is not None:
            return self.closure_hook(seed, algebraic)
        assert not algebraic or self.carrier.is_boolean_algebra, "Algebraic closure needs a Boolean carrier"

        closed = set(seed)
        while True:
            grown = set(closed)
            for a in closed:
                grown |= self(a)
            if algebraic:
                grown = set(self.carrier.boolean_closure(grown, limits))
            if grown == closed:
                return frozenset(closed)
            closed = grown

    def is_closed(self, subset: Iterable[Element]) -> bool:
        """Check f(c) is inside subset for every c in subset."""
        subset = frozenset(subset)
        return all(self(c) <= subset for c in subset)

    def extends(self, other: "FnMapping") -> bool:
        """Check that every element of the other carrier is mapped here exactly as there."""
        return all(a in self.carrier and self(a) == other(a) for a in other.carrier.elements)

    def bound_label(self) -> str:
        """Bound as printed in the mapping format."""
        return "inf" if self.bound is None else str(self.bound)

    def __repr__(self) -> str:
        """Get helpful representation."""
        name = f" {self.name}" if self.name else ""
        return f"FnMapping({self.kind}{name}, k={self.bound_label()}, carrier={self.carrier!r})"


def check_pair(structure: OrderedStructure, f: FnMapping, a: Element, b: Element) -> bool:
    """Check the interpolation condition for one pair a <= b."""
    if f.is_extensional:
        return f.witness(a, b) is not None
    c = f.witness(a, b)
    if c is None or c not in structure:
        return False
    return f.contains(a, c) and f.contains(b, c) and structure.le(a, c) and structure.le(c, b)


def verify_star(
    structure: OrderedStructure,
    f: FnMapping,
    pairs: Optional[Iterable[Tuple[Element, Element]]] = None,
) -> Optional[Counterexample]:
    """Check the interpolation condition over all comparable pairs (or an explicit sample).

    :param structure: The structure S
    :param f: Mapping defined on S
    :param pairs: Optional pairs to check instead of every a <= b; incomparable pairs are skipped
    :return: None when the condition holds, else the first failing pair in canonical order
    :raises CarrierMismatch: If f is not defined on S
    """
    if not f.carrier.same_as(structure):
        raise CarrierMismatch("Mapping is not defined on this structure")

    if pairs is None:
        pairs = structure.comparable_pairs()
    checked = 0
    for a, b in pairs:
        if not structure.le(a, b):
            continue
        checked += 1
        if not check_pair(structure, f, a, b):
            logger.debug("Pair %s <= %s fails after %d checks", structure.label(a), structure.label(b), checked)
            return Counterexample(a, b)
    logger.debug("Interpolation condition holds on %d pairs", checked)
    return None


def passes(structure: OrderedStructure, f: FnMapping, pairs=None) -> bool:
    """verify_star as a predicate."""
    return verify_star(structure, f, pairs) is None


class WitnessFamily:
    """Cofinal / coinitial witnesses U(b), V(b) for a subset A of an ambient structure B.

    A side given as None is not supplied (and not checked); the lower-only form is all a restriction needs.

    :param ambient: B
    :param subset: A
    :param table: b -> (U(b), V(b)) for every b in B
    :raises WitnessInvalid: If some U(b) is not cofinal in A below b or V(b) not coinitial in A above b
    """

    def __init__(
        self,
        ambient: OrderedStructure,
        subset: Iterable[Element],
        table: Mapping[Element, Tuple[Optional[Iterable[Element]], Optional[Iterable[Element]]]],
    ):
        """Instantiate WitnessFamily."""
        self.ambient = ambient
        self.subset = ambient.check_subset(subset)
        self.table: Dict[Element, Tuple[Optional[FrozenSet], Optional[FrozenSet]]] = {}
        for b in ambient.elements:
            if b not in table:
                raise WitnessInvalid(f"No witnesses for {ambient.label(b)}")
            lower, upper = table[b]
            lower = None if lower is None else frozenset(lower)
            upper = None if upper is None else frozenset(upper)
            if lower is not None and not is_cofinal(lower, lower_cone(ambient, self.subset, b), ambient):
                raise WitnessInvalid(f"U({ambient.label(b)}) is not cofinal in A below {ambient.label(b)}")
            if upper is not None and not is_coinitial(upper, upper_cone(ambient, self.subset, b), ambient):
                raise WitnessInvalid(f"V({ambient.label(b)}) is not coinitial in A above {ambient.label(b)}")
            self.table[b] = (lower, upper)

    @classmethod
    def canonical(cls, ambient: OrderedStructure, subset: Iterable[Element]) -> "WitnessFamily":
        """Smallest witnesses: maximal elements of A below b and minimal elements of A above b."""
        subset = ambient.check_subset(subset)
        table = {
            b: (
                ambient.maximal_elements(lower_cone(ambient, subset, b)),
                ambient.minimal_elements(upper_cone(ambient, subset, b)),
            )
            for b in ambient.elements
        }
        return cls(ambient, subset, table)

    @property
    def has_lower(self) -> bool:
        """Check every U(b) is supplied."""
        return all(lower is not None for lower, _ in self.table.values())

    @property
    def has_upper(self) -> bool:
        """Check every V(b) is supplied."""
        return all(upper is not None for _, upper in self.table.values())

    def lower(self, b: Element) -> FrozenSet[Element]:
        """U(b)."""
        lower = self.table[b][0]
        if lower is None:
            raise WitnessInvalid(f"U({self.ambient.label(b)}) was not supplied")
        return lower

    def upper(self, b: Element) -> FrozenSet[Element]:
        """V(b)."""
        upper = self.table[b][1]
        if upper is None:
            raise WitnessInvalid(f"V({self.ambient.label(b)}) was not supplied")
        return upper

    def width(self) -> int:
        """Largest supplied witness set."""
        sizes = [len(s) for pair in self.table.values() for s in pair if s is not None]
        return max(sizes, default=0)


# builders


def enumeration_mapping(structure: OrderedStructure, order: Sequence[Element]) -> FnMapping:
    """Mapping f(b_i) = {b_j : j <= i} of an enumeration b_0, b_1, ... of the structure.

    :raises NotAnEnumeration: If order repeats or misses an element
    """
    order = list(order)
    if len(set(order)) != len(order):
        raise NotAnEnumeration("Enumeration repeats an element")
    if set(order) != set(structure.elements):
        raise NotAnEnumeration("Enumeration does not list exactly the elements of the structure")
    return FnMapping.extensional(structure, {b: order[: ix + 1] for ix, b in enumerate(order)})


def full_mapping(structure: OrderedStructure) -> FnMapping:
    """Mapping f(a) = S for every a."""
    everything = frozenset(structure.elements)
    return FnMapping.extensional(structure, {a: everything for a in structure.elements})


def singleton_mapping(structure: OrderedStructure) -> FnMapping:
    """Mapping f(a) = {a}; passes only on antichains."""
    return FnMapping.extensional(structure, {a: {a} for a in structure.elements})


def interpolation_fn_mapping(n: int, limits: Limits = DEFAULT_LIMITS) -> FnMapping:
    """Intensional mapping on Fr(n): f(b) is the subalgebra generated by the support of b.

    c is in f(b) iff support(c) is inside support(b); the witness for a <= b is the strongest interpolant.
    The closure of a set is the subalgebra generated by the generators in its supports.
    """
    carrier = FreeAlgebra(n, limits)

    def membership(b: FreeBAElement, c: FreeBAElement) -> bool:
        return c.support() <= b.support()

    def closure_hook(seed: FrozenSet[FreeBAElement], algebraic: bool) -> FrozenSet[FreeBAElement]:
        if algebraic:
            variables = sorted(set().union(*(b.support() for b in seed))) if seed else []
            gens = [FreeBAElement.generator(n, k) for k in variables]
            return frozenset(FiniteBooleanAlgebra.generated(n, gens, limits=limits).elements)
        closed = set(seed)
        for b in seed:
            gens = [FreeBAElement.generator(n, k) for k in sorted(b.support())]
            closed |= set(FiniteBooleanAlgebra.generated(n, gens, limits=limits).elements)
        return frozenset(closed)

    return FnMapping.intensional(
        carrier, membership, craig_interpolant, closure_hook=closure_hook, name=f"interpolation:n={n}"
    )


def carrier_of(structure: OrderedStructure, subset: Iterable[Element]) -> OrderedStructure:
    """Subset as a carrier: its subalgebra when structure is Boolean and subset closed, else the induced order."""
    subset = structure.check_subset(subset)
    if structure.is_boolean_algebra and structure.is_subalgebra(subset):
        return structure.subalgebra(subset)
    return structure.induced(subset)

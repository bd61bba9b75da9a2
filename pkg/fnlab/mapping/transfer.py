# coding=UTF-8
"""Constructions moving an admissible mapping from one structure to another.

restrict_mapping    g on B and witnesses for A in B give f on A: f(a) = union of U(b) over b in g(a)
extend_mapping      f on A, g on B and witnesses give g~ on B extending f
retract_transfer    g on B and a retraction i: A -> B, j: B -> A give f(a) = j[g(i(a))]
chain_union_mapping mappings on an increasing chain of carriers give their union on the top carrier
quotient_*          mappings move between a finite Boolean algebra B and its quotient B/I

Outputs are extensional and unbounded; every output satisfies the interpolation condition whenever the inputs meet
the stated preconditions.
"""
import logging
from typing import Iterable, List, Sequence, Tuple

from fnlab.algebra.subalgebra import FiniteBooleanAlgebra
from fnlab.helpers.errors import (
    CarrierMismatch,
    NotAChain,
    NotARetraction,
    NotExtending,
    PreconditionFailed,
    WitnessInvalid,
)
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily, carrier_of, passes
from fnlab.order.poset import Element, OrderedStructure, OrderMap, check_retraction

logger = logging.getLogger(__name__)


def _check_witnesses(structure: OrderedStructure, subset: frozenset, witnesses: WitnessFamily) -> None:
    if not witnesses.ambient.same_as(structure) or witnesses.subset != subset:
        raise WitnessInvalid("Witness family was built for another pair A, B")


def restrict_mapping(
    structure: OrderedStructure,
    subset: Iterable[Element],
    g: FnMapping,
    witnesses: WitnessFamily,
    use: str = "lower",
) -> FnMapping:
    """Restrict g on B to A through cofinal witnesses.

    :param structure: B
    :param subset: A
    :param g: Mapping on B
    :param witnesses: U(b) cofinal in A below b (and/or V(b) coinitial above b)
    :param use: lower builds from U, upper from V; either side alone suffices
    :return: f on A with f(a) the union of U(b) (or V(b)) over b in g(a)
    :raises WitnessInvalid: If the needed side of the family is missing or built for other sets
    """
    subset = structure.check_subset(subset)
    _check_witnesses(structure, subset, witnesses)
    if not g.carrier.same_as(structure):
        raise CarrierMismatch("g is not defined on B")
    assert use in ("lower", "upper"), "use must be lower or upper"
    side = witnesses.lower if use == "lower" else witnesses.upper

    carrier = carrier_of(structure, subset)
    g = g.materialize()
    table = {a: frozenset().union(*(side(b) for b in g(a))) for a in carrier.elements}
    return FnMapping.extensional(carrier, table)


def extend_mapping(
    structure: OrderedStructure,
    subset: Iterable[Element],
    f: FnMapping,
    g: FnMapping,
    witnesses: WitnessFamily,
    check: bool = True,
) -> FnMapping:
    """Extend f on A to B.

    g~(b) = f(b) for b in A, otherwise g(b) together with f(c) for every c in U(b) or V(b).

    :param structure: B
    :param subset: A
    :param f: Admissible mapping on A
    :param g: Admissible mapping on B
    :param witnesses: Both-sided witness family for A in B
    :param check: Verify that f and g are admissible
    :raises WitnessInvalid: If the family is one-sided or built for other sets
    :raises PreconditionFailed: If f or g fails the interpolation condition
    """
    subset = structure.check_subset(subset)
    _check_witnesses(structure, subset, witnesses)
    if not (witnesses.has_lower and witnesses.has_upper):
        raise WitnessInvalid("Extension needs both U(b) and V(b)")
    if not g.carrier.same_as(structure):
        raise CarrierMismatch("g is not defined on B")
    if frozenset(f.carrier.elements) != subset:
        raise CarrierMismatch("f is not defined on A")
    if check and not passes(f.carrier, f):
        raise PreconditionFailed("f does not satisfy the interpolation condition on A")
    if check and not passes(structure, g):
        raise PreconditionFailed("g does not satisfy the interpolation condition on B")

    f, g = f.materialize(), g.materialize()
    table = {}
    for b in structure.elements:
        if b in subset:
            table[b] = f(b)
        else:
            around = witnesses.lower(b) | witnesses.upper(b)
            table[b] = g(b).union(*(f(c) for c in around))
    return FnMapping.extensional(structure, table)


def retract_transfer(g: FnMapping, i: OrderMap, j: OrderMap) -> FnMapping:
    """Pull g on B back to A along a retraction: f(a) = j[g(i(a))].

    :raises NotARetraction: If i, j are not order preserving with j after i the identity
    """
    if not check_retraction(i, j):
        raise NotARetraction("j after i is not the identity on A or a map is not order preserving")
    if not g.carrier.same_as(i.target):
        raise CarrierMismatch("g is not defined on the target of i")
    g = g.materialize()
    return FnMapping.extensional(i.source, {a: j.image(g(i(a))) for a in i.source.elements})


def chain_union_mapping(mappings: Sequence[FnMapping]) -> FnMapping:
    """Union of mappings on an increasing chain of carriers, each extending the previous one.

    :raises NotAChain: If a carrier is not a substructure of the next
    :raises NotExtending: If a mapping changes a value of its predecessor
    """
    mappings = [m.materialize() for m in mappings]
    if not mappings:
        raise NotAChain("Empty chain")
    for ix, (small, large) in enumerate(zip(mappings, mappings[1:])):
        if not small.carrier.is_substructure_of(large.carrier):
            raise NotAChain(f"Carrier {ix} is not contained in carrier {ix + 1}")
        if not large.extends(small):
            raise NotExtending(f"Mapping {ix + 1} does not extend mapping {ix}")

    top = mappings[-1].carrier
    table = {
        a: frozenset().union(*(m(a) for m in mappings if a in m.carrier)) for a in top.elements
    }
    return FnMapping.extensional(top, table)


def quotient_push_mapping(
    structure: FiniteBooleanAlgebra, g: FnMapping, ideal: Iterable[Element]
) -> Tuple[FiniteBooleanAlgebra, FnMapping]:
    """Push g on B down to B/I: g'([x]) = {[y] : y in g(z), [z] = [x]}.

    :return: The quotient algebra and g'
    :raises NotAnIdeal: If ideal is not an ideal of B
    """
    if not structure.is_boolean_algebra:
        raise PreconditionFailed("Quotients need a Boolean algebra")
    if not g.carrier.same_as(structure):
        raise CarrierMismatch("g is not defined on B")
    quotient, project = structure.quotient(ideal)
    g = g.materialize()
    table = {r: set() for r in quotient.elements}
    for z in structure.elements:
        table[project(z)] |= project.image(g(z))
    logger.debug("Pushed a mapping on %d elements to a quotient of %d", len(structure), len(quotient))
    return quotient, FnMapping.extensional(quotient, table)


def quotient_lift_mapping(
    structure: FiniteBooleanAlgebra, ideal: Iterable[Element], f: FnMapping
) -> FnMapping:
    """Lift f on B/I up to B: f'(x) = {z : [z] in f([x])}.

    :raises NotAnIdeal: If ideal is not an ideal of B
    """
    if not structure.is_boolean_algebra:
        raise PreconditionFailed("Quotients need a Boolean algebra")
    quotient, project = structure.quotient(ideal)
    if not f.carrier.same_as(quotient):
        raise CarrierMismatch("f is not defined on the quotient")
    f = f.materialize()
    classes = {r: [] for r in quotient.elements}
    for z in structure.elements:
        classes[project(z)].append(z)
    table = {x: [z for r in f(project(x)) for z in classes[r]] for x in structure.elements}
    return FnMapping.extensional(structure, table)


def nested_carriers(structure: OrderedStructure, subsets: Sequence[Iterable[Element]]) -> List[OrderedStructure]:
    """Carriers for an increasing sequence of subsets.

    :raises NotAChain: If the subsets do not increase
    """
    subsets = [structure.check_subset(s) for s in subsets]
    for ix, (small, large) in enumerate(zip(subsets, subsets[1:])):
        if not small <= large:
            raise NotAChain(f"Subset {ix} is not contained in subset {ix + 1}")
    return [carrier_of(structure, s) for s in subsets]

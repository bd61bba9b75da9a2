# coding=UTF-8
"""k-substructures, projections and relative completeness.

A subset A of B is a k-substructure when every b in B has a cofinal subset of A below b and a coinitial subset of
A above b, each of size < k. The smallest such sets are the maximal elements of A below b and the minimal elements
of A above b, so a witness exists iff those are small enough.

A is relatively complete in B (k = 2) when every b has a lower projection (the largest element of A below b) and an
upper projection (the smallest element of A above b).
"""
import logging
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

from fnlab.helpers.errors import NotAChain, NotASubstructure, NotClosed, PreconditionFailed
from fnlab.helpers.type_helpers import Refutation
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily, passes
from fnlab.order.poset import Element, OrderedStructure, lower_cone, upper_cone

logger = logging.getLogger(__name__)


class SubstructureWitness(WitnessFamily):
    """Witness family whose sets are all smaller than k.

    :param ambient: B
    :param subset: A
    :param table: b -> (U(b), V(b))
    :param k: Strict size bound
    """

    def __init__(
        self,
        ambient: OrderedStructure,
        subset: Iterable[Element],
        table: Mapping[Element, Tuple[Iterable[Element], Iterable[Element]]],
        k: int,
    ):
        """Instantiate SubstructureWitness."""
        super().__init__(ambient, subset, table)
        self.k = k
        for b, (lower, upper) in self.table.items():
            assert lower is not None and upper is not None, "Substructure witnesses need both sides"
            assert len(lower) < k and len(upper) < k, f"Witness for {ambient.label(b)} is not below k={k}"

    def relax(self, k: int) -> "SubstructureWitness":
        """Same families under a larger bound."""
        assert k >= self.k, "Can only relax to a larger bound"
        return SubstructureWitness(self.ambient, self.subset, self.table, k)

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"SubstructureWitness(|A|={len(self.subset)}, |B|={len(self.ambient)}, k={self.k})"


WitnessOrRefutation = Union[SubstructureWitness, Refutation]


def k_substructure_witness(structure: OrderedStructure, subset: Iterable[Element], k: int) -> WitnessOrRefutation:
    """Canonical minimal witness that A is a k-substructure of B, or the first element refuting it.

    :param structure: B
    :param subset: A
    :param k: Strict size bound
    :raises NotASubstructure: If B is a Boolean algebra and A is not a subalgebra
    """
    subset = structure.check_subset(subset)
    if structure.is_boolean_algebra and not structure.is_subalgebra(subset):
        raise NotASubstructure("A is not closed under the Boolean operations")

    table = {}
    for b in structure.elements:
        lower = structure.maximal_elements(lower_cone(structure, subset, b))
        if len(lower) >= k:
            return Refutation(b, "lower", len(lower))
        upper = structure.minimal_elements(upper_cone(structure, subset, b))
        if len(upper) >= k:
            return Refutation(b, "upper", len(upper))
        table[b] = (lower, upper)
    return SubstructureWitness(structure, subset, table, k)


def is_k_substructure(structure: OrderedStructure, subset: Iterable[Element], k: int) -> bool:
    """k_substructure_witness as a predicate."""
    return isinstance(k_substructure_witness(structure, subset, k), SubstructureWitness)


def minimal_bound(structure: OrderedStructure, subset: Iterable[Element]) -> int:
    """Least k for which A is a k-substructure of B."""
    subset = structure.check_subset(subset)
    widest = 0
    for b in structure.elements:
        widest = max(
            widest,
            len(structure.maximal_elements(lower_cone(structure, subset, b))),
            len(structure.minimal_elements(upper_cone(structure, subset, b))),
        )
    return widest + 1


def ideal_generator_count(structure: OrderedStructure, subset: Iterable[Element], b: Element) -> int:
    """Number of elements generating A below b as an ideal (its maximal elements)."""
    return len(structure.maximal_elements(lower_cone(structure, subset, b)))


def lower_projection(structure: OrderedStructure, subset: Iterable[Element], b: Element) -> Optional[Element]:
    """Largest element of A below b, or None."""
    return structure.maximum(lower_cone(structure, subset, b))


def upper_projection(structure: OrderedStructure, subset: Iterable[Element], b: Element) -> Optional[Element]:
    """Smallest element of A above b, or None."""
    return structure.minimum(upper_cone(structure, subset, b))


def is_rel_complete(structure: OrderedStructure, subset: Iterable[Element]) -> bool:
    """Check that every b has both projections onto A."""
    subset = structure.check_subset(subset)
    return all(
        lower_projection(structure, subset, b) is not None and upper_projection(structure, subset, b) is not None
        for b in structure.elements
    )


def rel_complete_witness(structure: OrderedStructure, subset: Iterable[Element]) -> Optional[SubstructureWitness]:
    """Witness with U(b) = {p(b)} and V(b) = {q(b)} (bound 2), or None if a projection is missing."""
    subset = structure.check_subset(subset)
    table = {}
    for b in structure.elements:
        p, q = lower_projection(structure, subset, b), upper_projection(structure, subset, b)
        if p is None or q is None:
            return None
        table[b] = ({p}, {q})
    return SubstructureWitness(structure, subset, table, 2)


def closed_set_is_substructure(
    structure: OrderedStructure, g: FnMapping, closed: Iterable[Element], k: int
) -> SubstructureWitness:
    """Witness that a g-closed set C is a k-substructure: U(b) = g(b) & C below b, V(b) = g(b) & C above b.

    :param structure: B
    :param g: Admissible mapping on B with value sets smaller than k
    :param closed: C
    :param k: Bound
    :raises NotClosed: If g(c) leaves C for some c in C (or C is not a subalgebra of a Boolean B)
    :raises PreconditionFailed: If g fails the interpolation condition or has a value set of size >= k
    """
    closed = structure.check_subset(closed)
    g = g.materialize()
    if not g.is_closed(closed):
        raise NotClosed("C is not closed under g")
    if structure.is_boolean_algebra and not structure.is_subalgebra(closed):
        raise NotClosed("C is not closed under the Boolean operations")
    if g.max_size() >= k:
        raise PreconditionFailed(f"g has a value set of size {g.max_size()}, not below k={k}")
    if not passes(structure, g):
        raise PreconditionFailed("g does not satisfy the interpolation condition")

    table = {
        b: (g(b) & lower_cone(structure, closed, b), g(b) & upper_cone(structure, closed, b))
        for b in structure.elements
    }
    return SubstructureWitness(structure, closed, table, k)


def chain_union_bound(structure: OrderedStructure, chain: Sequence[SubstructureWitness]) -> SubstructureWitness:
    """Witness for the union of an increasing chain of k-substructures.

    The union of the families has sets smaller than m(k - 1) + 1 for a chain of length m. When B is a Boolean
    algebra and the union is relatively complete the result is tightened to the projection witness (bound 2).

    :raises NotAChain: If the subsets do not increase or belong to another ambient structure
    """
    if not chain:
        raise NotAChain("Empty chain")
    ks = {w.k for w in chain}
    assert len(ks) == 1, "Chain witnesses must share one bound"
    for ix, w in enumerate(chain):
        if not w.ambient.same_as(structure):
            raise NotAChain(f"Witness {ix} lives on another structure")
    for ix, (small, large) in enumerate(zip(chain, chain[1:])):
        if not small.subset <= large.subset:
            raise NotAChain(f"Subset {ix} is not contained in subset {ix + 1}")
    if len(chain) == 1:
        return chain[0]

    union = frozenset().union(*(w.subset for w in chain))
    if structure.is_boolean_algebra and structure.is_subalgebra(union):
        tight = rel_complete_witness(structure, union)
        if tight is not None:
            logger.debug("Union of %d subalgebras is relatively complete", len(chain))
            return tight

    k = ks.pop()
    table = {
        b: (
            frozenset().union(*(w.lower(b) for w in chain)),
            frozenset().union(*(w.upper(b) for w in chain)),
        )
        for b in structure.elements
    }
    return SubstructureWitness(structure, union, table, len(chain) * (k - 1) + 1)


def transitivity_bound(k: int) -> int:
    """Bound for A in C given A in B and B in C, both at bound k."""
    return (k - 1) ** 2 + 1


def compose_witnesses(inner: SubstructureWitness, outer: SubstructureWitness) -> SubstructureWitness:
    """Witness for A in C from a witness for A in B (ambient B) and one for B in C.

    U(c) collects the inner U(u) over u in the outer U(c), dually for V.
    """
    if frozenset(inner.ambient.elements) != outer.subset:
        raise PreconditionFailed("Inner witness must live on the subset of the outer one")
    k = max(inner.k, outer.k)
    table = {
        c: (
            frozenset().union(*(inner.lower(u) for u in outer.lower(c))),
            frozenset().union(*(inner.upper(v) for v in outer.upper(c))),
        )
        for c in outer.ambient.elements
    }
    return SubstructureWitness(outer.ambient, inner.subset, table, transitivity_bound(k))

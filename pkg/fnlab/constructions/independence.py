# coding=UTF-8
"""Extraction of an independent family from a list of elements of a Boolean algebra with an admissible mapping.

Stage 1 scans the list and keeps a_i when it lies outside the closure B_i of the elements kept so far (under the
mapping and the Boolean operations), recording I_i and J_i, the maximal elements of B_i below a_i and below !a_i.
Stage 2 buckets the kept elements by their pair (I_i, J_i). Stage 3 takes the largest bucket and checks it with the
elementary product oracle; if the oracle objects, members are added back one at a time and each one that breaks
independence is dropped.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Tuple

from fnlab.algebra.free import FreeBAElement
from fnlab.algebra.subalgebra import BooleanStructure, is_independent
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import EmptyResult, PreconditionFailed
from fnlab.mapping.fn_mapping import FnMapping
from fnlab.order.poset import lower_cone

logger = logging.getLogger(__name__)


class ExtractionStep(NamedTuple):
    """One element kept by the scan with its closure size and cofinal pair."""

    element: FreeBAElement
    closure_size: int
    lower: FrozenSet[FreeBAElement]
    upper: FrozenSet[FreeBAElement]


@dataclass
class IndependenceCertificate:
    """Record of an extraction.

    :param structure: The algebra
    :param steps: Kept elements in scan order
    :param family: The returned independent family
    :param dropped: Members of the chosen bucket removed by the fallback
    """

    structure: BooleanStructure
    steps: List[ExtractionStep]
    family: List[FreeBAElement]
    dropped: List[FreeBAElement] = field(default_factory=list)

    @property
    def used_fallback(self) -> bool:
        """True if the oracle rejected the bucket."""
        return bool(self.dropped)

    def to_lines(self) -> List[str]:
        """Certificate report lines; element lists are separated by "; "."""
        label = self.structure.label

        def joined(items: Iterable[FreeBAElement], ordered: bool = True) -> str:
            return "; ".join(map(label, items if ordered else self.structure.sort(items)))

        lines = [
            f"keep {label(s.element)} I: {joined(s.lower, False)} J: {joined(s.upper, False)}"
            for s in self.steps
        ]
        lines.append(f"family: {joined(self.family)}")
        if self.used_fallback:
            lines.append(f"oracle: fallback({joined(self.dropped)})")
        else:
            lines.append("oracle: pass")
        return lines


def _bucket(steps: List[ExtractionStep]) -> List[ExtractionStep]:
    buckets: Dict[Tuple[frozenset, frozenset], List[ExtractionStep]] = defaultdict(list)
    for step in steps:
        buckets[step.lower, step.upper].append(step)
    # ties go to the bucket opened first
    return max(buckets.values(), key=len)


def extract_independent(
    structure: BooleanStructure, f: FnMapping, elements: Iterable[FreeBAElement], limits: Limits = DEFAULT_LIMITS
) -> IndependenceCertificate:
    """Extract an independent subfamily of elements.

    :param structure: A finite Boolean algebra or a free algebra
    :param f: Admissible mapping on structure
    :param elements: Candidates, scanned in order
    :param limits: Caps for closures and the oracle
    :raises EmptyResult: If every candidate lies in the closure of the earlier ones
    """
    if not structure.is_boolean_algebra:
        raise PreconditionFailed("Extraction needs a Boolean carrier")
    if not f.carrier.same_as(structure):
        raise PreconditionFailed("The mapping is not defined on this algebra")
    elements = list(elements)
    structure.check_subset(elements)

    steps: List[ExtractionStep] = []
    kept: List[FreeBAElement] = []
    for a in elements:
        closed = f.closure(kept, algebraic=True, limits=limits)
        if a in closed:
            logger.debug("Skipping %s: inside a closure of %d elements", structure.label(a), len(closed))
            continue
        lower = structure.maximal_elements(lower_cone(structure, closed, a))
        upper = structure.maximal_elements(lower_cone(structure, closed, structure.complement(a)))
        steps.append(ExtractionStep(a, len(closed), lower, upper))
        kept.append(a)
    if not steps:
        raise EmptyResult("No candidate lies outside the closure of the earlier ones")

    bucket = [s.element for s in _bucket(steps)]
    top = structure.top
    family, dropped = bucket, []
    if not is_independent(bucket, limits, top):
        family = []
        for a in bucket:
            if is_independent(family + [a], limits, top):
                family.append(a)
            else:
                dropped.append(a)
        logger.info("Independence oracle rejected the bucket; dropped %d of %d", len(dropped), len(bucket))
    return IndependenceCertificate(structure, steps, family, dropped)

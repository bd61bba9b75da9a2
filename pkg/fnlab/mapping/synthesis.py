# coding=UTF-8
"""Search for a smallest mapping satisfying the interpolation condition on a finite structure.

Every admissible mapping contains a -> {a}, so the search starts there. It repeatedly takes the first pair a < b
(canonical row-major order) with no interpolant yet and branches over the elements c between a and b in canonical
order, adding c to both f(a) and f(b). Some admissible optimum always stays reachable, since it must contain such a c
for that pair. Partial mappings only grow, so a branch is cut as soon as its cost reaches the best found.

Only strict improvements replace the incumbent: among optimal mappings the one returned is the first in search order.
Value sets are held as integer bitmasks over element positions.
"""
import logging
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import SizeLimitExceeded
from fnlab.mapping.fn_mapping import FnMapping
from fnlab.order.poset import OrderedStructure

logger = logging.getLogger(__name__)

State = Tuple[int, ...]


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _max_size(state: State) -> int:
    return max((_popcount(m) for m in state), default=0)


def _total_size(state: State) -> int:
    return sum(_popcount(m) for m in state)


OBJECTIVES: Dict[str, Callable[[State], int]] = {"max-size": _max_size, "total-size": _total_size}


class BranchAndBound:
    """Depth first branch and bound over partial mappings.

    :param structure: Finite structure
    :param objective: Name in OBJECTIVES
    """

    def __init__(self, structure: OrderedStructure, objective: str):
        """Instantiate BranchAndBound."""
        if objective not in OBJECTIVES:
            raise ValueError(f"Objective must be one of {sorted(OBJECTIVES)}")
        self.structure = structure
        self.cost = OBJECTIVES[objective]
        leq = structure.le_matrix
        n = len(structure)
        self.pairs: List[Tuple[int, int]] = [(int(i), int(j)) for i, j in zip(*np.nonzero(leq)) if i != j]
        self.between: Dict[Tuple[int, int], List[int]] = {
            (i, j): [k for k in range(n) if leq[i, k] and leq[k, j]] for i, j in self.pairs
        }
        self.between_mask = {pair: sum(1 << k for k in ks) for pair, ks in self.between.items()}
        self.reset()

    def reset(self) -> None:
        """Forget the incumbent and the visited states."""
        self.best: Optional[State] = None
        self.best_cost: Optional[int] = None
        self.nodes = 0
        self._seen: Set[State] = set()

    def first_open_pair(self, state: State) -> Optional[Tuple[int, int]]:
        """First pair without an interpolant in the partial mapping."""
        for i, j in self.pairs:
            if not state[i] & state[j] & self.between_mask[(i, j)]:
                return i, j
        return None

    def search(self, state: State) -> None:
        """Explore the subtree below a partial mapping."""
        if state in self._seen:
            return
        self._seen.add(state)
        self.nodes += 1

        cost = self.cost(state)
        if self.best_cost is not None and cost >= self.best_cost:
            return

        pair = self.first_open_pair(state)
        if pair is None:
            self.best, self.best_cost = state, cost
            logger.debug("New incumbent with cost %d after %d nodes", cost, self.nodes)
            return

        i, j = pair
        for k in self.between[pair]:
            child = list(state)
            child[i] |= 1 << k
            child[j] |= 1 << k
            self.search(tuple(child))

    def run(self) -> State:
        """Run the search from the singleton mapping."""
        self.reset()
        self.search(tuple(1 << i for i in range(len(self.structure))))
        logger.debug("Search finished: cost %s, %d nodes", self.best_cost, self.nodes)
        return self.best


def synth_min_fn(
    structure: OrderedStructure, objective: str = "max-size", limits: Limits = DEFAULT_LIMITS
) -> FnMapping:
    """Smallest mapping satisfying the interpolation condition.

    :param structure: Finite structure S
    :param objective: max-size (largest value set) or total-size (sum of value set sizes)
    :param limits: limits.max_synth caps |S|
    :return: Extensional mapping with bound max-size + 1
    :raises SizeLimitExceeded: If |S| exceeds limits.max_synth
    """
    if len(structure) > limits.max_synth:
        raise SizeLimitExceeded(f"Synthesis is capped at {limits.max_synth} elements, got {len(structure)}")

    state = BranchAndBound(structure, objective).run()
    els = structure.elements
    table = {els[i]: [els[k] for k in range(len(els)) if state[i] >> k & 1] for i in range(len(els))}
    return FnMapping.extensional(structure, table, bound=_max_size(state) + 1)

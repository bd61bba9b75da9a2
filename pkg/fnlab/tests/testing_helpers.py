"""Helper module for running tests.

Reference oracles written straight from the definitions, independent of the library code paths they check.
"""
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from fnlab.order.poset import OrderedStructure, Poset


def star_by_definition(structure: OrderedStructure, table: Dict) -> Optional[Tuple]:
    """First pair a <= b (row-major canonical order) with no c in f(a) & f(b) between them, or None."""
    els = structure.elements
    for a in els:
        for b in els:
            if not structure.le(a, b):
                continue
            common = set(table[a]) & set(table[b])
            if not any(structure.le(a, c) and structure.le(c, b) for c in common):
                return a, b
    return None


def _down_sets(leq: np.ndarray) -> Iterator[frozenset]:
    n = len(leq)
    for size in range(n + 1):
        for members in combinations(range(n), size):
            members = frozenset(members)
            if all(i in members for j in members for i in range(n) if leq[i, j]):
                yield members


def _canonical(leq: np.ndarray) -> bytes:
    n = len(leq)
    return min(leq[np.ix_(p, p)].tobytes() for p in map(list, permutations(range(n))))


def posets_up_to(size: int) -> List[Poset]:
    """Every poset with at most size elements, one per isomorphism class (ids e0, e1, ...)."""
    levels = [[np.ones((0, 0), dtype=bool)]]
    for n in range(1, size + 1):
        seen = {}
        for leq in levels[-1]:
            downs = list(_down_sets(leq))
            ups = list(_down_sets(leq.T))
            for down in downs:
                for up in ups:
                    if down & up or not all(leq[i, j] for i in down for j in up):
                        continue
                    grown = np.zeros((n, n), dtype=bool)
                    grown[: n - 1, : n - 1] = leq
                    grown[list(down), n - 1] = True
                    grown[n - 1, list(up)] = True
                    grown[n - 1, n - 1] = True
                    seen.setdefault(_canonical(grown), grown)
        levels.append(list(seen.values()))
    return [Poset([f"e{ix}" for ix in range(len(leq))], leq) for level in levels[1:] for leq in level]


def random_table(rng: np.random.Generator, structure: OrderedStructure, p: float) -> Dict:
    """Every c lands in f(a) independently with probability p."""
    els = structure.elements
    return {a: {c for c in els if rng.random() < p} for a in els}


def exhaustive_min_max_size(structure: OrderedStructure) -> int:
    """Least m such that some mapping with |f(a)| <= m for all a passes, by backtracking over all candidates.

    A value c in f(a) only matters when a <= c or c <= a, so candidates are drawn from the elements comparable
    with a (a itself is forced by the pair a <= a).
    """
    els = structure.elements
    comparable = {a: [c for c in els if c != a and (structure.le(a, c) or structure.le(c, a))] for a in els}

    def consistent(table: Dict, a) -> bool:
        for b in table:
            for lo, hi in ((a, b), (b, a)):
                if structure.le(lo, hi):
                    common = table[lo] & table[hi]
                    if not any(structure.le(lo, c) and structure.le(c, hi) for c in common):
                        return False
        return True

    def search(ix: int, table: Dict, m: int) -> bool:
        if ix == len(els):
            return True
        a = els[ix]
        for size in range(min(m, len(comparable[a]) + 1)):
            for extra in combinations(comparable[a], size):
                table[a] = frozenset((a, *extra))
                if consistent(table, a) and search(ix + 1, table, m):
                    return True
                del table[a]
        return False

    for m in range(1, len(els) + 1):
        if search(0, {}, m):
            return m
    return len(els)


def pairs_below(rng: np.random.Generator, n: int, count: int) -> Iterable[Tuple[np.ndarray, np.ndarray]]:
    """Random truth table pairs a <= b of arity n."""
    for _ in range(count):
        b = rng.random(2**n) < 0.6
        a = b & (rng.random(2**n) < 0.5)
        yield a, b

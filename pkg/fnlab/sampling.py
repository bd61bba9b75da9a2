# coding=UTF-8
"""Seeded random instances: posets, subsets, free algebra elements, mappings and interval elements.

Every generator takes a numpy Generator; make_rng builds one from an explicit seed or from FNLAB_SEED.
"""
import os
from typing import List, Optional

import numpy as np

from fnlab.algebra.free import FreeBAElement
from fnlab.helpers.errors import FormatError
from fnlab.intervals.algebra import IntervalAlgebra
from fnlab.intervals.element import IntervalElement
from fnlab.mapping.fn_mapping import FnMapping, enumeration_mapping
from fnlab.order.poset import OrderedStructure, Poset, build_poset

SEED_VARIABLE = "FNLAB_SEED"


def get_seed(default: int = 0) -> int:
    """Seed from FNLAB_SEED, or default when unset.

    :raises FormatError: If the variable is not an integer
    """
    raw = os.environ.get(SEED_VARIABLE, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"{SEED_VARIABLE} must be an integer, got {raw!r}") from None


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Generator for an explicit seed or the environment seed."""
    return np.random.default_rng(get_seed() if seed is None else seed)


def element_ids(n: int, prefix: str = "p") -> List[str]:
    """Ids p00, p01, ... that sort in creation order."""
    width = len(str(max(n - 1, 0)))
    return [f"{prefix}{ix:0{width}d}" for ix in range(n)]


def random_poset(rng: np.random.Generator, n: int, density: float = 0.3, prefix: str = "p") -> Poset:
    """Poset from a random acyclic relation (edges go forward along a random permutation)."""
    assert 0 <= density <= 1, "density is a probability"
    ids = element_ids(n, prefix)
    order = rng.permutation(n)
    upper = np.triu(rng.random((n, n)) < density, k=1)
    pairs = [(ids[order[i]], ids[order[j]]) for i, j in zip(*np.nonzero(upper))]
    return build_poset(ids, pairs)


def random_subset(rng: np.random.Generator, structure: OrderedStructure, p: float = 0.5) -> frozenset:
    """Each element independently with probability p."""
    keep = rng.random(len(structure)) < p
    return frozenset(a for a, flag in zip(structure.elements, keep) if flag)


def random_element(rng: np.random.Generator, n: int) -> FreeBAElement:
    """Uniform element of Fr(n)."""
    return FreeBAElement(n, rng.integers(0, 2, size=2**n).astype(bool))


def random_enumeration_mapping(rng: np.random.Generator, structure: OrderedStructure) -> FnMapping:
    """Enumeration mapping of a random listing (always admissible)."""
    listing = [structure.elements[ix] for ix in rng.permutation(len(structure))]
    return enumeration_mapping(structure, listing)


def random_mapping(rng: np.random.Generator, structure: OrderedStructure, extra: float = 0.2) -> FnMapping:
    """Mapping with a in f(a) and every other element added with probability extra (rarely admissible)."""
    table = {}
    for a in structure.elements:
        table[a] = {a} | set(random_subset(rng, structure, extra))
    return FnMapping.extensional(structure, table)


def random_interval(rng: np.random.Generator, algebra: IntervalAlgebra) -> IntervalElement:
    """Uniform element of a grid interval algebra."""
    return algebra.element_of(int(rng.integers(0, len(algebra))))

# coding=UTF-8
"""Run a property check repeatedly over seeded random instances (parametric sweeps).

ParameterSet is a set of parameters swept together (i.e. (n0, d0), (n1, d1), ...)
ParameterSweep takes one or more parameter sets and generates every combination of their steps
SweepRunner runs a named check for every combination and a number of seeded repetitions, collecting a DataFrame

Checks are registered in CHECKS; each one draws an instance from the generator it is handed and returns one result
row. The instance for repetition i of a combination is drawn from a generator seeded by (seed, combination, i), so
rows are reproducible on their own.
"""
import logging
from collections import ChainMap
from functools import reduce
from itertools import product
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from fnlab.algebra.free import generators
from fnlab.algebra.subalgebra import FreeAlgebra, is_independent
from fnlab.constructions.engelking import EngelkingAlgebra
from fnlab.constructions.independence import extract_independent
from fnlab.game import GameConfig, closure_strategy, play, random_adversary
from fnlab.intervals.algebra import IntervalAlgebra
from fnlab.intervals.linear_order import LinearOrder
from fnlab.mapping.fn_mapping import interpolation_fn_mapping, passes, verify_star
from fnlab.mapping.synthesis import synth_min_fn
from fnlab.sampling import (
    element_ids,
    random_enumeration_mapping,
    random_interval,
    random_poset,
    random_subset,
)
from fnlab.substructure import SubstructureWitness, k_substructure_witness, minimal_bound

logger = logging.getLogger(__name__)

Check = Callable[[np.random.Generator, Dict], Dict]


class ParameterSet:
    """Set of parameters to be swept together.

    :param name: Name of the parameter set
    :param parameters: Dictionary of parameter name and list of its values (all of one length)
    """

    def __init__(self, name: str, **parameters: Sequence):
        """Create the ParameterSet."""
        self.validate(parameters)
        self._parameters = parameters
        self.name = name

    @property
    def parameters(self) -> Tuple[str, ...]:
        """Names of the parameters."""
        return tuple(self._parameters.keys())

    def __iter__(self) -> Iterator[Tuple[Dict[str, int], Dict]]:
        """Iterate over the steps.

        :returns: (iterator) Dict of name and current step and the (parameter name: value) dict
        """
        for ix in range(len(self)):
            yield {self.name: ix}, {name: self._parameters[name][ix] for name in self.parameters}

    def __len__(self) -> int:
        """Number of steps."""
        return len(self._parameters[self.parameters[0]])

    @staticmethod
    def validate(parameters: Dict[str, Sequence]) -> None:
        """Validate shape of parameters.

        :raises: Assertion error if parameters are empty or of different lengths
        """
        assert len(parameters) > 0, "At least one parameter must be specified"
        lengths = {len(values) for values in parameters.values()}
        assert len(lengths) == 1, "All parameters must have same number of values"
        assert lengths.pop() > 0, "At least one parameter value must be specified"


class ParameterSweep:
    """Generate all combinations of parameter sets.

    :param parameter_sets: An arbitrary (>0) number of parameter sets
    """

    def __init__(self, *parameter_sets: ParameterSet):
        """Instantiate ParameterSweep."""
        assert len(parameter_sets) > 0, "At least one parameter set must be specified"
        self.parameter_sets = parameter_sets

    def __len__(self) -> int:
        """len(ps1)*len(ps2)*..."""
        return reduce(lambda count, ps: count * len(ps), self.parameter_sets, 1)

    def __iter__(self) -> Iterator[Tuple[Dict, Dict[str, int]]]:
        """Iterate over the combinations.

        :returns: The parameter dict and the parameter level dict
        """
        for combination in product(*self.parameter_sets):
            levels, values = zip(*combination)
            yield dict(ChainMap(*values)), dict(ChainMap(*levels))


# checks


def check_enumeration(rng: np.random.Generator, p: Dict) -> Dict:
    """Enumeration mappings of random posets pass."""
    poset = random_poset(rng, p.get("n", 6), p.get("density", 0.3))
    return {"passed": verify_star(poset, random_enumeration_mapping(rng, poset)) is None}


def check_synth(rng: np.random.Generator, p: Dict) -> Dict:
    """The synthesized mapping passes and has the bound it claims."""
    poset = random_poset(rng, p.get("n", 6), p.get("density", 0.3))
    f = synth_min_fn(poset)
    return {"passed": passes(poset, f) and f.max_size() < f.bound, "max_size": f.max_size()}


def check_witness(rng: np.random.Generator, p: Dict) -> Dict:
    """k_substructure_witness agrees with the minimal bound."""
    poset = random_poset(rng, p.get("n", 6), p.get("density", 0.3))
    subset = random_subset(rng, poset, p.get("p", 0.5))
    k = p.get("k", 2)
    found = isinstance(k_substructure_witness(poset, subset, k), SubstructureWitness)
    return {"passed": found == (minimal_bound(poset, subset) <= k), "witness": found}


def check_game(rng: np.random.Generator, p: Dict) -> Dict:
    """The closure strategy with a synthesized mapping beats a random adversary."""
    poset = random_poset(rng, p.get("n", 6), p.get("density", 0.3))
    f = synth_min_fn(poset)
    cfg = GameConfig(poset, p.get("rounds", 3), len(poset) + 1, f.bound)
    transcript = play(cfg, random_adversary(int(rng.integers(2**31)), p.get("size", 1)), closure_strategy(f))
    return {"passed": transcript.won, "union": len(transcript.union)}


def check_independent(rng: np.random.Generator, p: Dict) -> Dict:
    """Extraction on shuffled generators of Fr(n) returns an independent family."""
    n = p.get("n", 4)
    order = rng.permutation(n)
    gens = generators(n)
    certificate = extract_independent(FreeAlgebra(n), interpolation_fn_mapping(n), [gens[ix] for ix in order])
    return {
        "passed": bool(is_independent(certificate.family)),
        "family": len(certificate.family),
        "fallback": certificate.used_fallback,
    }


def check_engelking(rng: np.random.Generator, p: Dict) -> Dict:
    """Members of the Engelking algebra are closed under the operations."""
    algebra = EngelkingAlgebra(p.get("m", 6))
    failures = algebra.sample_closure(p.get("samples", 50), int(rng.integers(2**31)))
    return {"passed": not failures}


def check_intalg_laws(rng: np.random.Generator, p: Dict) -> Dict:
    """De Morgan and absorption on a grid interval algebra."""
    algebra = IntervalAlgebra(LinearOrder.finite(element_ids(p.get("n", 5), "x")))
    a, b = random_interval(rng, algebra), random_interval(rng, algebra)
    return {"passed": ~(a | b) == (~a & ~b) and (a | (a & b)) == a}


CHECKS: Dict[str, Check] = {
    "enumeration": check_enumeration,
    "synth": check_synth,
    "witness": check_witness,
    "game": check_game,
    "independent": check_independent,
    "engelking": check_engelking,
    "intalg-laws": check_intalg_laws,
}


class SweepRunner:
    """Run a check for every combination of a sweep and a number of repetitions.

    :param check: Name in CHECKS
    :param parameter_sweep: Parametric sweep to run
    :param repeats: Instances per combination
    :param seed: Base seed
    """

    def __init__(self, check: str, parameter_sweep: ParameterSweep, repeats: int = 10, seed: int = 0):
        """Initialize SweepRunner without running it."""
        assert check in CHECKS, f"Unknown check {check}; choose from {sorted(CHECKS)}"
        assert repeats >= 1, "At least one repetition"
        self.check = check
        self.parameters = parameter_sweep
        self.repeats = repeats
        self.seed = seed

    def run(self, progress: bool = True) -> pd.DataFrame:
        """Iterate over the sweep and collect one row per instance."""
        rows: List[Dict] = []
        steps = [(ix, p, level, r) for ix, (p, level) in enumerate(self.parameters) for r in range(self.repeats)]
        for combination, p, level, repeat in tqdm(steps, disable=not progress):
            rows.append(self.run_step(combination, p, level, repeat))
        frame = pd.DataFrame(rows)
        logger.info("Sweep %s: %d of %d instances passed", self.check, int(frame["passed"].sum()), len(frame))
        return frame

    def run_step(self, combination: int, p: Dict, level: Dict[str, int], repeat: int) -> Dict:
        """Run the check on one instance.

        :param combination: Index of the parameter combination
        :param p: Parameter values
        :param level: Map of parameter set and which step it is at
        :param repeat: Repetition index
        """
        rng = np.random.default_rng([self.seed, combination, repeat])
        row = CHECKS[self.check](rng, p)
        return {**level, **p, "repeat": repeat, **row}

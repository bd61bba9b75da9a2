# coding=UTF-8
"""Finite horizon play of the substructure game on a finite structure.

Players I and II alternately choose sets X_0 <= Y_0 <= X_1 <= Y_1 <= ... of the structure, each of size below the
move bound s. After r rounds II wins iff the union (the last set played) is a k-substructure for the verdict bound k;
on a Boolean carrier the union must also be a subalgebra.

Strategies are pure: a simple strategy sees only the current accumulated set, a general one the whole history of
accumulated sets (from which the round number follows).
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import (
    ClosureExceedsBound,
    IllegalMove,
    NotALinearOrder,
    PreconditionFailed,
    UnknownElement,
)
from fnlab.helpers.type_helpers import Refutation
from fnlab.mapping.fn_mapping import FnMapping
from fnlab.order.poset import Element, OrderedStructure
from fnlab.substructure import SubstructureWitness, k_substructure_witness

logger = logging.getLogger(__name__)

PLAYERS = ("I", "II")
History = Tuple[frozenset, ...]


@dataclass(frozen=True)
class GameConfig:
    """Parameters of one play.

    :param structure: B
    :param rounds: Number of rounds r
    :param move_bound: Every set played has fewer than s elements
    :param verdict_bound: k for the final substructure check
    """

    structure: OrderedStructure
    rounds: int
    move_bound: int
    verdict_bound: int

    def __post_init__(self):
        """Validate the bounds."""
        assert self.rounds >= 1, "A play has at least one round"
        assert self.move_bound >= 2, "The move bound must be at least 2"
        assert self.verdict_bound >= 1, "The verdict bound must be positive"


@dataclass(frozen=True)
class Strategy:
    """A player's rule for choosing the next set.

    :param name: Display name
    :param mover: I or II
    :param kind: simple (move(cfg, current)) or general (move(cfg, history))
    :param move: The rule
    """

    name: str
    mover: str
    kind: str
    move: Callable[[GameConfig, object], Iterable[Element]] = field(repr=False)

    def __post_init__(self):
        """Validate mover and kind."""
        assert self.mover in PLAYERS, "mover must be I or II"
        assert self.kind in ("simple", "general"), "kind must be simple or general"

    def __call__(self, cfg: GameConfig, history: History) -> frozenset:
        """Next set given the history of accumulated sets."""
        if self.kind == "simple":
            return frozenset(self.move(cfg, history[-1] if history else frozenset()))
        return frozenset(self.move(cfg, history))


class GameMove(NamedTuple):
    """One half move: the set a player chose."""

    round_index: int
    player: str
    accumulated: frozenset


Verdict = Union[SubstructureWitness, Refutation]


@dataclass
class GameTranscript:
    """Record of one play.

    :param config: The game played
    :param moves: Half moves in order
    :param union: The final accumulated set
    :param verdict: Witness that the union is a k-substructure, or the refutation
    """

    config: GameConfig
    moves: List[GameMove]
    union: frozenset
    verdict: Verdict

    @property
    def won(self) -> bool:
        """II wins iff the verdict is a witness."""
        return isinstance(self.verdict, SubstructureWitness)

    def history(self) -> History:
        """The accumulated sets in order."""
        return tuple(m.accumulated for m in self.moves)

    def to_frame(self) -> pd.DataFrame:
        """One row per half move with the labels of the accumulated set."""
        structure = self.config.structure
        return pd.DataFrame(
            {
                "round": [m.round_index for m in self.moves],
                "player": [m.player for m in self.moves],
                "size": [len(m.accumulated) for m in self.moves],
                "set": [" ".join(structure.labels(m.accumulated)) for m in self.moves],
            }
        )


def verdict_for(structure: OrderedStructure, union: Iterable[Element], k: int) -> Verdict:
    """Verdict on a final union: a non-subalgebra of a Boolean carrier loses outright."""
    union = structure.check_subset(union)
    if structure.is_boolean_algebra and not structure.is_subalgebra(union):
        return Refutation(None, "closure", len(union))
    return k_substructure_witness(structure, union, k)


def _legal(cfg: GameConfig, previous: frozenset, chosen: frozenset, player: str, round_index: int) -> frozenset:
    try:
        chosen = cfg.structure.check_subset(chosen)
    except UnknownElement as err:
        raise IllegalMove(str(err), player, round_index) from None
    if not previous <= chosen:
        raise IllegalMove(f"Player {player} dropped elements in round {round_index}", player, round_index)
    if len(chosen) >= cfg.move_bound:
        raise IllegalMove(
            f"Player {player} played {len(chosen)} elements, not below s={cfg.move_bound}", player, round_index
        )
    return chosen


def play(cfg: GameConfig, first: Strategy, second: Strategy) -> GameTranscript:
    """Alternate the two strategies for cfg.rounds rounds and judge the union.

    :param cfg: Game parameters
    :param first: Strategy of player I
    :param second: Strategy of player II
    :raises PreconditionFailed: If a strategy belongs to the wrong player
    :raises IllegalMove: If a strategy breaks the chain condition or the move bound
    """
    if first.mover != "I" or second.mover != "II":
        raise PreconditionFailed("Strategies must be given for player I then player II")

    moves: List[GameMove] = []
    history: History = ()
    current = frozenset()
    for round_index in range(cfg.rounds):
        for player, strategy in (("I", first), ("II", second)):
            chosen = _legal(cfg, current, strategy(cfg, history), player, round_index)
            moves.append(GameMove(round_index, player, chosen))
            history = history + (chosen,)
            current = chosen

    verdict = verdict_for(cfg.structure, current, cfg.verdict_bound)
    logger.debug("Play of %d rounds ended with %d elements, verdict %s", cfg.rounds, len(current), verdict)
    return GameTranscript(cfg, moves, current, verdict)


# strategies for II


def closure_strategy(f: FnMapping, limits: Limits = DEFAULT_LIMITS) -> Strategy:
    """II answers with the closure of X under f (and the Boolean operations on a Boolean carrier).

    :raises ClosureExceedsBound: During play, when a closure has s or more elements
    """

    def move(cfg: GameConfig, current: frozenset) -> frozenset:
        if not f.carrier.same_as(cfg.structure):
            raise PreconditionFailed("The mapping is not defined on the game structure")
        closed = f.closure(current, algebraic=cfg.structure.is_boolean_algebra, limits=limits)
        if len(closed) >= cfg.move_bound:
            raise ClosureExceedsBound(f"Closure has {len(closed)} elements, not below s={cfg.move_bound}")
        return closed

    return Strategy(f"closure({f.name or f.kind})", "II", "simple", move)


def rc_closure_strategy(limits: Limits = DEFAULT_LIMITS) -> Strategy:
    """II answers with the subalgebra generated by X."""

    def move(cfg: GameConfig, current: frozenset) -> frozenset:
        if not cfg.structure.is_boolean_algebra:
            raise PreconditionFailed("rc-closure needs a Boolean carrier")
        return cfg.structure.boolean_closure(current, limits)

    return Strategy("rc-closure", "II", "simple", move)


def pass_strategy(mover: str) -> Strategy:
    """Repeat the current set."""
    return Strategy(f"pass-{mover}", mover, "simple", lambda cfg, current: current)


# strategies for I


def _chain_top(structure: OrderedStructure) -> Tuple[List[Element], Element]:
    if not structure.is_chain():
        raise NotALinearOrder("The chain adversary needs a linearly ordered carrier")
    top = structure.maximum(structure.elements)
    if top is None:
        raise NotALinearOrder("The carrier has no top element")
    ranks = structure.le_matrix.sum(axis=0)
    return [structure.elements[ix] for ix in np.argsort(ranks, kind="stable")], top


def chain_adversary() -> Strategy:
    """I adds the least element strictly above the supremum of the set below the top, if that is not the top."""

    def move(cfg: GameConfig, current: frozenset) -> frozenset:
        ordered, top = _chain_top(cfg.structure)
        below = [ix for ix, b in enumerate(ordered) if b in current and b != top]
        nxt = ordered[max(below) + 1] if below else ordered[0]
        if nxt == top or len(current) + 1 >= cfg.move_bound:
            return current
        return current | {nxt}

    return Strategy("chain", "I", "simple", move)


def greedy_adversary() -> Strategy:
    """I adds the first missing element in canonical order."""

    def move(cfg: GameConfig, current: frozenset) -> frozenset:
        if len(current) + 1 >= cfg.move_bound:
            return current
        missing = next((b for b in cfg.structure.elements if b not in current), None)
        return current if missing is None else current | {missing}

    return Strategy("greedy", "I", "simple", move)


def fixed_adversary(elements: Sequence[Element]) -> Strategy:
    """I adds elements[round] in each round, then passes once the list runs out."""
    elements = list(elements)

    def move(cfg: GameConfig, history: History) -> frozenset:
        current = history[-1] if history else frozenset()
        round_index = len(history) // 2
        if round_index >= len(elements) or len(current | {elements[round_index]}) >= cfg.move_bound:
            return current
        return current | {elements[round_index]}

    return Strategy("fixed", "I", "general", move)


def random_adversary(seed: int = 0, size: int = 1) -> Strategy:
    """I adds up to size random missing elements, drawn from a generator seeded by (seed, round)."""

    def move(cfg: GameConfig, history: History) -> frozenset:
        current = history[-1] if history else frozenset()
        rng = np.random.default_rng([seed, len(history) // 2])
        missing = [b for b in cfg.structure.elements if b not in current]
        count = min(size, len(missing), cfg.move_bound - 1 - len(current))
        if count <= 0:
            return current
        picks = rng.choice(len(missing), size=count, replace=False)
        return current | {missing[ix] for ix in picks}

    return Strategy(f"random({seed})", "I", "general", move)


STRATEGIES: Dict[str, Callable[..., Strategy]] = {
    "closure": closure_strategy,
    "rc-closure": rc_closure_strategy,
    "chain": chain_adversary,
    "greedy": greedy_adversary,
    "fixed": fixed_adversary,
    "random": random_adversary,
    "pass": pass_strategy,
}


def strategy_by_name(name: str, mover: str, mapping: Optional[FnMapping] = None, seed: int = 0) -> Strategy:
    """Build a bundled strategy from its registry name.

    :param name: Key of STRATEGIES
    :param mover: Player the strategy must belong to
    :param mapping: Mapping for the closure strategy
    :param seed: Seed for the random adversary
    """
    if name not in STRATEGIES:
        raise PreconditionFailed(f"Unknown strategy {name!r}; choose from {sorted(STRATEGIES)}")
    if name == "pass":
        return pass_strategy(mover)
    if name == "closure":
        if mapping is None:
            raise PreconditionFailed("The closure strategy needs a mapping")
        strategy = closure_strategy(mapping)
    elif name == "random":
        strategy = random_adversary(seed)
    elif name == "fixed":
        raise PreconditionFailed("The fixed adversary needs its elements; build it with fixed_adversary")
    else:
        strategy = STRATEGIES[name]()
    if strategy.mover != mover:
        raise PreconditionFailed(f"Strategy {name} is for player {strategy.mover}, not {mover}")
    return strategy

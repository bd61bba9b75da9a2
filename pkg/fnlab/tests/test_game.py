import pytest

from fnlab.game import (
    GameConfig,
    Strategy,
    chain_adversary,
    closure_strategy,
    fixed_adversary,
    greedy_adversary,
    pass_strategy,
    play,
    random_adversary,
    rc_closure_strategy,
    strategy_by_name,
)
from fnlab.helpers.errors import ClosureExceedsBound, IllegalMove, NotALinearOrder, PreconditionFailed
from fnlab.helpers.type_helpers import Refutation
from fnlab.mapping.fn_mapping import enumeration_mapping, full_mapping
from fnlab.order.poset import chain


@pytest.mark.quick
def test_closure_strategy_wins(chain3):
    cfg = GameConfig(chain3, rounds=2, move_bound=4, verdict_bound=2)
    transcript = play(cfg, greedy_adversary(), closure_strategy(enumeration_mapping(chain3, ["a", "b", "c"])))
    assert transcript.won
    assert transcript.union == {"a", "b"}
    assert [m.player for m in transcript.moves] == ["I", "II", "I", "II"]


@pytest.mark.quick
def test_passing_second_player_loses(pair_below):
    cfg = GameConfig(pair_below, rounds=2, move_bound=3, verdict_bound=2)
    transcript = play(cfg, greedy_adversary(), pass_strategy("II"))
    assert transcript.union == {"a", "a'"}
    assert transcript.verdict == Refutation("b", "lower", 2)
    assert not transcript.won


@pytest.mark.quick
def test_chain_adversary_climbs():
    five = chain("a", "b", "c", "d", "e")
    cfg = GameConfig(five, rounds=6, move_bound=10, verdict_bound=2)
    transcript = play(cfg, chain_adversary(), pass_strategy("II"))
    tops = [max(m.accumulated) for m in transcript.moves if m.player == "I"]
    assert tops[:4] == ["a", "b", "c", "d"]
    assert "e" not in transcript.union
    assert transcript.won


@pytest.mark.quick
def test_chain_adversary_needs_chain(pair_below):
    cfg = GameConfig(pair_below, rounds=1, move_bound=3, verdict_bound=2)
    with pytest.raises(NotALinearOrder):
        play(cfg, chain_adversary(), pass_strategy("II"))


@pytest.mark.quick
def test_illegal_moves(chain3):
    cfg = GameConfig(chain3, rounds=1, move_bound=3, verdict_bound=2)
    dropper = Strategy("drop", "II", "simple", lambda cfg, current: frozenset())
    with pytest.raises(IllegalMove) as err:
        play(cfg, greedy_adversary(), dropper)
    assert err.value.player == "II" and err.value.round_index == 0

    grabber = Strategy("grab", "II", "simple", lambda cfg, current: cfg.structure.elements)
    with pytest.raises(IllegalMove):
        play(cfg, greedy_adversary(), grabber)


@pytest.mark.quick
def test_closure_exceeding_bound(chain3):
    cfg = GameConfig(chain3, rounds=1, move_bound=3, verdict_bound=2)
    with pytest.raises(ClosureExceedsBound):
        play(cfg, greedy_adversary(), closure_strategy(full_mapping(chain3)))


@pytest.mark.quick
def test_rc_closure_on_algebra(fr2):
    cfg = GameConfig(fr2, rounds=2, move_bound=17, verdict_bound=2)
    transcript = play(cfg, greedy_adversary(), rc_closure_strategy())
    assert transcript.won
    assert fr2.is_subalgebra(transcript.union)
    assert len(transcript.moves[1].accumulated) == 2


@pytest.mark.quick
def test_rc_closure_needs_algebra(chain3):
    cfg = GameConfig(chain3, rounds=1, move_bound=3, verdict_bound=2)
    with pytest.raises(PreconditionFailed):
        play(cfg, greedy_adversary(), rc_closure_strategy())


@pytest.mark.quick
def test_empty_union(chain3, fr2):
    transcript = play(GameConfig(chain3, 1, 2, 2), pass_strategy("I"), pass_strategy("II"))
    assert transcript.union == frozenset() and transcript.won

    transcript = play(GameConfig(fr2, 1, 2, 2), pass_strategy("I"), pass_strategy("II"))
    assert transcript.verdict == Refutation(None, "closure", 0)
    assert not transcript.won


@pytest.mark.quick
def test_fixed_and_random_adversaries(chain3):
    cfg = GameConfig(chain3, rounds=3, move_bound=4, verdict_bound=2)
    transcript = play(cfg, fixed_adversary(["c"]), pass_strategy("II"))
    assert transcript.union == {"c"}

    first = play(cfg, random_adversary(seed=7), pass_strategy("II"))
    second = play(cfg, random_adversary(seed=7), pass_strategy("II"))
    assert first.history() == second.history()
    assert len(first.union) == 3


@pytest.mark.quick
def test_transcript_frame(chain3):
    cfg = GameConfig(chain3, rounds=2, move_bound=4, verdict_bound=2)
    frame = play(cfg, greedy_adversary(), pass_strategy("II")).to_frame()
    assert list(frame.columns) == ["round", "player", "size", "set"]
    assert frame["size"].tolist() == [1, 1, 2, 2]
    assert frame["set"].iloc[-1] == "a b"


@pytest.mark.quick
def test_strategy_registry(chain3):
    assert strategy_by_name("pass", "I").mover == "I"
    assert strategy_by_name("closure", "II", mapping=full_mapping(chain3)).mover == "II"
    with pytest.raises(PreconditionFailed):
        strategy_by_name("chain", "II")
    with pytest.raises(PreconditionFailed):
        strategy_by_name("closure", "II")
    with pytest.raises(PreconditionFailed):
        strategy_by_name("nope", "I")


@pytest.mark.quick
def test_players_in_order(chain3):
    cfg = GameConfig(chain3, rounds=1, move_bound=3, verdict_bound=2)
    with pytest.raises(PreconditionFailed):
        play(cfg, pass_strategy("II"), pass_strategy("I"))
    with pytest.raises(AssertionError):
        GameConfig(chain3, rounds=0, move_bound=3, verdict_bound=2)

import pytest

from fnlab.data.settings import Limits
from fnlab.helpers.errors import SizeLimitExceeded
from fnlab.mapping.fn_mapping import verify_star
from fnlab.mapping.synthesis import BranchAndBound, synth_min_fn
from fnlab.order.poset import antichain, chain
from fnlab.tests.testing_helpers import exhaustive_min_max_size, posets_up_to


@pytest.mark.quick
@pytest.mark.parametrize(
    "structure, expected",
    [
        [antichain("a", "b", "c", "d"), 1],
        [chain("a", "b", "c"), 2],
        [chain("a"), 1],
    ],
)
def test_synth_examples(structure, expected):
    f = synth_min_fn(structure)
    assert f.max_size() == expected
    assert f.bound == expected + 1
    assert verify_star(structure, f) is None


@pytest.mark.quick
def test_singleton_value(pair_below):
    assert synth_min_fn(chain("a"))("a") == {"a"}
    f = synth_min_fn(antichain("a", "b"))
    assert f("a") == {"a"} and f("b") == {"b"}


@pytest.mark.quick
def test_deterministic(pair_below):
    first = synth_min_fn(pair_below)
    second = synth_min_fn(pair_below)
    assert first.table == second.table


@pytest.mark.quick
def test_search_reruns_from_scratch(pair_below):
    searcher = BranchAndBound(pair_below, "max-size")
    best = searcher.run()
    nodes = searcher.nodes
    assert nodes > 0 and len(searcher._seen) == nodes

    assert searcher.run() == best
    assert searcher.nodes == nodes and len(searcher._seen) == nodes

    searcher.reset()
    assert searcher.best is None and searcher.nodes == 0 and not searcher._seen


@pytest.mark.quick
def test_total_size_objective(chain3):
    by_total = synth_min_fn(chain3, "total-size")
    by_max = synth_min_fn(chain3, "max-size")
    assert verify_star(chain3, by_total) is None
    assert by_total.total_size() <= by_max.total_size()


@pytest.mark.quick
def test_size_limit(chain3):
    with pytest.raises(SizeLimitExceeded):
        synth_min_fn(chain3, limits=Limits(max_synth=2))


@pytest.mark.quick
def test_oracle_small_chains():
    assert exhaustive_min_max_size(chain("a", "b", "c")) == 2
    assert exhaustive_min_max_size(antichain("a", "b", "c")) == 1


@pytest.mark.integration
def test_matches_exhaustive_optimum():
    for structure in posets_up_to(5):
        f = synth_min_fn(structure)
        assert verify_star(structure, f) is None
        assert f.max_size() == exhaustive_min_max_size(structure), structure.le_matrix

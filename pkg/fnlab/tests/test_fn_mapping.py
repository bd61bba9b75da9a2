import numpy as np
import pytest

from fnlab.algebra.expression import parse_element
from fnlab.algebra.free import FreeBAElement
from fnlab.helpers.errors import BoundExceeded, CarrierMismatch, NotAnEnumeration, WitnessInvalid
from fnlab.mapping.fn_mapping import (
    FnMapping,
    WitnessFamily,
    enumeration_mapping,
    full_mapping,
    interpolation_fn_mapping,
    singleton_mapping,
    verify_star,
)
from fnlab.order.poset import antichain, chain
from fnlab.sampling import random_mapping, random_poset
from fnlab.tests.testing_helpers import pairs_below, random_table, star_by_definition


@pytest.mark.quick
def test_verify_examples(chain2, chain3):
    assert verify_star(chain2, singleton_mapping(chain2)) == ("a", "b")
    assert verify_star(chain2, FnMapping.extensional(chain2, {"a": {"a", "b"}, "b": {"b"}})) is None
    assert verify_star(chain3, full_mapping(chain3)) is None


@pytest.mark.quick
def test_verify_carrier_mismatch(chain2, chain3):
    with pytest.raises(CarrierMismatch):
        verify_star(chain3, full_mapping(chain2))


@pytest.mark.quick
def test_bound_is_strict(chain2):
    with pytest.raises(BoundExceeded):
        FnMapping.extensional(chain2, {"a": {"a", "b"}, "b": {"b"}}, bound=2)
    assert FnMapping.extensional(chain2, {"a": {"a", "b"}, "b": {"b"}}, bound=3).bound_label() == "3"


@pytest.mark.quick
def test_missing_element(chain2):
    with pytest.raises(CarrierMismatch):
        FnMapping.extensional(chain2, {"a": {"a"}})


@pytest.mark.quick
def test_enumeration_examples(chain3):
    f = enumeration_mapping(chain3, ["a", "b", "c"])
    assert f("c") == {"a", "b", "c"} and f("a") == {"a"}
    one = chain("a")
    assert enumeration_mapping(one, ["a"])("a") == {"a"}
    assert enumeration_mapping(antichain("a", "b"), ["b", "a"])("a") == {"a", "b"}


@pytest.mark.quick
@pytest.mark.parametrize("order", [["a", "a", "b"], ["a", "b"], ["a", "b", "c", "d"]])
def test_enumeration_rejects(chain3, order):
    with pytest.raises(NotAnEnumeration):
        enumeration_mapping(chain3, order)


@pytest.mark.quick
def test_enumeration_always_passes(pair_below):
    for order in (["a", "a'", "b"], ["b", "a", "a'"], ["a'", "b", "a"]):
        assert verify_star(pair_below, enumeration_mapping(pair_below, order)) is None


@pytest.mark.quick
def test_matches_definition_on_random_tables(pair_below, chain3):
    rng = np.random.default_rng(1)
    for structure in (pair_below, chain3):
        for _ in range(100):
            table = random_table(rng, structure, 0.5)
            expected = star_by_definition(structure, table)
            got = verify_star(structure, FnMapping.extensional(structure, table))
            assert (None if got is None else tuple(got)) == expected


@pytest.mark.quick
def test_interpolation_mapping_witness():
    f = interpolation_fn_mapping(3)
    a, b = parse_element("x0 & x1", 3), parse_element("x0 | x2", 3)
    assert f.witness(a, b) == parse_element("x0", 3)
    assert f.contains(a, parse_element("x0", 3))
    assert not f.contains(a, parse_element("x2", 3))


@pytest.mark.quick
def test_interpolation_mapping_exhaustive_fr2():
    f = interpolation_fn_mapping(2)
    assert verify_star(f.carrier, f) is None
    assert verify_star(f.carrier, f.materialize()) is None


@pytest.mark.quick
def test_interpolation_mapping_sampled():
    f = interpolation_fn_mapping(8)
    rng = np.random.default_rng(2)
    pairs = [(FreeBAElement(8, a), FreeBAElement(8, b)) for a, b in pairs_below(rng, 8, 50)]
    assert verify_star(f.carrier, f, pairs) is None


@pytest.mark.quick
def test_closure(chain3):
    f = enumeration_mapping(chain3, ["b", "a", "c"])
    assert f.closure({"a"}) == {"a", "b"}
    assert f.is_closed({"a", "b"}) and not f.is_closed({"a"})


@pytest.mark.quick
def test_interpolation_closure_hook():
    f = interpolation_fn_mapping(3)
    closed = f.closure({parse_element("x0 & x1", 3)}, algebraic=True)
    assert len(closed) == 16
    assert parse_element("x2", 3) not in closed


@pytest.mark.quick
def test_pointwise_union_is_admissible(chain3):
    f = singleton_mapping(chain3).pointwise_union(enumeration_mapping(chain3, ["a", "b", "c"]))
    assert verify_star(chain3, f) is None


@pytest.mark.quick
def test_witness_family(chain3):
    family = WitnessFamily.canonical(chain3, {"a", "c"})
    assert family.lower("b") == {"a"}
    assert family.upper("b") == {"c"}
    assert family.width() == 1
    with pytest.raises(WitnessInvalid):
        WitnessFamily(chain3, {"a", "c"}, {b: (set(), None) for b in chain3.elements})


@pytest.mark.quick
def test_random_mappings_match_definition():
    rng = np.random.default_rng(4)
    for _ in range(30):
        structure = random_poset(rng, 6, density=0.4)
        f = random_mapping(rng, structure, extra=0.3)
        assert all(a in f(a) for a in structure.elements)
        got = verify_star(structure, f)
        assert (None if got is None else tuple(got)) == star_by_definition(structure, f.table)

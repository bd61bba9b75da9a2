from fractions import Fraction

import pytest

from fnlab.algebra.expression import parse_element
from fnlab.algebra.subalgebra import FiniteBooleanAlgebra, FreeAlgebra
from fnlab.game import GameConfig, greedy_adversary, pass_strategy, play
from fnlab.helpers.errors import CarrierMismatch, CycleError, FormatError, UnknownElement
from fnlab.helpers.type_helpers import Counterexample, Refutation
from fnlab.intervals.element import IntervalElement
from fnlab.intervals.linear_order import NEG_INF
from fnlab.io.load import (
    load_linear_order,
    load_mapping,
    load_structure,
    load_subset,
    parse_algebra,
    parse_interval,
    parse_items,
    parse_linear_order,
    parse_mapping,
    parse_order_map,
    parse_poset,
    parse_structure,
    parse_witness,
)
from fnlab.io.save import (
    format_counterexample,
    format_mapping,
    format_poset,
    format_refutation,
    format_transcript,
    format_witness,
    mapping_frame,
    to_tsv,
    witness_frame,
)
from fnlab.mapping.fn_mapping import WitnessFamily, enumeration_mapping, full_mapping
from fnlab.mapping.synthesis import synth_min_fn


@pytest.mark.quick
def test_parse_poset_with_comments(chain3):
    text = "# a chain\nposet\nelem c  # top\nelem a\nelem b\n\nle a b\nle b c\n"
    assert parse_poset(text).same_as(chain3)


@pytest.mark.quick
@pytest.mark.parametrize(
    "text, error",
    [
        ["elem a\n", FormatError],
        ["poset\nelem a\nge a a\n", FormatError],
        ["poset\nelem a b\n", FormatError],
        ["poset\nelem a\nelem b\nle a b\nle b a\n", CycleError],
        ["poset\nelem a\nle a z\n", UnknownElement],
    ],
)
def test_parse_poset_errors(text, error):
    with pytest.raises(error):
        parse_poset(text)


@pytest.mark.quick
def test_poset_format_roundtrip(pair_below):
    assert parse_poset(format_poset(pair_below)).same_as(pair_below)


@pytest.mark.quick
def test_parse_algebra():
    generated = parse_algebra("algebra n=2\ngen x0\n")
    assert isinstance(generated, FiniteBooleanAlgebra) and len(generated) == 4
    assert len(parse_algebra("algebra n=2")) == 16
    assert isinstance(parse_algebra("algebra n=5"), FreeAlgebra)
    with pytest.raises(FormatError):
        parse_algebra("algebra 2")


@pytest.mark.quick
def test_parse_linear_order(three_points):
    assert parse_linear_order("linord\nelem p\nelem q\nelem r\n") == three_points
    assert not parse_linear_order("linord rational").is_finite
    with pytest.raises(FormatError):
        parse_linear_order("linord reals")
    with pytest.raises(FormatError):
        parse_linear_order("linord\nelem p\nelem p\n")
    with pytest.raises(FormatError):
        parse_structure("linord rational")
    assert parse_structure("linord\nelem p\nelem q\n").le("p", "q")


@pytest.mark.quick
def test_builtins(chain3, three_points):
    assert load_structure("builtin:chain3").same_as(chain3)
    assert load_structure("builtin:CHAIN3").same_as(chain3)
    assert len(load_structure("builtin:fr3-x0")) == 16
    assert load_linear_order("builtin:three") == three_points
    with pytest.raises(FormatError):
        load_structure("builtin:nope")


@pytest.mark.quick
def test_load_from_files(write, chain3):
    structure = load_structure(write("c.pos", "poset\nelem a\nelem b\nelem c\nle a b\nle b c\n"))
    assert structure.same_as(chain3)
    assert load_subset(structure, write("a.sub", "a\nc\n")) == {"a", "c"}
    f = load_mapping(structure, write("f.map", format_mapping(full_mapping(chain3))))
    assert f("a") == {"a", "b", "c"}


@pytest.mark.quick
def test_mapping_roundtrip(chain3, fr1):
    f = enumeration_mapping(chain3, ["b", "c", "a"])
    assert parse_mapping(chain3, format_mapping(f)).table == f.table

    g = synth_min_fn(fr1)
    assert parse_mapping(fr1, format_mapping(g)).table == g.table


@pytest.mark.quick
def test_parse_mapping_values(chain2):
    f = parse_mapping(chain2, "fnmap k=3\nmap a : a b\nmap b : b\n")
    assert f.bound == 3 and f("a") == {"a", "b"}
    assert parse_mapping(chain2, "fnmap k=inf\nmap a : a\nmap b :\n")("b") == frozenset()


@pytest.mark.quick
@pytest.mark.parametrize(
    "text, error",
    [
        ["fnmap\nmap a : a\nmap b : b\n", FormatError],
        ["fnmap k=0\nmap a : a b\nmap b : b\n", FormatError],
        ["fnmap k=inf\nmap a : a\nmap a : b\nmap b : b\n", FormatError],
        ["fnmap k=inf\nmap a a\nmap b : b\n", FormatError],
        ["fnmap k=inf\nmap a : a\n", CarrierMismatch],
        ["fnmap k=inf\nmap a : z\nmap b : b\n", UnknownElement],
    ],
)
def test_parse_mapping_errors(chain2, text, error):
    with pytest.raises(error):
        parse_mapping(chain2, text)


@pytest.mark.quick
def test_named_mapping(fr2, chain3):
    f = load_mapping(fr2, "interpolation:n=2")
    assert f.kind == "intensional"
    with pytest.raises(FormatError):
        load_mapping(chain3, "interpolation:n=2")


@pytest.mark.quick
def test_boolean_items(fr2):
    items = parse_items(fr2, "x0 & x1, !x0 | x1 ,1")
    assert items == [parse_element("x0 & x1", 2), parse_element("!x0 | x1", 2), fr2.top]


@pytest.mark.quick
def test_parse_order_map(chain2, chain3):
    j = parse_order_map(chain3, chain2, "ordermap\nsend a -> a\nsend b -> a\nsend c -> b\n")
    assert j("b") == "a" and j.is_order_preserving()
    with pytest.raises(FormatError):
        parse_order_map(chain3, chain2, "ordermap\nsend a a\n")


@pytest.mark.quick
def test_witness_roundtrip(chain3):
    family = WitnessFamily.canonical(chain3, {"a", "c"})
    parsed = parse_witness(chain3, {"a", "c"}, format_witness(family))
    assert parsed.table == family.table

    lower_only = parse_witness(chain3, {"a", "c"}, "wit a U: a\nwit b U: a\nwit c U: c\n")
    assert lower_only.has_lower and not lower_only.has_upper


@pytest.mark.quick
def test_parse_interval(rationals, three_points):
    assert parse_interval(rationals, "[0,1) [2,3)").endpoints() == {0, 1, 2, 3}
    assert parse_interval(rationals, "[-inf, 1/2)") == IntervalElement.interval(rationals, NEG_INF, Fraction(1, 2))
    assert parse_interval(rationals, "0").is_empty()
    assert parse_interval(three_points, "[p,r)").contains("q")
    for bad in ("[0,1", "[2,1)", "[0,1) junk"):
        with pytest.raises(FormatError):
            parse_interval(rationals, bad)


@pytest.mark.quick
def test_reports(chain2, pair_below):
    assert format_counterexample(chain2, Counterexample("a", "b")) == "counterexample: a b"
    assert format_refutation(chain2, Refutation("b", "lower", 2)) == "refutation: b lower 2"
    assert format_refutation(chain2, Refutation(None, "closure", 3)) == "refutation: - closure 3"

    transcript = play(GameConfig(pair_below, 2, 3, 2), greedy_adversary(), pass_strategy("II"))
    lines = format_transcript(transcript).splitlines()
    assert lines[:4] == ["I: a", "II: a", "I: a a'", "II: a a'"]
    assert lines[-2:] == ["verdict: lose", "refutation: b lower 2"]


@pytest.mark.quick
def test_tsv_is_stable(chain3):
    f = enumeration_mapping(chain3, ["a", "b", "c"])
    text = to_tsv(mapping_frame(f))
    assert text == to_tsv(mapping_frame(f))
    assert text.splitlines()[0] == "element\tvalues\tsize"
    assert text.splitlines()[3] == "c\ta b c\t3"

    frame = witness_frame(WitnessFamily.canonical(chain3, {"a", "c"}))
    assert frame["U"].tolist() == ["a", "a", "c"]

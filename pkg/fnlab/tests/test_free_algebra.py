import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fnlab.algebra.expression import parse_element
from fnlab.algebra.free import (
    FreeBAElement,
    all_elements,
    complement,
    craig_interpolant,
    join,
    leq,
    meet,
    support,
    weakest_interpolant,
)
from fnlab.data.settings import Limits
from fnlab.helpers.errors import ArityMismatch, FNLabError, FormatError, NotBelow, SizeLimitExceeded
from fnlab.tests.testing_helpers import pairs_below


def el(text, n=3):
    return parse_element(text, n)


tables = st.lists(st.booleans(), min_size=8, max_size=8).map(lambda bits: FreeBAElement(3, bits))
ALL3 = all_elements(3)


@pytest.mark.quick
def test_ops_examples():
    x0 = el("x0")
    assert meet(x0, complement(x0)).is_zero()
    assert join(x0, FreeBAElement.zero(3)) == x0
    assert leq(el("x0 & x1"), x0)


@pytest.mark.quick
def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        meet(el("x0", 2), el("x0", 3))


@pytest.mark.quick
@pytest.mark.parametrize(
    "text, expected",
    [
        ["x0 & x1", {0, 1}],
        ["x0 & !x0", set()],
        ["x0 | x1 & !x1", {0}],
    ],
)
def test_support(text, expected):
    assert support(el(text)) == expected


@pytest.mark.quick
def test_craig_examples():
    assert craig_interpolant(el("x0 & x1"), el("x0 | x2")) == el("x0")
    b = el("x1 ^ x2")
    assert craig_interpolant(b, b) == b
    assert craig_interpolant(FreeBAElement.zero(3), b).is_zero()
    with pytest.raises(NotBelow):
        craig_interpolant(el("x0"), el("x1"))


@pytest.mark.quick
def test_interpolants_sandwich():
    rng = np.random.default_rng(0)
    for a, b in pairs_below(rng, 5, 200):
        a, b = FreeBAElement(5, a), FreeBAElement(5, b)
        shared = a.support() & b.support()
        for c in (craig_interpolant(a, b), weakest_interpolant(a, b)):
            assert a <= c <= b
            assert c.support() <= shared
        assert craig_interpolant(a, b) <= weakest_interpolant(a, b)


@pytest.mark.quick
@given(tables, tables)
def test_interpolants_bound_every_interpolant(a, b):
    b = a | b
    shared = a.support() & b.support()
    strongest, weakest = craig_interpolant(a, b), weakest_interpolant(a, b)
    for c in ALL3:
        if a <= c <= b and c.support() <= shared:
            assert strongest <= c <= weakest


@pytest.mark.quick
def test_canonical_order():
    elements = all_elements(2)
    assert elements[0].is_zero() and elements[-1].is_one()
    assert [e.code for e in elements] == list(range(16))


@pytest.mark.quick
def test_generator_table():
    assert list(FreeBAElement.generator(2, 1).table) == [False, False, True, True]
    assert FreeBAElement.generator(3, 2).evaluate([0, 0, 1])


@pytest.mark.quick
def test_raw_form():
    x = el("x0 ^ x2")
    assert parse_element(x.to_raw()) == x
    assert parse_element("n=2;tt:8") == el("x0 & x1", 2)


@pytest.mark.quick
@pytest.mark.parametrize("text", ["x0 &", "(x0", "x0 + x1", "y1"])
def test_parse_errors(text):
    with pytest.raises(FormatError):
        parse_element(text, 3)


@pytest.mark.quick
def test_precedence():
    assert el("!x0 & x1 | x2") == (~el("x0") & el("x1")) | el("x2")
    assert el("x0 | x1 ^ x2") == el("x0") | (el("x1") ^ el("x2"))
    assert el("x0 ^ x1 & x2") == el("x0") ^ (el("x1") & el("x2"))


@pytest.mark.quick
@given(tables)
def test_expression_reparses(b):
    assert parse_element(b.to_expression(), 3) == b


@pytest.mark.quick
@given(tables, tables)
def test_de_morgan(a, b):
    assert ~(a | b) == ~a & ~b
    assert ~(a & b) == ~a | ~b
    assert (a <= b) == ((a & b) == a)
    assert a ^ b == (a - b) | (b - a)


@pytest.mark.quick
@given(tables)
def test_projections(b):
    for k in range(3):
        assert b.exists([k]) == b.cofactor(k, True) | b.cofactor(k, False)
        assert b.forall([k]) <= b <= b.exists([k])
        assert not b.exists([k]).depends_on(k)


@pytest.mark.quick
@pytest.mark.parametrize(
    "build",
    [
        lambda: FreeBAElement.generator(30, 0),
        lambda: FreeBAElement.zero(25),
        lambda: FreeBAElement.one(-1),
        lambda: FreeBAElement.from_code(40, 1),
        lambda: FreeBAElement(25, [True]),
        lambda: el("x0").extend(25),
        lambda: parse_element("x29"),
        lambda: parse_element("x0", 30),
        lambda: parse_element("n=30;tt:1"),
    ],
)
def test_arity_cap(build):
    with pytest.raises(SizeLimitExceeded):
        build()


@pytest.mark.quick
def test_arity_limits():
    assert issubclass(SizeLimitExceeded, FNLabError)
    Limits(max_arity=3).check_arity(3)
    with pytest.raises(SizeLimitExceeded):
        Limits(max_arity=3).check_arity(4)

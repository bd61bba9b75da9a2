import matplotlib
import pytest

from fnlab.algebra.subalgebra import FiniteBooleanAlgebra
from fnlab.intervals.linear_order import LinearOrder
from fnlab.order.poset import antichain, build_poset, chain

matplotlib.use("Agg")


@pytest.fixture(scope="session")
def chain2():
    return chain("a", "b")


@pytest.fixture(scope="session")
def chain3():
    return chain("a", "b", "c")


@pytest.fixture(scope="session")
def pair_below():
    """Poset {a, a' < b} with a, a' incomparable."""
    return build_poset(["a", "a'", "b"], [("a", "b"), ("a'", "b")])


@pytest.fixture(scope="session")
def antichain2():
    return antichain("a", "b")


@pytest.fixture(scope="session")
def fr1():
    """The 4-element Boolean algebra Fr(1)."""
    return FiniteBooleanAlgebra.full(1)


@pytest.fixture(scope="session")
def fr2():
    """The 16-element Boolean algebra Fr(2)."""
    return FiniteBooleanAlgebra.full(2)


@pytest.fixture(scope="session")
def three_points():
    return LinearOrder.finite(["p", "q", "r"])


@pytest.fixture(scope="session")
def rationals():
    return LinearOrder.rational()


@pytest.fixture
def write(tmp_path):
    """Write text to a file under tmp_path and return its path."""

    def _write(name: str, text: str):
        pth = tmp_path / name
        pth.write_text(text)
        return pth

    return _write

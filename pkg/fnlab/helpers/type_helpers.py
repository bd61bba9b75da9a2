from typing import FrozenSet, Hashable, NamedTuple, Optional, Tuple

Element = Hashable
Subset = FrozenSet[Hashable]


class Counterexample(NamedTuple):
    """A pair a <= b with no c in f(a) & f(b) between them."""

    a: Element
    b: Element


class Refutation(NamedTuple):
    """Why a subset is not a k-substructure.

    element is the first ambient element (canonical order) whose cone is too wide
    cone is "lower" or "upper"; size is the number of maximal (minimal) elements of that cone
    """

    element: Element
    cone: str
    size: int


class IndependenceResult(NamedTuple):
    """Outcome of an independence test with the first zero pattern when dependent."""

    independent: bool
    witness: Optional[Tuple[int, ...]]

    def __bool__(self) -> bool:
        """Truthiness follows the verdict."""
        return self.independent

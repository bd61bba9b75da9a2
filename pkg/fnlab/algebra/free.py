# coding=UTF-8
"""Elements of the finite free Boolean algebra Fr(n) stored as truth tables.

Bit i of the table is the value of the element under the assignment whose k-th generator is (i >> k) & 1, so the
generator x_k is the table (arange(2^n) >> k) & 1. The table is a read-only numpy bool array.

Elements are ordered canonically by their integer code (the table read as a little endian bit string); the zero
element comes first and the unit last.
"""
import logging
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterable, List, Sequence, Union

import numpy as np

from fnlab.data.settings import DEFAULT_LIMITS
from fnlab.helpers.errors import ArityMismatch, FormatError, NotBelow

logger = logging.getLogger(__name__)

# supports up to this size are printed as a disjunctive normal form, wider ones as a raw table
DNF_SUPPORT = 5


@lru_cache(maxsize=None)
def assignment_indices(n: int) -> np.ndarray:
    """Get the read-only index vector 0..2^n-1 shared by all elements of arity n."""
    idx = np.arange(2**n, dtype=np.int64)
    idx.flags.writeable = False
    return idx


def _freeze(table: np.ndarray) -> np.ndarray:
    table = np.ascontiguousarray(table, dtype=bool)
    table.flags.writeable = False
    return table


class FreeBAElement:
    """Boolean function of n generators.

    :param arity: Number of generators n
    :param table: 2^n truth values
    """

    __slots__ = ("arity", "table", "_code")

    def __init__(self, arity: int, table: Union[np.ndarray, Sequence[bool]]):
        """Instantiate FreeBAElement (table copied and frozen)."""
        DEFAULT_LIMITS.check_arity(arity)
        table = np.array(table, dtype=bool).reshape(-1)
        if table.size != 2**arity:
            raise ValueError(f"Truth table of arity {arity} must have {2**arity} entries, got {table.size}")
        self.arity = arity
        self.table = _freeze(table)
        self._code = None

    @classmethod
    def _wrap(cls, arity: int, table: np.ndarray) -> "FreeBAElement":
        """Build without re-validating a freshly computed table."""
        obj = cls.__new__(cls)
        obj.arity = arity
        obj.table = _freeze(table)
        obj._code = None
        return obj

    # constructors

    @classmethod
    def zero(cls, n: int) -> "FreeBAElement":
        """Get the least element of Fr(n)."""
        DEFAULT_LIMITS.check_arity(n)
        return cls._wrap(n, np.zeros(2**n, dtype=bool))

    @classmethod
    def one(cls, n: int) -> "FreeBAElement":
        """Get the greatest element of Fr(n)."""
        DEFAULT_LIMITS.check_arity(n)
        return cls._wrap(n, np.ones(2**n, dtype=bool))

    @classmethod
    def generator(cls, n: int, k: int) -> "FreeBAElement":
        """Get the generator x_k of Fr(n)."""
        DEFAULT_LIMITS.check_arity(n)
        if not 0 <= k < n:
            raise ArityMismatch(f"Generator x{k} does not exist in Fr({n})")
        return cls._wrap(n, ((assignment_indices(n) >> k) & 1).astype(bool))

    @classmethod
    def from_code(cls, n: int, code: int) -> "FreeBAElement":
        """Build an element from its integer code."""
        DEFAULT_LIMITS.check_arity(n)
        if not 0 <= code < 2 ** (2**n):
            raise FormatError(f"Code {code:x} does not fit a table of arity {n}")
        raw = np.frombuffer(code.to_bytes(max(1, 2**n // 8 + 1), "little"), dtype=np.uint8)
        return cls._wrap(n, np.unpackbits(raw, bitorder="little")[: 2**n].astype(bool))

    @classmethod
    def from_hex(cls, n: int, digits: str) -> "FreeBAElement":
        """Build an element from the hex form of its code (the tt:<hex> format)."""
        try:
            code = int(digits, 16)
        except ValueError:
            raise FormatError(f"Bad truth table hex {digits!r}") from None
        return cls.from_code(n, code)

    # representation

    @property
    def code(self) -> int:
        """Integer code of the table (bit i = value at assignment i)."""
        if self._code is None:
            packed = np.packbits(self.table, bitorder="little")
            self._code = int.from_bytes(packed.tobytes(), "little")
        return self._code

    def to_hex(self) -> str:
        """Hex digits of the code, zero padded to the table width."""
        width = max(1, (2**self.arity + 3) // 4)
        return f"{self.code:0{width}x}"

    def to_raw(self) -> str:
        """Raw text form n=<k>;tt:<hex>."""
        return f"n={self.arity};tt:{self.to_hex()}"

    def to_expression(self) -> str:
        """Printable form accepted by the expression parser.

        Constants and literals print as themselves, narrow supports as a disjunctive normal form over the support
        and wide supports as the raw table.
        """
        if self.is_zero():
            return "0"
        if self.is_one():
            return "1"
        variables = sorted(self.support())
        if len(variables) > DNF_SUPPORT:
            return self.to_raw()

        terms = []
        for values in product((1, 0), repeat=len(variables)):
            index = sum(1 << k for k, v in zip(variables, values) if v)
            if self.table[index]:
                terms.append("&".join(f"x{k}" if v else f"!x{k}" for k, v in zip(variables, values)))
        if len(terms) == 2 ** len(variables) - 1:
            # complement is a single minterm
            missing = next(
                values
                for values in product((1, 0), repeat=len(variables))
                if not self.table[sum(1 << k for k, v in zip(variables, values) if v)]
            )
            negated = [f"!x{k}" if v else f"x{k}" for k, v in zip(variables, missing)]
            return " | ".join(negated)
        return " | ".join(terms)

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"FreeBAElement({self.to_expression()!r}, n={self.arity})"

    def __str__(self) -> str:
        """Printable form."""
        return self.to_expression()

    # comparisons

    def _check(self, other: "FreeBAElement") -> None:
        if not isinstance(other, FreeBAElement):
            raise TypeError(f"Cannot combine FreeBAElement with {type(other).__name__}")
        if other.arity != self.arity:
            raise ArityMismatch(f"Arity {self.arity} does not match arity {other.arity}")

    def __eq__(self, other) -> bool:
        """Equal tables of equal arity."""
        if not isinstance(other, FreeBAElement):
            return NotImplemented
        return self.arity == other.arity and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        """Hash on arity and table bytes."""
        return hash((self.arity, self.table.tobytes()))

    def __le__(self, other: "FreeBAElement") -> bool:
        """Order of the algebra: a <= b iff a & b == a."""
        self._check(other)
        return not bool(np.any(self.table & ~other.table))

    def __lt__(self, other: "FreeBAElement") -> bool:
        """Strict order."""
        return self <= other and self != other

    def __ge__(self, other: "FreeBAElement") -> bool:
        """Reverse order."""
        return other <= self

    def __gt__(self, other: "FreeBAElement") -> bool:
        """Reverse strict order."""
        return other < self

    # operations

    def __and__(self, other: "FreeBAElement") -> "FreeBAElement":
        """Meet."""
        self._check(other)
        return FreeBAElement._wrap(self.arity, self.table & other.table)

    def __or__(self, other: "FreeBAElement") -> "FreeBAElement":
        """Join."""
        self._check(other)
        return FreeBAElement._wrap(self.arity, self.table | other.table)

    def __xor__(self, other: "FreeBAElement") -> "FreeBAElement":
        """Symmetric difference."""
        self._check(other)
        return FreeBAElement._wrap(self.arity, self.table ^ other.table)

    def __invert__(self) -> "FreeBAElement":
        """Complement."""
        return FreeBAElement._wrap(self.arity, ~self.table)

    def __sub__(self, other: "FreeBAElement") -> "FreeBAElement":
        """Relative complement a & !b."""
        self._check(other)
        return FreeBAElement._wrap(self.arity, self.table & ~other.table)

    def is_zero(self) -> bool:
        """Check for the least element."""
        return not bool(self.table.any())

    def is_one(self) -> bool:
        """Check for the greatest element."""
        return bool(self.table.all())

    def count(self) -> int:
        """Number of satisfying assignments."""
        return int(self.table.sum())

    def evaluate(self, assignment: Union[int, Sequence[bool]]) -> bool:
        """Value under an assignment (an index or a sequence of n truth values)."""
        if not isinstance(assignment, (int, np.integer)):
            if len(assignment) != self.arity:
                raise ArityMismatch(f"Assignment of length {len(assignment)} for arity {self.arity}")
            assignment = sum(1 << k for k, v in enumerate(assignment) if v)
        return bool(self.table[assignment])

    def _flipped(self, k: int) -> np.ndarray:
        """Table with generator k negated in every assignment."""
        idx = assignment_indices(self.arity)
        return self.table[idx ^ (1 << k)]

    def depends_on(self, k: int) -> bool:
        """Check if flipping x_k changes the value for some assignment."""
        return bool(np.any(self.table != self._flipped(k)))

    def support(self) -> FrozenSet[int]:
        """Generators the element essentially depends on."""
        return frozenset(k for k in range(self.arity) if self.depends_on(k))

    def cofactor(self, k: int, value: bool) -> "FreeBAElement":
        """Substitute x_k := value (result still has arity n and does not depend on x_k)."""
        bit = 1 << k
        idx = assignment_indices(self.arity)
        fixed = (idx | bit) if value else (idx & ~bit)
        return FreeBAElement._wrap(self.arity, self.table[fixed])

    def exists(self, variables: Iterable[int]) -> "FreeBAElement":
        """Existential projection: join over all values of the given generators."""
        table = self.table.copy()
        idx = assignment_indices(self.arity)
        for k in variables:
            table = table | table[idx ^ (1 << k)]
        return FreeBAElement._wrap(self.arity, table)

    def forall(self, variables: Iterable[int]) -> "FreeBAElement":
        """Universal projection: meet over all values of the given generators."""
        table = self.table.copy()
        idx = assignment_indices(self.arity)
        for k in variables:
            table = table & table[idx ^ (1 << k)]
        return FreeBAElement._wrap(self.arity, table)

    def extend(self, arity: int) -> "FreeBAElement":
        """Embed into Fr(arity) for arity >= n (new generators are inessential)."""
        assert arity >= self.arity, "Can only extend to a larger arity"
        DEFAULT_LIMITS.check_arity(arity)
        idx = assignment_indices(arity) & (2**self.arity - 1)
        return FreeBAElement._wrap(arity, self.table[idx])

    def substitute(self, arity: int, images: Sequence["FreeBAElement"]) -> "FreeBAElement":
        """Evaluate the element with x_k replaced by images[k] (all of the given arity).

        This is the homomorphism Fr(n) -> Fr(arity) sending generators to images.
        """
        if len(images) != self.arity:
            raise ArityMismatch(f"Need {self.arity} images, got {len(images)}")
        for img in images:
            if img.arity != arity:
                raise ArityMismatch(f"Image of arity {img.arity} does not match {arity}")
        position = np.zeros(2**arity, dtype=np.int64)
        for k, img in enumerate(images):
            position |= img.table.astype(np.int64) << k
        return FreeBAElement._wrap(arity, self.table[position])


# functional forms of the operations


def meet(a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
    """Meet of two elements of equal arity."""
    return a & b


def join(a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
    """Join of two elements of equal arity."""
    return a | b


def complement(a: FreeBAElement) -> FreeBAElement:
    """Complement of an element."""
    return ~a


def leq(a: FreeBAElement, b: FreeBAElement) -> bool:
    """Test a <= b."""
    return a <= b


def support(b: FreeBAElement) -> FrozenSet[int]:
    """Essential support of b."""
    return b.support()


def craig_interpolant(a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
    """Strongest interpolant of a <= b: the existential projection of a onto the shared support.

    :param a: Lower element
    :param b: Upper element
    :return: c with a <= c <= b and support(c) within support(a) & support(b)
    :raises NotBelow: If a is not below b
    """
    if not a <= b:
        raise NotBelow(f"{a} is not below {b}")
    shared = a.support() & b.support()
    return a.exists(k for k in range(a.arity) if k not in shared)


def weakest_interpolant(a: FreeBAElement, b: FreeBAElement) -> FreeBAElement:
    """Weakest interpolant of a <= b: the universal projection of b onto the shared support."""
    if not a <= b:
        raise NotBelow(f"{a} is not below {b}")
    shared = a.support() & b.support()
    return b.forall(k for k in range(b.arity) if k not in shared)


def generators(n: int) -> List[FreeBAElement]:
    """All generators x_0..x_{n-1} of Fr(n)."""
    return [FreeBAElement.generator(n, k) for k in range(n)]


def all_elements(n: int) -> List[FreeBAElement]:
    """Every element of Fr(n) in canonical order (only sensible for n <= 4)."""
    assert n <= 4, "Fr(n) has 2^(2^n) elements; enumerate only n <= 4"
    return [FreeBAElement.from_code(n, code) for code in range(2 ** (2**n))]


def product_of(n: int, literals: Iterable[int]) -> FreeBAElement:
    """Meet of literals: k >= 0 means x_k, ~k (negative) means !x_k."""
    result = FreeBAElement.one(n)
    for lit in literals:
        result = result & (FreeBAElement.generator(n, lit) if lit >= 0 else ~FreeBAElement.generator(n, ~lit))
    return result

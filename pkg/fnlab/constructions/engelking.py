# coding=UTF-8
"""The subalgebra B of Fr(m) of elements on which the two "constant" ultrafilters agree.

U1 is the ultrafilter generated by the generators and U2 the one generated by their complements. An element with
finite support lies in U1 iff the product of its support generators is below it, which happens iff it evaluates to 1
at the all-true assignment; dually for U2 and the all-false assignment. So

    b in B  <=>  b(1, ..., 1) == b(0, ..., 0)

B is a subalgebra of Fr(m) with no admissible mapping. engelking_witness_check verifies the finite content of that
argument for a choice of Y, Y' and the generators x0, x1, x2, y1, y2: with b = x0 | x1 | !x2, the elements of B
generated by Y' and x0 that lie below b are strictly below x0, while d = x0 & y1 & !y2 is in B, below b and
incomparable with each of those elements except 0.
"""
import logging
from dataclasses import dataclass, field
from functools import partial
from typing import List, Sequence, Tuple

import numpy as np

from fnlab.algebra.free import FreeBAElement, product_of
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import ArityMismatch, PreconditionFailed, SizeLimitExceeded

logger = logging.getLogger(__name__)


def engelking_member(m: int, b: FreeBAElement) -> bool:
    """Check b in B by evaluating at the two constant assignments.

    :raises ArityMismatch: If b is not an element of Fr(m)
    """
    if b.arity != m:
        raise ArityMismatch(f"Element of arity {b.arity} is not in Fr({m})")
    return bool(b.table[0] == b.table[-1])


def in_generated_ultrafilter(b: FreeBAElement, negated: bool = False) -> bool:
    """Filter definition of membership in U1 (U2 when negated): the product of the support literals is below b."""
    literals = [~k if negated else k for k in sorted(b.support())]
    return product_of(b.arity, literals) <= b


class EngelkingAlgebra:
    """Membership predicate of B inside Fr(m).

    :param m: Number of generators
    """

    def __init__(self, m: int, limits: Limits = DEFAULT_LIMITS):
        """Instantiate EngelkingAlgebra."""
        limits.check_arity(m)
        self.m = m
        self.limits = limits

    def __contains__(self, b) -> bool:
        """Membership of an element of Fr(m)."""
        return isinstance(b, FreeBAElement) and b.arity == self.m and engelking_member(self.m, b)

    def member_by_filters(self, b: FreeBAElement) -> bool:
        """Membership through the ultrafilter definitions."""
        return in_generated_ultrafilter(b) == in_generated_ultrafilter(b, negated=True)

    def random_element(self, rng: np.random.Generator, inside: bool = True) -> FreeBAElement:
        """Uniform element of B (or of Fr(m) when inside is False)."""
        table = rng.integers(0, 2, size=2**self.m).astype(bool)
        if inside:
            table[-1] = table[0]
        return FreeBAElement(self.m, table)

    def sample_closure(self, samples: int = 1000, seed: int = 0) -> List[Tuple[str, FreeBAElement, FreeBAElement]]:
        """Check closure under the operations on random pairs of members.

        :return: Failures as (operation, a, b); empty when all samples stay in B
        """
        rng = np.random.default_rng(seed)
        failures = []
        if FreeBAElement.zero(self.m) not in self or FreeBAElement.one(self.m) not in self:
            failures.append(("constants", FreeBAElement.zero(self.m), FreeBAElement.one(self.m)))
        for _ in range(samples):
            a, b = self.random_element(rng), self.random_element(rng)
            for name, value in (("meet", a & b), ("join", a | b), ("complement", ~a)):
                if value not in self:
                    failures.append((name, a, b))
        logger.debug("Closure sample of %d pairs in B of Fr(%d): %d failures", samples, self.m, len(failures))
        return failures

    def __repr__(self) -> str:
        """Get helpful representation."""
        return f"EngelkingAlgebra(m={self.m})"


@dataclass
class EngelkingReport:
    """Outcome of engelking_witness_check.

    :param b_in_algebra: x0 | x1 | !x2 lies in B
    :param below_x0: Every candidate c in B below b is strictly below x0
    :param d_below: d = x0 & y1 & !y2 lies in B and below b
    :param incomparable: d is incomparable with every nonzero candidate c below b
    :param mode: exhaustive or sampled enumeration of the candidates
    :param candidates: Number of candidates examined
    :param qualifying: Number of candidates in B and below b
    :param failures: Expressions of the candidates that broke a check
    """

    b_in_algebra: bool
    below_x0: bool
    d_below: bool
    incomparable: bool
    mode: str
    candidates: int
    qualifying: int
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """All four checks hold."""
        return self.b_in_algebra and self.below_x0 and self.d_below and self.incomparable

    def to_lines(self) -> List[str]:
        """Report lines."""
        flag = {True: "pass", False: "fail"}
        lines = [
            f"b-in-B: {flag[self.b_in_algebra]}",
            f"below-x0: {flag[self.below_x0]}",
            f"d-below-b: {flag[self.d_below]}",
            f"incomparable: {flag[self.incomparable]}",
            f"mode: {self.mode} candidates={self.candidates} qualifying={self.qualifying}",
        ]
        lines.extend(f"failure: {expr}" for expr in self.failures)
        return lines


def _check_parameters(m, ys, y_sub, x0, x1, x2, y1, y2, limits) -> None:
    everything = [*ys, *y_sub, x0, x1, x2, y1, y2]
    if any(not 0 <= k < m for k in everything):
        raise PreconditionFailed(f"Generator index outside Fr({m})")
    if x0 not in ys:
        raise PreconditionFailed("x0 must belong to Y")
    if x1 == x2 or x1 in ys or x2 in ys:
        raise PreconditionFailed("x1 and x2 must be distinct generators outside Y")
    if not set(y_sub) <= set(ys):
        raise PreconditionFailed("Y' must be a subset of Y")
    if y1 == y2 or {y1, y2} & (set(y_sub) | {x0}) or not {y1, y2} <= set(ys):
        raise PreconditionFailed("y1 and y2 must be distinct elements of Y outside Y' and x0")
    if len(set(y_sub)) > limits.max_engelking_support:
        raise SizeLimitExceeded(f"|Y'| = {len(set(y_sub))} exceeds {limits.max_engelking_support}")


def _candidate_tables(s: int, upper: np.ndarray, limits: Limits, seed: int) -> Tuple[np.ndarray, str]:
    """Truth tables over s generators: all of them, or samples of B below upper plus all literal products."""
    if s <= limits.max_exhaustive_support:
        codes = np.arange(2 ** (2**s), dtype=np.uint64)
        bits = (codes[:, None] >> np.arange(2**s, dtype=np.uint64)[None, :]) & np.uint64(1)
        return bits.astype(bool), "exhaustive"

    rng = np.random.default_rng(seed)
    random = rng.integers(0, 2, size=(limits.engelking_samples, 2**s)).astype(bool) & upper[None, :]
    agree = random[:, 0] & random[:, -1]
    random[:, 0] = agree
    random[:, -1] = agree
    products = []
    for signs in np.ndindex(*(3,) * s):
        literals = [k if sign == 1 else ~k for k, sign in enumerate(signs) if sign]
        products.append(product_of(s, literals).table)
    return np.vstack([random, np.array(products)]), "sampled"


def engelking_witness_check(
    m: int,
    ys: Sequence[int],
    y_sub: Sequence[int],
    x0: int,
    x1: int,
    x2: int,
    y1: int,
    y2: int,
    limits: Limits = DEFAULT_LIMITS,
    seed: int = 0,
) -> EngelkingReport:
    """Verify that no element of B generated by Y' and x0 can interpolate below b = x0 | x1 | !x2.

    Candidates c range over B restricted to the generators Y' + {x0}. They are computed in the free algebra on the
    involved generators (Y' + {x0} first, then x1, x2, y1, y2), which embeds into Fr(m) preserving order.

    :param m: Number of generators of Fr(m)
    :param ys: Y (generator indices)
    :param y_sub: Y', a subset of Y
    :param x0: Generator in Y
    :param x1: Generator outside Y
    :param x2: Generator outside Y, distinct from x1
    :param y1: Generator in Y outside Y' and x0
    :param y2: Generator in Y outside Y' and x0, distinct from y1
    :param limits: max_engelking_support caps Y', max_exhaustive_support decides the mode
    :param seed: Seed of the sampled mode
    :raises PreconditionFailed: If the generators break the disjointness constraints
    """
    _check_parameters(m, ys, y_sub, x0, x1, x2, y1, y2, limits)
    limits.check_arity(m)

    b = FreeBAElement.generator(m, x0) | FreeBAElement.generator(m, x1) | ~FreeBAElement.generator(m, x2)
    d = product_of(m, [x0, y1, ~y2])
    b_in_algebra = engelking_member(m, b)
    d_below = engelking_member(m, d) and d <= b

    local = sorted(set(y_sub) | {x0})
    s = len(local)
    arity = s + 4
    extras = list(range(s, arity))
    lx0 = local.index(x0)
    gen = partial(FreeBAElement.generator, arity)
    b_local = gen(lx0) | gen(s) | ~gen(s + 1)
    d_local = gen(lx0) & gen(s + 2) & ~gen(s + 3)

    # tables over the first s generators of elements not depending on the extras
    width = 2**s
    b_all = b_local.forall(extras).table[:width]
    d_all = d_local.forall(extras).table[:width]
    d_any = d_local.exists(extras).table[:width]
    x0_table = gen(lx0).table[:width]

    tables, mode = _candidate_tables(s, b_all, limits, seed)
    member = tables[:, 0] == tables[:, -1]
    below_b = ~np.any(tables & ~b_all, axis=1)
    qualifying = tables[member & below_b]

    strictly_below = ~np.any(qualifying & ~x0_table, axis=1) & np.any(qualifying != x0_table, axis=1)
    nonzero = np.any(qualifying, axis=1)
    c_le_d = ~np.any(qualifying & ~d_all, axis=1)
    d_le_c = ~np.any(d_any & ~qualifying, axis=1)
    comparable = nonzero & (c_le_d | d_le_c)

    images = [FreeBAElement.generator(m, k) for k in local]
    failures = [
        FreeBAElement(s, row).substitute(m, images).to_expression() for row in qualifying[~strictly_below | comparable]
    ]
    report = EngelkingReport(
        b_in_algebra=b_in_algebra,
        below_x0=bool(np.all(strictly_below)),
        d_below=bool(d_below),
        incomparable=not bool(np.any(comparable)),
        mode=mode,
        candidates=len(tables),
        qualifying=len(qualifying),
        failures=failures,
    )
    logger.info("Engelking check on Fr(%d), |Y'|=%d: %s", m, len(set(y_sub)), "pass" if report.passed else "fail")
    return report

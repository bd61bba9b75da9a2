# coding=UTF-8
"""Parse the line-oriented text formats.

Every format ignores blank lines and everything after a ``#``. Element lists are whitespace-separated ids on posets and
comma-separated expressions on Boolean carriers (expressions may contain spaces).

    poset       poset / elem <id> / le <id> <id>
    algebra     algebra n=<k> / gen <expr>          (no gen lines: all of Fr(k))
    linord      linord [rational] / elem <id>
    subset      element list
    mapping     fnmap k=<bound|inf> / map <elem> : <element list>
    ordermap    ordermap / send <elem> -> <elem>
    witness     wit <elem> U: <element list> V: <element list>
    interval    [a,b) [c,d) ...
"""
import logging
import re
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from fnlab.algebra.expression import parse_element
from fnlab.algebra.subalgebra import FiniteBooleanAlgebra, FreeAlgebra
from fnlab.data.settings import DEFAULT_LIMITS, Limits
from fnlab.helpers.errors import FormatError
from fnlab.intervals.element import IntervalElement
from fnlab.intervals.linear_order import LinearOrder
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily, interpolation_fn_mapping
from fnlab.order.poset import Element, OrderedStructure, OrderMap, Poset, build_poset

logger = logging.getLogger(__name__)

PathOrText = Union[Path, str]

_INTERPOLATION = re.compile(r"^interpolation:n=(?P<n>\d+)$")
_INTERVAL = re.compile(r"\[\s*(?P<lo>[^,\[\)]+?)\s*,\s*(?P<hi>[^,\[\)]+?)\s*\)")
_WITNESS = re.compile(r"^(?P<b>.*?)\s*(?:U:(?P<u>.*?))?\s*(?:V:(?P<v>.*))?$")
BUILTIN = "builtin:"


def content_lines(text: str) -> List[Tuple[int, str]]:
    """Numbered non-empty lines with comments removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def read_text(source: PathOrText) -> str:
    """Contents of a file."""
    return Path(source).read_text()


def _header(lines: List[Tuple[int, str]], keyword: str) -> Tuple[str, List[Tuple[int, str]]]:
    if not lines or lines[0][1].split()[0] != keyword:
        raise FormatError(f"Expected a {keyword!r} header")
    return lines[0][1][len(keyword) :].strip(), lines[1:]


def _keyword(number: int, line: str, *expected: str) -> Tuple[str, str]:
    keyword, _, rest = line.partition(" ")
    if keyword not in expected:
        raise FormatError(f"Line {number}: expected {' or '.join(expected)}, got {keyword!r}")
    return keyword, rest.strip()


# structures


def parse_poset(text: str) -> Poset:
    """Parse the poset format (le lines may list covering pairs only)."""
    _, body = _header(content_lines(text), "poset")
    elements, pairs = [], []
    for number, line in body:
        keyword, rest = _keyword(number, line, "elem", "le")
        fields = rest.split()
        if keyword == "elem":
            if len(fields) != 1:
                raise FormatError(f"Line {number}: elem takes one id")
            elements.append(fields[0])
        else:
            if len(fields) != 2:
                raise FormatError(f"Line {number}: le takes two ids")
            pairs.append((fields[0], fields[1]))
    return build_poset(elements, pairs)


def parse_algebra(text: str, limits: Limits = DEFAULT_LIMITS) -> Union[FiniteBooleanAlgebra, FreeAlgebra]:
    """Parse the algebra descriptor: the subalgebra of Fr(k) generated by the gen lines."""
    header, body = _header(content_lines(text), "algebra")
    match = re.fullmatch(r"n=(\d+)", header)
    if match is None:
        raise FormatError(f"Algebra header needs n=<k>, got {header!r}")
    n = int(match.group(1))
    gens = []
    for number, line in body:
        _, rest = _keyword(number, line, "gen")
        gens.append(parse_element(rest, n))
    if gens:
        return FiniteBooleanAlgebra.generated(n, gens, limits=limits)
    if 2 ** (2**n) <= limits.max_subalgebra:
        return FiniteBooleanAlgebra.full(n, limits)
    return FreeAlgebra(n, limits)


def parse_linear_order(text: str) -> LinearOrder:
    """Parse linord (finite, elem lines from least to greatest) or linord rational."""
    header, body = _header(content_lines(text), "linord")
    if header == "rational":
        if body:
            raise FormatError("A rational order lists no points")
        return LinearOrder.rational()
    if header:
        raise FormatError(f"Unknown linear order kind {header!r}")
    points = []
    for number, line in body:
        _, rest = _keyword(number, line, "elem")
        points.append(rest)
    return LinearOrder.finite(points)


def parse_structure(text: str, limits: Limits = DEFAULT_LIMITS) -> OrderedStructure:
    """Poset or algebra, by header (a finite linord becomes its chain)."""
    lines = content_lines(text)
    if not lines:
        raise FormatError("Empty structure file")
    keyword = lines[0][1].split()[0]
    if keyword == "poset":
        return parse_poset(text)
    if keyword == "algebra":
        return parse_algebra(text, limits)
    if keyword == "linord":
        order = parse_linear_order(text)
        if not order.is_finite:
            raise FormatError("The rationals are not a finite structure")
        return order.to_poset()
    raise FormatError(f"Unknown structure header {keyword!r}")


def load_structure(source: PathOrText, limits: Limits = DEFAULT_LIMITS) -> OrderedStructure:
    """Structure from a file, or from the registry for builtin:<name>."""
    source = str(source)
    if source.startswith(BUILTIN):
        from fnlab.data.structure_registry import STRUCTURE_REGISTRY

        try:
            return STRUCTURE_REGISTRY[source[len(BUILTIN) :]]
        except KeyError:
            raise FormatError(f"No built-in structure {source[len(BUILTIN):]!r}") from None
    return parse_structure(read_text(source), limits)


def load_linear_order(source: PathOrText) -> LinearOrder:
    """Linear order from a file, or from the registry for builtin:<name>."""
    source = str(source)
    if source.startswith(BUILTIN):
        from fnlab.data.structure_registry import ORDER_REGISTRY

        try:
            return ORDER_REGISTRY[source[len(BUILTIN) :]]
        except KeyError:
            raise FormatError(f"No built-in linear order {source[len(BUILTIN):]!r}") from None
    return parse_linear_order(read_text(source))


# elements of a structure


def parse_item(structure: OrderedStructure, text: str) -> Element:
    """One element: an id, or an expression on a Boolean carrier."""
    text = text.strip()
    if isinstance(structure, (FiniteBooleanAlgebra, FreeAlgebra)):
        item = parse_element(text, structure.arity)
    else:
        item = text
    structure.index(item)
    return item


def split_items(structure: OrderedStructure, text: str) -> List[str]:
    """Split an element list for the given carrier."""
    if structure.is_boolean_algebra:
        return [part.strip() for part in text.split(",") if part.strip()]
    return text.split()


def parse_items(structure: OrderedStructure, text: str) -> List[Element]:
    """Parse an element list."""
    return [parse_item(structure, part) for part in split_items(structure, text)]


def parse_subset(structure: OrderedStructure, text: str) -> frozenset:
    """Parse a subset file (lines are concatenated)."""
    joiner = ", " if structure.is_boolean_algebra else " "
    return frozenset(parse_items(structure, joiner.join(line for _, line in content_lines(text))))


def load_subset(structure: OrderedStructure, source: PathOrText) -> frozenset:
    """Subset from a file."""
    return parse_subset(structure, read_text(source))


# mappings


def parse_mapping(structure: OrderedStructure, text: str) -> FnMapping:
    """Parse an extensional mapping; a missing map line is an error of the mapping itself."""
    header, body = _header(content_lines(text), "fnmap")
    match = re.fullmatch(r"k=(\d+|inf)", header)
    if match is None:
        raise FormatError(f"Mapping header needs k=<bound|inf>, got {header!r}")
    bound = None if match.group(1) == "inf" else int(match.group(1))
    if bound == 0:
        raise FormatError("Mapping bound k must be at least 1")
    table = {}
    for number, line in body:
        _, rest = _keyword(number, line, "map")
        key, sep, values = rest.partition(":")
        if not sep:
            raise FormatError(f"Line {number}: map needs '<elem> : <elements>'")
        a = parse_item(structure, key)
        if a in table:
            raise FormatError(f"Line {number}: {key.strip()} is mapped twice")
        table[a] = parse_items(structure, values)
    return FnMapping.extensional(structure, table, bound)


def mapping_by_name(name: str, limits: Limits = DEFAULT_LIMITS) -> Optional[FnMapping]:
    """Intensional mapping named interpolation:n=<k>, or None for other names."""
    match = _INTERPOLATION.match(name.strip())
    if match is None:
        return None
    return interpolation_fn_mapping(int(match.group("n")), limits)


def load_mapping(structure: OrderedStructure, source: PathOrText, limits: Limits = DEFAULT_LIMITS) -> FnMapping:
    """Mapping from a file or by name.

    :raises FormatError: If a named mapping lives on another carrier
    """
    named = mapping_by_name(str(source), limits)
    if named is not None:
        if not named.carrier.same_as(structure):
            raise FormatError(f"{source} is not defined on the given structure")
        return named
    return parse_mapping(structure, read_text(source))


def parse_order_map(source: OrderedStructure, target: OrderedStructure, text: str) -> OrderMap:
    """Parse ordermap / send <a> -> <b>."""
    _, body = _header(content_lines(text), "ordermap")
    table = {}
    for number, line in body:
        _, rest = _keyword(number, line, "send")
        lhs, sep, rhs = rest.partition("->")
        if not sep:
            raise FormatError(f"Line {number}: send needs '<a> -> <b>'")
        table[parse_item(source, lhs)] = parse_item(target, rhs)
    return OrderMap(source, target, table)


def parse_witness(structure: OrderedStructure, subset: Iterable[Element], text: str) -> WitnessFamily:
    """Parse a witness report; a side missing from every line is absent from the family."""
    table = {}
    for number, line in content_lines(text):
        _, rest = _keyword(number, line, "wit")
        match = _WITNESS.match(rest)
        if match is None or not match.group("b"):
            raise FormatError(f"Line {number}: expected 'wit <b> U: ... V: ...'")
        key, lower, upper = match.group("b", "u", "v")
        table[parse_item(structure, key)] = (
            None if lower is None else parse_items(structure, lower),
            None if upper is None else parse_items(structure, upper),
        )
    return WitnessFamily(structure, subset, table)


# intervals


def parse_interval(order: LinearOrder, text: str) -> IntervalElement:
    """Parse [a,b) [c,d) ... (0 or an empty string is the empty element)."""
    text = text.strip()
    if text in ("", "0"):
        return IntervalElement.empty(order)
    pieces = list(_INTERVAL.finditer(text))
    if _INTERVAL.sub("", text).strip():
        raise FormatError(f"Malformed interval element {text!r}")
    intervals = [(order.parse_point(m.group("lo")), order.parse_point(m.group("hi"))) for m in pieces]
    for lo, hi in intervals:
        if not order.key(lo) < order.key(hi):
            raise FormatError(f"Interval [{order.label(lo)},{order.label(hi)}) is empty or reversed")
    return IntervalElement.from_intervals(order, intervals)

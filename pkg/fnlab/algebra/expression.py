# coding=UTF-8
"""Parse Boolean expressions into elements of Fr(n).

Grammar (precedence ! > & > ^ > |, all binary operators left associative)::

    expr   := xor ('|' xor)*
    xor    := conj ('^' conj)*
    conj   := unary ('&' unary)*
    unary  := '!' unary | atom
    atom   := 'x' digits | '0' | '1' | '(' expr ')'

The raw form n=<k>;tt:<hex> gives the truth table directly.
"""
import re
from typing import List, NamedTuple, Optional

from fnlab.algebra.free import FreeBAElement
from fnlab.data.settings import DEFAULT_LIMITS
from fnlab.helpers.errors import ArityMismatch, FormatError

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<const>[01])|(?P<op>[!&|^()]))")
_RAW = re.compile(r"^\s*n=(?P<n>\d+)\s*;\s*tt:(?P<hex>[0-9a-fA-F]+)\s*$")


class Token(NamedTuple):
    """Lexical token: kind is var, const or op."""

    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split an expression into tokens.

    :raises FormatError: On characters outside the grammar
    """
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            raise FormatError(f"Unexpected character {stripped[position:].strip()[:1]!r} in {text!r}")
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    return tokens


class _Parser:
    """Recursive descent over a token list, evaluating directly in Fr(arity)."""

    def __init__(self, tokens: List[Token], arity: int, text: str):
        self.tokens = tokens
        self.arity = arity
        self.text = text
        self.position = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self, op: str) -> bool:
        token = self.peek()
        if token is not None and token.kind == "op" and token.text == op:
            self.position += 1
            return True
        return False

    def fail(self, message: str):
        raise FormatError(f"{message} in {self.text!r}")

    def parse(self) -> FreeBAElement:
        if not self.tokens:
            self.fail("Empty expression")
        value = self.expr()
        if self.peek() is not None:
            self.fail(f"Unexpected {self.peek().text!r}")
        return value

    def expr(self) -> FreeBAElement:
        value = self.xor()
        while self.take("|"):
            value = value | self.xor()
        return value

    def xor(self) -> FreeBAElement:
        value = self.conj()
        while self.take("^"):
            value = value ^ self.conj()
        return value

    def conj(self) -> FreeBAElement:
        value = self.unary()
        while self.take("&"):
            value = value & self.unary()
        return value

    def unary(self) -> FreeBAElement:
        if self.take("!"):
            return ~self.unary()
        return self.atom()

    def atom(self) -> FreeBAElement:
        token = self.peek()
        if token is None:
            self.fail("Unexpected end of expression")
        if self.take("("):
            value = self.expr()
            if not self.take(")"):
                self.fail("Missing ')'")
            return value
        self.position += 1
        if token.kind == "var":
            return FreeBAElement.generator(self.arity, int(token.text[1:]))
        if token.kind == "const":
            return FreeBAElement.one(self.arity) if token.text == "1" else FreeBAElement.zero(self.arity)
        self.fail(f"Unexpected {token.text!r}")


def parse_element(text: str, arity: Optional[int] = None) -> FreeBAElement:
    """Parse an expression or a raw table into an element.

    :param text: Expression (grammar above) or n=<k>;tt:<hex>
    :param arity: Arity of the result; defaults to one more than the largest generator index mentioned
    :return: The element
    :raises FormatError: If the text does not parse
    :raises ArityMismatch: If a generator or raw table does not fit the requested arity
    :raises SizeLimitExceeded: If the arity is above the configured cap
    """
    raw = _RAW.match(text)
    if raw is not None:
        n = int(raw.group("n"))
        DEFAULT_LIMITS.check_arity(n)
        if arity is not None and arity != n:
            element = FreeBAElement.from_hex(n, raw.group("hex"))
            if arity < n:
                raise ArityMismatch(f"Raw table of arity {n} does not fit arity {arity}")
            return element.extend(arity)
        return FreeBAElement.from_hex(n, raw.group("hex"))

    tokens = tokenize(text)
    indices = [int(t.text[1:]) for t in tokens if t.kind == "var"]
    needed = max(indices) + 1 if indices else 0
    if arity is None:
        arity = needed
    elif needed > arity:
        raise ArityMismatch(f"x{needed - 1} does not exist in Fr({arity})")
    DEFAULT_LIMITS.check_arity(arity)
    return _Parser(tokens, arity, text).parse()


def parse_elements(texts: List[str], arity: Optional[int] = None) -> List[FreeBAElement]:
    """Parse several expressions into one common arity (the largest needed unless given)."""
    if arity is None:
        arity = max((parse_element(t).arity for t in texts), default=0)
    return [parse_element(t, arity) for t in texts]

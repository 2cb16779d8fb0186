"""Graph expression grammar used by the command line.

::

    expr := atom | atom " x " atom
    atom := P<n> | C<n> | K<n> | K<p>,<q> | S<n> | W<n> | T:(<u>-<v>,...) | file:<path>

Only the ASCII letter ``x`` (with one space each side) denotes the strong
product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .families import FamilySpec, complete, complete_bipartite, cycle, make_family, path, star, tree, wheel
from .graph import Graph, parse_edge_list
from .product import ProductGraph, strong_product

PRODUCT_SEP = " x "
_ATOM_START = ("P<n>", "C<n>", "K<n>", "K<p>,<q>", "S<n>", "W<n>", "T:(", "file:")
_LETTERS = {"P": path, "C": cycle, "S": star, "W": wheel}


@dataclass(frozen=True)
class Atom:
    name: str
    graph: Graph
    spec: FamilySpec | None = None


@dataclass(frozen=True)
class Expression:
    """A parsed expression: its canonical spelling and one or two factors."""

    text: str
    factors: tuple[Atom, ...]

    def build(self) -> Graph | ProductGraph:
        if len(self.factors) == 1:
            return self.factors[0].graph
        return strong_product(self.factors[0].graph, self.factors[1].graph)


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str, expected) -> ParseError:
        return ParseError(message, self.text, self.pos, expected)

    def peek(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def eat(self, token: str) -> None:
        if not self.peek(token):
            raise self.fail(f"unexpected input at position {self.pos}", [repr(token)])
        self.pos += len(token)

    def number(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isascii() and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail(f"expected a number at position {self.pos}", ["<integer>"])
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        return self.pos == len(self.text)


def _atom(sc: _Scanner) -> Atom:
    if sc.peek("file:"):
        sc.eat("file:")
        end = sc.text.find(PRODUCT_SEP, sc.pos)
        end = len(sc.text) if end < 0 else end
        location = sc.text[sc.pos:end]
        if not location:
            raise sc.fail("empty file path", ["<path>"])
        try:
            with open(location, encoding="utf-8") as fh:
                content = fh.read()
        except OSError as exc:
            raise sc.fail(f"cannot read {location!r}: {exc.strerror}", ["<readable path>"]) from None
        sc.pos = end
        return Atom("file:" + location, parse_edge_list(content))
    if sc.peek("T:("):
        sc.eat("T:(")
        edges = []
        if not sc.peek(")"):
            while True:
                u = sc.number()
                sc.eat("-")
                edges.append((u, sc.number()))
                if not sc.peek(","):
                    break
                sc.eat(",")
        sc.eat(")")
        return _from_spec(tree(edges))
    letter = sc.text[sc.pos:sc.pos + 1]
    if letter == "K":
        sc.pos += 1
        p = sc.number()
        if sc.peek(",") and sc.text[sc.pos + 1:sc.pos + 2].isdigit():
            sc.eat(",")
            return _from_spec(complete_bipartite(p, sc.number()))
        return _from_spec(complete(p))
    if letter in _LETTERS:
        sc.pos += 1
        return _from_spec(_LETTERS[letter](sc.number()))
    raise sc.fail(f"expected a graph at position {sc.pos}", _ATOM_START)


def _from_spec(spec: FamilySpec) -> Atom:
    return Atom(spec.name, make_family(spec), spec)


def parse(text: str) -> Expression:
    """Parse ``text`` into an :class:`Expression` without building a product."""
    sc = _Scanner(text)
    factors = [_atom(sc)]
    if not sc.at_end():
        if not sc.peek(PRODUCT_SEP):
            raise sc.fail(f"unexpected input at position {sc.pos}", ["' x '", "end of input"])
        sc.eat(PRODUCT_SEP)
        factors.append(_atom(sc))
        if not sc.at_end():
            raise sc.fail(f"unexpected input at position {sc.pos}", ["end of input"])
    return Expression(PRODUCT_SEP.join(a.name for a in factors), tuple(factors))


def parse_expression(text: str) -> Graph | ProductGraph:
    return parse(text).build()

"""Constructor expressions: a small grammar for composing graphs.

::

    expr    := NAME group*                      complete 6 | bipartite 5 5 | kchain 1,6,6,2
             | NAME "(" expr (";" option)* ")"  cone(...) | attach(...; left=0,1; right=2,3)
    group   := INT ("," INT)*
    option  := NAME "=" (expr | item ("," item)*)
    item    := INT | INT "-" INT

Each keyword is an adapter function declared with ``@graph_constructor``
and looked up in ``ConstructorRegistry``; this module holds the built-in
ones and the recursive-descent parser.
"""

import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from .constructors import (
    attach,
    blow_up,
    complete,
    complete_bipartite,
    cone,
    delete_edges,
    hennenberg,
    k_chain,
    k_ring,
    replace,
)
from .decorators import graph_constructor
from .exceptions import ExpressionSyntaxError
from .graph import AttachmentSpec, ChainSpec, Graph
from .registry import ConstructorRegistry

Item = Union[int, Tuple[int, int]]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[();=,\-]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            start = len(text) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(start, f"unexpected character {text[start]!r}")
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass
class Term:
    """One parsed term, handed to its adapter.

    Attributes:
        name: The keyword.
        position: Offset of the keyword in the source text.
        groups: Integer groups of a prefix-form term.
        base: Graph inside the parentheses of a call-form term.
        options: ``key=value`` options of a call-form term.
    """

    name: str
    position: int
    groups: List[List[int]] = field(default_factory=list)
    base: Optional[Graph] = None
    options: Dict[str, Any] = field(default_factory=dict)

    def error(self, message: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(self.position, f"{self.name}: {message}")

    def ints(self, count: int) -> List[int]:
        """*count* space-separated integers."""
        if len(self.groups) != count or any(len(g) != 1 for g in self.groups):
            raise self.error(f"expected {count} integer argument(s)")
        return [g[0] for g in self.groups]

    def sizes(self) -> Tuple[int, ...]:
        """One comma-separated integer list."""
        if len(self.groups) != 1:
            raise self.error("expected one comma-separated list of block sizes")
        return tuple(self.groups[0])

    def option_ints(self, key: str, default: Tuple[int, ...] = ()) -> Tuple[int, ...]:
        items = self.options.get(key)
        if items is None:
            return default
        if any(isinstance(x, tuple) for x in items):
            raise self.error(f"option '{key}' takes integers, not pairs")
        return tuple(items)

    def option_int(self, key: str) -> int:
        values = self.option_ints(key)
        if len(values) != 1:
            raise self.error(f"option '{key}' takes exactly one integer")
        return values[0]

    def option_pairs(self, key: str) -> List[Tuple[int, int]]:
        items = self.options.get(key) or []
        if any(not isinstance(x, tuple) for x in items):
            raise self.error(f"option '{key}' takes pairs written i-j")
        return list(items)


class ExpressionParser:
    """Recursive-descent parser producing a ``Graph``.

    Args:
        registry: Source of term adapters.
    """

    def __init__(self, registry: ConstructorRegistry):
        self.registry = registry
        self._tokens: List[Token] = []
        self._index = 0

    def parse(self, text: str) -> Graph:
        self._tokens = tokenize(text)
        self._index = 0
        graph = self._expr()
        self._expect("end", "end of expression")
        return graph

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, text: str) -> bool:
        if self._peek().text == text and self._peek().kind == "punct":
            self._index += 1
            return True
        return False

    def _expect(self, kind_or_text: str, what: str) -> Token:
        token = self._peek()
        if token.kind == kind_or_text or (token.kind == "punct" and token.text == kind_or_text):
            return self._advance()
        found = token.text or "end of expression"
        raise ExpressionSyntaxError(token.position, f"expected {what}, found {found!r}")

    def _expr(self) -> Graph:
        head = self._expect("name", "a constructor name")
        entry = self.registry.get(head.text)
        if entry is None:
            raise ExpressionSyntaxError(
                head.position, f"unknown constructor {head.text!r}; expected one of {', '.join(self.registry.names())}"
            )
        adapter, config = entry
        term = Term(head.text, head.position)
        if not config.call_form:
            while self._peek().kind == "int":
                term.groups.append(self._int_group())
            return adapter(term)

        self._expect("(", "'('")
        term.base = self._expr()
        while self._accept(";"):
            key = self._expect("name", "an option name")
            if key.text not in config.keys:
                raise ExpressionSyntaxError(key.position, f"{head.text} has no option {key.text!r}")
            if key.text in term.options:
                raise ExpressionSyntaxError(key.position, f"option {key.text!r} given twice")
            self._expect("=", "'='")
            term.options[key.text] = self._expr() if key.text in config.expression_keys else self._items()
        closing = self._expect(")", "';' or ')'")
        missing = [k for k in config.required if k not in term.options]
        if missing:
            raise ExpressionSyntaxError(closing.position, f"{head.text} is missing option(s) {', '.join(missing)}")
        return adapter(term)

    def _int_group(self) -> List[int]:
        values = [int(self._expect("int", "an integer").text)]
        while self._accept(","):
            values.append(int(self._expect("int", "an integer").text))
        return values

    def _items(self) -> List[Item]:
        items: List[Item] = []
        if self._peek().text in (";", ")"):
            return items
        while True:
            first = int(self._expect("int", "an integer").text)
            if self._accept("-"):
                items.append((first, int(self._expect("int", "an integer").text)))
            else:
                items.append(first)
            if not self._accept(","):
                return items


def parse_expression(text: str, registry: Optional[ConstructorRegistry] = None) -> Graph:
    """Build the graph described by *text*.

    Raises:
        ExpressionSyntaxError: On grammar violations, with the offending offset.
        InvalidArgumentError: When a constructor rejects well-formed arguments.
    """
    return ExpressionParser(registry or ConstructorRegistry()).parse(text)


@graph_constructor("complete", "Complete graph: complete N")
def complete_term(term: Term) -> Graph:
    return complete(*term.ints(1))


@graph_constructor("bipartite", "Complete bipartite graph: bipartite A B")
def bipartite_term(term: Term) -> Graph:
    return complete_bipartite(*term.ints(2))


@graph_constructor("kchain", "k-chain: kchain a1,...,ak")
def kchain_term(term: Term) -> Graph:
    return k_chain(ChainSpec(term.sizes()))


@graph_constructor("kring", "k-ring: kring a1,...,ak")
def kring_term(term: Term) -> Graph:
    return k_ring(ChainSpec(term.sizes()))


@graph_constructor("cone", "Cone over a graph: cone(<expr>)", call_form=True)
def cone_term(term: Term) -> Graph:
    return cone(term.base)


@graph_constructor(
    "attach",
    "Attach a chain: attach(<expr>; left=...; right=...; interior=...)",
    keys=("left", "right", "interior"),
    required=("left", "right"),
)
def attach_term(term: Term) -> Graph:
    spec = AttachmentSpec(
        host=term.base,
        left_anchor=term.option_ints("left"),
        right_anchor=term.option_ints("right"),
        interior_sizes=term.option_ints("interior"),
    )
    return attach(spec)


@graph_constructor(
    "hennenberg",
    "Hennenberg operation: hennenberg(<expr>; d=...; i=...; j=...; others=...)",
    keys=("d", "i", "j", "others"),
    required=("d", "i", "j"),
)
def hennenberg_term(term: Term) -> Graph:
    return hennenberg(
        term.base,
        term.option_int("d"),
        term.option_int("i"),
        term.option_int("j"),
        term.option_ints("others"),
    )


@graph_constructor(
    "blowup",
    "Blow vertices up into independent sets: blowup(<expr>; sizes=...)",
    keys=("sizes",),
    required=("sizes",),
)
def blowup_term(term: Term) -> Graph:
    return blow_up(term.base, term.option_ints("sizes"))


@graph_constructor(
    "replace",
    "Replace a subgraph: replace(<expr>; h=...; with=<expr>; map=h1-x1,...)",
    keys=("h", "with", "map"),
    required=("h", "with"),
    expression_keys=("with",),
)
def replace_term(term: Term) -> Graph:
    h = term.option_ints("h")
    if "map" in term.options:
        mapping = dict(term.option_pairs("map"))
    else:
        mapping = {x: i for i, x in enumerate(sorted(set(h)))}
    return replace(term.base, h, term.options["with"], mapping)


@graph_constructor(
    "delete",
    "Delete edges: delete(<expr>; edges=i-j,...)",
    keys=("edges",),
    required=("edges",),
)
def delete_term(term: Term) -> Graph:
    return delete_edges(term.base, term.option_pairs("edges"))

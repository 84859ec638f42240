"""Graph data model and its text/JSON codecs.

``Graph`` is an immutable vertex count plus a canonical edge tuple.  Every
analysis in rigidlab consumes graphs and nothing else, so the edge order
defined here (ascending by ``(min endpoint, max endpoint)``) is also the row
order of rigidity matrices and the index order of stresses.

Two serializations are supported:

- the line format: ``v <count>`` followed by ``e <i> <j>`` lines;
- the JSON form: ``{"v": n, "edges": [[i, j], ...]}``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, Field, ValidationError

from .exceptions import GraphParseError, InvalidArgumentError

Edge = Tuple[int, int]


def _canonical_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Edges are normalised on construction: each pair is stored as
    ``(min, max)`` and the tuple is sorted.  Self-loops, duplicates and
    out-of-range endpoints raise ``InvalidArgumentError``.

    Args:
        vertex_count: Number of vertices ``v``.
        edges: Any iterable of vertex pairs.
    """

    vertex_count: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidArgumentError(f"vertex_count must be non-negative, got {self.vertex_count}")
        seen = set()
        for raw in self.edges:
            i, j = (int(x) for x in raw)
            if i == j:
                raise InvalidArgumentError(f"self-loop at vertex {i}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise InvalidArgumentError(f"edge ({i}, {j}) out of range for {self.vertex_count} vertices")
            edge = _canonical_edge(i, j)
            if edge in seen:
                raise InvalidArgumentError(f"duplicate edge {edge}")
            seen.add(edge)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def edge_count(self) -> int:
        """Number of edges ``e``."""
        return len(self.edges)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        """Position of each edge in canonical order."""
        return {edge: k for k, edge in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Neighbour set of every vertex."""
        nbrs: List[set] = [set() for _ in range(self.vertex_count)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(n) for n in nbrs)

    def has_edge(self, i: int, j: int) -> bool:
        return _canonical_edge(i, j) in self.edge_index

    def neighbors(self, vertex: int) -> FrozenSet[int]:
        return self.adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def min_degree(self) -> int:
        """Smallest vertex degree (0 for the empty vertex set)."""
        return min((len(n) for n in self.adjacency), default=0)

    def is_complete(self) -> bool:
        v = self.vertex_count
        return self.edge_count == v * (v - 1) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on *vertices*, relabelled in ascending order."""
        kept = sorted(set(vertices))
        relabel = {old: new for new, old in enumerate(kept)}
        edges = [(relabel[i], relabel[j]) for i, j in self.edges if i in relabel and j in relabel]
        return Graph(len(kept), tuple(edges))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Build a ``Graph`` from a networkx graph whose nodes are ``0 .. n-1``."""
        return cls(nx_graph.number_of_nodes(), tuple(nx_graph.edges()))

    def summary(self) -> str:
        return f"Graph(v={self.vertex_count}, e={self.edge_count})"


@dataclass(frozen=True)
class ChainSpec:
    """Block sizes ``(a_1, ..., a_k)`` of a k-chain or k-ring.

    Two specs with the same ``canonical_form`` describe isomorphic graphs
    (a chain read backwards is the same chain).

    Args:
        sizes: Positive block sizes, at least two of them.
    """

    sizes: Tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(a) for a in self.sizes)
        if len(sizes) < 2:
            raise InvalidArgumentError(f"a chain needs at least 2 blocks, got {len(sizes)}")
        if any(a < 1 for a in sizes):
            raise InvalidArgumentError(f"block sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def k(self) -> int:
        """Number of blocks."""
        return len(self.sizes)

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    @property
    def edge_count(self) -> int:
        return sum(a * b for a, b in zip(self.sizes, self.sizes[1:]))

    @property
    def interior(self) -> Tuple[int, ...]:
        """``(a_2, ..., a_{k-1})``."""
        return self.sizes[1:-1]

    @property
    def canonical_form(self) -> Tuple[int, ...]:
        return min(self.sizes, self.sizes[::-1])

    def canonical(self) -> "ChainSpec":
        return ChainSpec(self.canonical_form)

    def block_offsets(self) -> Tuple[int, ...]:
        """First vertex label of each block under block-by-block labelling."""
        offsets, start = [], 0
        for a in self.sizes:
            offsets.append(start)
            start += a
        return tuple(offsets)

    def block_degrees(self) -> Tuple[int, ...]:
        """Degree shared by every vertex of each block in the chain graph."""
        s = self.sizes
        return tuple((s[i - 1] if i > 0 else 0) + (s[i + 1] if i + 1 < len(s) else 0) for i in range(len(s)))

    def min_degree(self) -> int:
        return min(self.block_degrees())

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.sizes)

    @classmethod
    def parse(cls, text: str) -> "ChainSpec":
        """Parse ``"1,6,6,2"``."""
        try:
            return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))
        except ValueError as exc:
            raise InvalidArgumentError(f"invalid chain sizes {text!r}") from exc


@dataclass(frozen=True)
class AttachmentSpec:
    """A chain glued onto a host graph along its end blocks.

    The chain's first block is identified with ``left_anchor`` and its last
    block with ``right_anchor``; the interior blocks get fresh vertices.

    Args:
        host: The host graph ``G``.
        left_anchor: Host vertices playing ``A_1``.
        right_anchor: Host vertices playing ``A_k``.
        interior_sizes: ``(a_2, ..., a_{k-1})``.
    """

    host: Graph
    left_anchor: Tuple[int, ...]
    right_anchor: Tuple[int, ...]
    interior_sizes: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        left = tuple(sorted(set(int(x) for x in self.left_anchor)))
        right = tuple(sorted(set(int(x) for x in self.right_anchor)))
        if len(left) != len(self.left_anchor) or len(right) != len(self.right_anchor):
            raise InvalidArgumentError("anchor sets must not repeat vertices")
        if not left or not right:
            raise InvalidArgumentError("anchor sets must be non-empty")
        if set(left) & set(right):
            raise InvalidArgumentError(f"anchors overlap: {sorted(set(left) & set(right))}")
        v = self.host.vertex_count
        out_of_range = [x for x in left + right if not 0 <= x < v]
        if out_of_range:
            raise InvalidArgumentError(f"anchor vertices {out_of_range} not in host with {v} vertices")
        interior = tuple(int(a) for a in self.interior_sizes)
        if any(a < 1 for a in interior):
            raise InvalidArgumentError(f"interior sizes must be positive, got {interior}")
        object.__setattr__(self, "left_anchor", left)
        object.__setattr__(self, "right_anchor", right)
        object.__setattr__(self, "interior_sizes", interior)

    @property
    def chain(self) -> ChainSpec:
        """The attached chain ``C_{|left|, interior..., |right|}``."""
        return ChainSpec((len(self.left_anchor), *self.interior_sizes, len(self.right_anchor)))


class GraphDocument(BaseModel):
    """JSON shape of a serialized graph."""

    v: int = Field(ge=0, description="Vertex count")
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Edges in canonical order")


def to_text(graph: Graph) -> str:
    """Serialize *graph* in the line format."""
    lines = [f"v {graph.vertex_count}"]
    lines.extend(f"e {i} {j}" for i, j in graph.edges)
    return "\n".join(lines) + "\n"


def to_json(graph: Graph) -> str:
    """Serialize *graph* as ``{"v": n, "edges": [[i, j], ...]}``."""
    doc = GraphDocument(v=graph.vertex_count, edges=list(graph.edges))
    return doc.model_dump_json()


def _parse_ints(tokens: Sequence[str], line_no: int) -> List[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphParseError(line_no, f"expected integers, got {' '.join(tokens)!r}") from None


def from_text(text: str) -> Graph:
    """Parse the line format.  Blank lines and ``#`` comments are ignored.

    Raises:
        GraphParseError: With the 1-based number of the offending line.
    """
    vertex_count = None
    edges: List[Edge] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split()
        if kind == "v":
            if vertex_count is not None:
                raise GraphParseError(line_no, "duplicate 'v' line")
            if len(rest) != 1:
                raise GraphParseError(line_no, "expected 'v <count>'")
            (vertex_count,) = _parse_ints(rest, line_no)
        elif kind == "e":
            if vertex_count is None:
                raise GraphParseError(line_no, "'e' line before 'v' line")
            if len(rest) != 2:
                raise GraphParseError(line_no, "expected 'e <i> <j>'")
            i, j = _parse_ints(rest, line_no)
            if i == j or not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise GraphParseError(line_no, f"invalid edge ({i}, {j}) for {vertex_count} vertices")
            if _canonical_edge(i, j) in edges:
                raise GraphParseError(line_no, f"duplicate edge ({i}, {j})")
            edges.append(_canonical_edge(i, j))
        else:
            raise GraphParseError(line_no, f"unknown record type {kind!r}")
    if vertex_count is None:
        raise GraphParseError(1, "missing 'v <count>' line")
    return Graph(vertex_count, tuple(edges))


def from_json(text: str) -> Graph:
    """Parse the JSON form; errors are reported against line 1."""
    try:
        doc = GraphDocument.model_validate_json(text)
        return Graph(doc.v, tuple(doc.edges))
    except (ValidationError, InvalidArgumentError) as exc:
        raise GraphParseError(1, str(exc).splitlines()[0]) from exc


def loads(text: str) -> Graph:
    """Parse either serialization, picking JSON when the text starts with ``{``."""
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)

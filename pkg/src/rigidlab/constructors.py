"""Graph constructors: complete graphs, block blow-ups, chains, rings,
coning, attachments, replacement and the Hennenberg operation.

All constructors label vertices deterministically, block by block, so the
same arguments always serialize to the same bytes.
"""

from itertools import combinations, product
from typing import Iterable, List, Mapping, Sequence, Set

from .exceptions import InvalidArgumentError
from .graph import AttachmentSpec, ChainSpec, Edge, Graph


def complete(n: int) -> Graph:
    """``K_n``."""
    if n < 1:
        raise InvalidArgumentError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}``; vertices ``0 .. a-1`` form side A, the last ``b`` side B."""
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    return Graph(a + b, tuple(product(range(a), range(a, a + b))))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def blow_up(base: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``i`` of *base* by an independent set of ``sizes[i]``
    vertices and join two sets completely whenever their base vertices are
    adjacent.  Block ``i`` occupies a contiguous label range."""
    if len(sizes) != base.vertex_count:
        raise InvalidArgumentError(f"expected {base.vertex_count} block sizes, got {len(sizes)}")
    if any(a < 1 for a in sizes):
        raise InvalidArgumentError(f"block sizes must be positive, got {tuple(sizes)}")
    offsets, start = [], 0
    for a in sizes:
        offsets.append(start)
        start += a
    blocks = [range(offsets[i], offsets[i] + sizes[i]) for i in range(len(sizes))]
    edges: List[Edge] = []
    for i, j in base.edges:
        edges.extend(product(blocks[i], blocks[j]))
    return Graph(start, tuple(edges))


def k_chain(spec: ChainSpec) -> Graph:
    """``C_{a_1, ..., a_k}``: consecutive blocks joined completely."""
    return blow_up(path(spec.k), spec.sizes)


def k_ring(spec: ChainSpec) -> Graph:
    """A k-chain plus every edge between the first and last blocks."""
    if spec.k < 3:
        raise InvalidArgumentError(f"a ring needs k >= 3 blocks, got {spec.k}")
    return blow_up(cycle(spec.k), spec.sizes)


def cone(g: Graph) -> Graph:
    """Add one apex vertex (labelled ``v``) adjacent to every vertex of *g*."""
    apex = g.vertex_count
    return Graph(apex + 1, g.edges + tuple((i, apex) for i in range(apex)))


def attach(spec: AttachmentSpec) -> Graph:
    """Glue ``spec.chain`` onto the host along its anchors.

    Host vertices keep their labels; the interior blocks are appended in
    chain order after them.
    """
    host = spec.host
    blocks: List[Sequence[int]] = [spec.left_anchor]
    start = host.vertex_count
    for a in spec.interior_sizes:
        blocks.append(range(start, start + a))
        start += a
    blocks.append(spec.right_anchor)

    edges = set(host.edges)
    for left, right in zip(blocks, blocks[1:]):
        edges.update((min(x, y), max(x, y)) for x, y in product(left, right))
    return Graph(start, tuple(edges))


def replace(g: Graph, h_vertices: Iterable[int], h_prime: Graph, mapping: Mapping[int, int]) -> Graph:
    """Swap the subgraph on *h_vertices* for *h_prime*.

    Host labels are kept: ``mapping[h]`` takes the label of ``h`` and the
    vertices of ``H'`` outside the image are appended after the host, in
    increasing order.  ``replace(g, H, H', identity)`` with ``H' = g[H]``
    therefore returns *g* for any ``H``.  Edges inside ``H`` are dropped,
    boundary edges ``{g, h}`` become ``{g, mapping[h]}`` and all edges of
    ``H'`` are added.

    Args:
        g: Host graph.
        h_vertices: Vertex set of ``H`` in *g*.
        h_prime: Replacement graph.
        mapping: Injection from ``H`` into the vertices of ``H'``.
    """
    h: Set[int] = set(h_vertices)
    if any(not 0 <= x < g.vertex_count for x in h):
        raise InvalidArgumentError("replaced vertices must belong to the host graph")
    if set(mapping) != h:
        raise InvalidArgumentError("mapping must be defined exactly on the replaced vertices")
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise InvalidArgumentError("mapping must be injective")
    if any(not 0 <= y < h_prime.vertex_count for y in images):
        raise InvalidArgumentError("mapping images must be vertices of the replacement graph")

    label = {y: x for x, y in mapping.items()}
    extra = [y for y in range(h_prime.vertex_count) if y not in label]
    label.update({y: g.vertex_count + n for n, y in enumerate(extra)})

    edges = {e for e in g.edges if not (e[0] in h and e[1] in h)}
    for i, j in h_prime.edges:
        a, b = label[i], label[j]
        edges.add((min(a, b), max(a, b)))
    return Graph(g.vertex_count + len(extra), tuple(edges))


def hennenberg(g: Graph, d: int, i: int, j: int, others: Iterable[int]) -> Graph:
    """Delete edge ``{i, j}`` and add a vertex joined to ``i``, ``j`` and the
    ``d - 1`` vertices in *others*."""
    others = tuple(sorted(set(others)))
    if not g.has_edge(i, j):
        raise InvalidArgumentError(f"({i}, {j}) is not an edge")
    if len(others) != d - 1:
        raise InvalidArgumentError(f"expected {d - 1} other vertices, got {len(others)}")
    if {i, j} & set(others):
        raise InvalidArgumentError("other vertices must differ from the split edge's endpoints")
    if any(not 0 <= x < g.vertex_count for x in others):
        raise InvalidArgumentError(f"other vertices {others} out of range")
    fresh = g.vertex_count
    edges = [e for e in g.edges if e != (min(i, j), max(i, j))]
    edges.extend((x, fresh) for x in (i, j, *others))
    return Graph(fresh + 1, tuple(edges))


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """*g* without the listed edges (each must exist)."""
    doomed = {(min(i, j), max(i, j)) for i, j in edges}
    missing = doomed - set(g.edges)
    if missing:
        raise InvalidArgumentError(f"edges {sorted(missing)} are not in the graph")
    return Graph(g.vertex_count, tuple(e for e in g.edges if e not in doomed))

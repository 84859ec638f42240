"""Vertex connectivity via Menger's theorem.

``networkx.node_connectivity`` computes the minimum vertex cut with unit
capacity max-flow on the vertex-split digraph.  Conventions: complete graphs
have connectivity ``v - 1`` and disconnected graphs (or graphs with fewer
than two vertices) have connectivity ``0``.
"""

import networkx as nx
from networkx.algorithms.flow import shortest_augmenting_path

from .graph import Graph


def vertex_connectivity(g: Graph) -> int:
    """Size of a minimum vertex cut of *g*."""
    v = g.vertex_count
    if v < 2:
        return 0
    if g.is_complete():
        return v - 1
    nx_graph = g.to_networkx()
    if not nx.is_connected(nx_graph):
        return 0
    return nx.node_connectivity(nx_graph, flow_func=shortest_augmenting_path)


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether removing any ``k - 1`` vertices leaves *g* connected.

    A k-connected graph has at least ``k + 1`` vertices.  The minimum degree
    bounds connectivity from above, so low-degree graphs are rejected before
    any flow is run.
    """
    if k <= 0:
        return True
    if g.vertex_count <= k:
        return False
    if g.min_degree() < k:
        return False
    return vertex_connectivity(g) >= k

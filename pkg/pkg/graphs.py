"""
dpwheel - Graphs and geodesic distance

Constructors for the graph families the package works with, built on
networkx, plus the closed-form wheel metric.

Vertex labelling:
- wheel(n): hub 0, rim 1..n in cyclic order
- cycle(n), path(n), complete(n): 1..n
- star(n): centre 0, leaves 1..n-1

Distances are computed once per graph by all-pairs BFS and kept as a
lookup table; distance_bfs is the oracle every closed form is tested
against.
"""

import logging
from functools import cached_property
from typing import Dict, List, Tuple

import networkx as nx

from pkg.errors import InvalidParameterError

logger = logging.getLogger(__name__)

GRAPH_FAMILIES = ("wheel", "cycle", "path", "star", "complete")


class Graph:
    """A finite simple connected undirected graph with geodesic lookups"""

    def __init__(self, name: str, graph: nx.Graph):
        if graph.number_of_nodes() == 0:
            raise InvalidParameterError("a graph needs at least one vertex")
        if nx.number_of_selfloops(graph):
            raise InvalidParameterError(f"{name} has loops")
        if not nx.is_connected(graph):
            raise InvalidParameterError(f"{name} is not connected")
        self.name = name
        self.nx_graph = graph
        self.vertices: Tuple[int, ...] = tuple(sorted(graph.nodes))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return self.nx_graph.number_of_edges()

    @cached_property
    def adjacency(self) -> Dict[int, Tuple[int, ...]]:
        return {v: tuple(sorted(self.nx_graph.neighbors(v))) for v in self.vertices}

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    @cached_property
    def distance_table(self) -> List[List[int]]:
        """Dense table indexed by vertex id; -1 marks ids that are not vertices"""
        size = max(self.vertices) + 1
        table = [[-1] * size for _ in range(size)]
        for u, lengths in nx.all_pairs_shortest_path_length(self.nx_graph):
            row = table[u]
            for v, d in lengths.items():
                row[v] = d
        logger.debug("distance table for %s built (%d vertices)", self.name, self.vertex_count)
        return table

    def distance(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.distance_table[u][v]

    def _check_vertex(self, v: int) -> None:
        if v not in self.adjacency:
            raise InvalidParameterError(f"{v} is not a vertex of {self.name}")

    def __repr__(self) -> str:
        return f"Graph({self.name}, vertices={self.vertex_count}, edges={self.edge_count})"


def rim(n: int, x: int) -> int:
    """Normalise an integer into the rim representatives 1..n"""
    return (x - 1) % n + 1


def wheel(n: int) -> Graph:
    if n < 4:
        raise InvalidParameterError(f"wheel graphs need n >= 4, got {n}")
    g = nx.Graph()
    g.add_nodes_from(range(n + 1))
    g.add_edges_from((0, i) for i in range(1, n + 1))
    g.add_edges_from((i, rim(n, i + 1)) for i in range(1, n + 1))
    return Graph(f"W_{n}", g)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle graphs need n >= 3, got {n}")
    return Graph(f"C_{n}", nx.cycle_graph(range(1, n + 1)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path graphs need n >= 1, got {n}")
    return Graph(f"P_{n}", nx.path_graph(range(1, n + 1)))


def star(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"star graphs need n >= 1, got {n}")
    return Graph(f"S_{n}", nx.star_graph(n - 1))


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graphs need n >= 1, got {n}")
    return Graph(f"K_{n}", nx.complete_graph(range(1, n + 1)))


def build_graph(family: str, n: int) -> Graph:
    constructors = {
        "wheel": wheel,
        "cycle": cycle,
        "path": path,
        "star": star,
        "complete": complete,
    }
    if family not in constructors:
        raise InvalidParameterError(f"unknown graph family {family!r}")
    return constructors[family](n)


def distance_bfs(G: Graph, u: int, v: int) -> int:
    """Geodesic distance by breadth-first search"""
    G._check_vertex(u)
    G._check_vertex(v)
    return nx.shortest_path_length(G.nx_graph, u, v)


def wheel_distance(n: int, u: int, v: int) -> int:
    """Closed-form distance on W_n"""
    if n < 4:
        raise InvalidParameterError(f"wheel graphs need n >= 4, got {n}")
    for x in (u, v):
        if not 0 <= x <= n:
            raise InvalidParameterError(f"{x} is not a vertex of W_{n}")
    if u == v:
        return 0
    if u == 0 or v == 0:
        return 1
    if (v - u) % n in (1, n - 1):
        return 1
    return 2

"""Named graph families, the small-graph suite and seeded random graphs."""

from __future__ import annotations

import random
import re
from functools import lru_cache

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], vertices=range(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], vertices=range(n))


def path(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], vertices=range(n))


def star(n: int) -> Graph:
    """Centre 0 joined to leaves 1..n-1."""
    return Graph.from_edges([(0, i) for i in range(1, n)], vertices=range(n))


def edgeless(n: int) -> Graph:
    return Graph.from_edges([], vertices=range(n))


_DEMO = re.compile(r"^([KCPSE])(\d+)$")


def demo(name: str) -> Graph:
    """``K<n>``, ``C<n>``, ``P<n>`` (path on n vertices), ``S<n>`` (star) or ``E<n>`` (edgeless)."""
    match = _DEMO.match(name.strip().upper())
    if not match:
        raise ValueError(f"unknown demo graph {name!r}; use K<n>, C<n>, P<n>, S<n> or E<n>")
    family, n = match.group(1), int(match.group(2))
    return {"K": complete, "C": cycle, "P": path, "S": star, "E": edgeless}[family](n)


@lru_cache(maxsize=None)
def small_connected_graphs(max_vertices: int = 6, min_vertices: int = 1) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs, from the networkx atlas."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_vertices <= n <= max_vertices and nx.is_connected(h):
            out.append(Graph.from_edges(list(h.edges()), vertices=range(n)))
    return tuple(out)


@lru_cache(maxsize=None)
def small_graphs(max_vertices: int = 5, min_vertices: int = 1) -> tuple[Graph, ...]:
    """Every isomorphism class, connected or not."""
    import networkx as nx

    return tuple(
        Graph.from_edges(list(h.edges()), vertices=range(h.number_of_nodes()))
        for h in nx.graph_atlas_g()
        if min_vertices <= h.number_of_nodes() <= max_vertices
    )


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) on vertices 0..n-1."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(n))


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) conditioned on connectivity by rejection."""
    while True:
        g = random_graph(n, p, rng)
        if g.is_connected():
            return g


def random_edge_order(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.m))
    rng.shuffle(perm)
    return g.with_permuted_order(perm)

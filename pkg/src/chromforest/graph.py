"""Immutable simple graphs and the exhaustive enumerations built on them.

Vertices are stored as dense integers ``0..n-1``; the original identifiers
live in ``Graph.labels`` and every public function speaks in labels. Edges
are stored as a tuple in ascending edge order, so the rank of an edge is its
position and edge subsets are bitmasks over ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from . import kernels
from .errors import (
    Limits,
    NonSimpleGraphError,
    NotConnectedError,
    VertexNotInTreeError,
    resolve,
)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on dense vertices with a fixed total edge order.

    ``edges[i]`` is the ``i``-th smallest edge as a pair ``(u, v)`` with
    ``u < v``. Build instances with :meth:`from_edges`; the raw constructor
    still validates simplicity.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple = field(default=None)

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise ValueError("labels must be n distinct identifiers")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise NonSimpleGraphError(f"self-loop at {self.labels[u]!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u > v:
                raise ValueError("edge endpoints must be stored as (min, max)")
            if (u, v) in seen:
                raise NonSimpleGraphError(
                    f"parallel edge {{{self.labels[u]!r}, {self.labels[v]!r}}}"
                )
            seen.add((u, v))

    # ------------------------------------------------------------------ build
    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable]],
        vertices: Sequence[Hashable] | None = None,
        order: Sequence[tuple[Hashable, Hashable]] | None = None,
    ) -> "Graph":
        """Build from labelled edges.

        ``vertices`` fixes the vertex order (default: sorted labels, or first
        appearance when labels are not mutually comparable). ``order`` lists
        every edge in ascending order; by default edges are ordered
        lexicographically by (smaller endpoint, larger endpoint) under the
        vertex order.
        """
        edges = list(edges)
        if vertices is None:
            seen = {}
            for u, v in edges:
                seen.setdefault(u, None)
                seen.setdefault(v, None)
            try:
                vertices = sorted(seen)
            except TypeError:
                vertices = list(seen)
        vertices = tuple(vertices)
        index = {lab: i for i, lab in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertex labels")
        pairs = []
        for u, v in edges:
            if u not in index or v not in index:
                raise ValueError(f"edge {{{u!r}, {v!r}}} uses an unknown vertex")
            a, b = index[u], index[v]
            if a == b:
                raise NonSimpleGraphError(f"self-loop at {u!r}")
            pairs.append((min(a, b), max(a, b)))
        if len(set(pairs)) != len(pairs):
            raise NonSimpleGraphError("parallel edges in input")
        g = cls(len(vertices), tuple(sorted(pairs)), vertices)
        if order is not None:
            g = g.with_edge_order(order)
        return g

    def with_edge_order(self, order: Sequence[tuple[Hashable, Hashable]]) -> "Graph":
        """Same graph, edges re-ranked so that ``order`` is ascending."""
        ranked = [self.edge_index(u, v) for u, v in order]
        if sorted(ranked) != list(range(self.m)):
            raise ValueError("edge order must list every edge exactly once")
        return Graph(self.n, tuple(self.edges[i] for i in ranked), self.labels)

    def with_permuted_order(self, permutation: Sequence[int]) -> "Graph":
        """Re-rank edges: new rank ``k`` holds the edge currently at rank ``permutation[k]``."""
        if sorted(permutation) != list(range(self.m)):
            raise ValueError("not a permutation of the edge ranks")
        return Graph(self.n, tuple(self.edges[i] for i in permutation), self.labels)

    # ------------------------------------------------------------- structure
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> tuple:
        return self.labels

    @cached_property
    def vertex_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def _edge_rank(self) -> dict:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask per dense vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def endpoints(self) -> tuple[list[int], list[int]]:
        return [u for u, _ in self.edges], [v for _, v in self.edges]

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def all_vertices_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_index(self, u: Hashable, v: Hashable) -> int:
        """Rank of the edge with labelled endpoints ``u``, ``v``."""
        try:
            a, b = self.vertex_index[u], self.vertex_index[v]
        except KeyError:
            raise KeyError(f"{{{u!r}, {v!r}}} is not an edge") from None
        key = (min(a, b), max(a, b))
        if key not in self._edge_rank:
            raise KeyError(f"{{{u!r}, {v!r}}} is not an edge")
        return self._edge_rank[key]

    def labelled_edge(self, i: int) -> tuple:
        u, v = self.edges[i]
        return self.labels[u], self.labels[v]

    def labelled_edges(self) -> list[tuple]:
        return [self.labelled_edge(i) for i in range(self.m)]

    def vertex_mask(self, vertices: Iterable[Hashable]) -> int:
        mask = 0
        for lab in vertices:
            if lab not in self.vertex_index:
                raise KeyError(f"{lab!r} is not a vertex")
            mask |= 1 << self.vertex_index[lab]
        return mask

    def mask_labels(self, vmask: int) -> frozenset:
        return frozenset(self.labels[i] for i in _bits(vmask))

    def edge_mask(self, edges: Iterable[tuple[Hashable, Hashable]]) -> int:
        mask = 0
        for u, v in edges:
            mask |= 1 << self.edge_index(u, v)
        return mask

    def mask_vertices(self, emask: int) -> int:
        """Vertex mask touched by the edges of ``emask``."""
        out = 0
        for i in _bits(emask):
            u, v = self.edges[i]
            out |= (1 << u) | (1 << v)
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or component_count_mask(self, self.full_mask) == 1

    def induced(self, vmask: int) -> tuple["Graph", tuple[int, ...]]:
        """Restriction to a vertex mask.

        Returns the restricted graph (dense vertices in parent order, edges in
        the induced order) and, for each of its edge ranks, the parent rank.
        """
        cache = self.__dict__.setdefault("_induced_cache", {})
        hit = cache.get(vmask)
        if hit is not None:
            return hit
        verts = list(_bits(vmask))
        local = {v: i for i, v in enumerate(verts)}
        sub_edges = []
        parent_rank = []
        for i, (u, v) in enumerate(self.edges):
            if (vmask >> u) & 1 and (vmask >> v) & 1:
                sub_edges.append((local[u], local[v]))
                parent_rank.append(i)
        sub = Graph(len(verts), tuple(sub_edges), tuple(self.labels[v] for v in verts))
        hit = (sub, tuple(parent_rank))
        cache[vmask] = hit
        return hit

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, edges={self.labelled_edges()!r})"


def lift_mask(sub_mask: int, parent_rank: Sequence[int]) -> int:
    """Translate an edge mask of an induced subgraph to parent ranks."""
    out = 0
    for i in _bits(sub_mask):
        out |= 1 << parent_rank[i]
    return out


def lower_mask(parent_mask: int, parent_rank: Sequence[int]) -> int:
    """Inverse of :func:`lift_mask` for masks inside the induced edge set."""
    out = 0
    for i, p in enumerate(parent_rank):
        if (parent_mask >> p) & 1:
            out |= 1 << i
    return out


# ----------------------------------------------------------- domain objects
@dataclass(frozen=True)
class EdgeSubset:
    graph: Graph = field(repr=False)
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask & ~self.graph.full_mask:
            raise ValueError("edge subset is not contained in the graph's edge set")

    @property
    def edges(self) -> tuple:
        return tuple(self.graph.labelled_edge(i) for i in _bits(self.mask))

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self):
        return popcount(self.mask)

    def __iter__(self):
        return iter(self.edges)

    def issubset(self, other: "EdgeSubset | int") -> bool:
        om = other if isinstance(other, int) else other.mask
        return self.mask & ~om == 0

    def __repr__(self):
        return f"{type(self).__name__}({list(self.edges)!r})"


@dataclass(frozen=True, repr=False)
class Tree(EdgeSubset):
    """Nontrivial tree of ``graph``: connected, acyclic, spanning its vertex set."""

    vertex_mask: int = 0

    def __post_init__(self):
        super().__post_init__()
        vm = self.graph.mask_vertices(self.mask)
        if self.vertex_mask == 0:
            object.__setattr__(self, "vertex_mask", vm)
        if self.mask == 0 or vm != self.vertex_mask:
            raise ValueError("a tree needs at least one edge spanning its vertex set")
        if popcount(self.mask) != popcount(vm) - 1 or component_count_mask(
            self.graph, self.mask, vm
        ) != 1:
            raise ValueError("edge set is not a tree")

    @property
    def vertex_set(self) -> frozenset:
        return self.graph.mask_labels(self.vertex_mask)


@dataclass(frozen=True, repr=False)
class Forest(EdgeSubset):
    def __post_init__(self):
        super().__post_init__()
        g = self.graph
        if popcount(self.mask) != g.n - component_count_mask(g, self.mask):
            raise ValueError("edge set contains a circuit")

    @cached_property
    def trees(self) -> tuple[Tree, ...]:
        """Nontrivial components, ordered by smallest vertex."""
        return tuple(
            Tree(self.graph, emask, vmask) for vmask, emask in forest_components(self.graph, self.mask)
        )


@dataclass(frozen=True)
class ConnectedSubset:
    graph: Graph = field(repr=False)
    mask: int

    def __post_init__(self):
        if popcount(self.mask) < 2:
            raise ValueError("connected subsets have at least two vertices")
        sub, _ = self.graph.induced(self.mask)
        if not sub.is_connected():
            raise ValueError("restriction is not connected")

    @property
    def vertices(self) -> frozenset:
        return self.graph.mask_labels(self.mask)

    def __len__(self):
        return popcount(self.mask)


@dataclass(frozen=True)
class Circuit:
    """Simple circuit given as its cyclic edge-rank sequence."""

    graph: Graph = field(repr=False)
    sequence: tuple[int, ...]

    @property
    def mask(self) -> int:
        out = 0
        for i in self.sequence:
            out |= 1 << i
        return out

    @property
    def edges(self) -> tuple:
        return tuple(self.graph.labelled_edge(i) for i in self.sequence)

    def broken(self) -> EdgeSubset:
        top = max(self.sequence)
        return EdgeSubset(self.graph, self.mask & ~(1 << top))


# ---------------------------------------------------------------- operations
def component_count_mask(g: Graph, emask: int, vmask: int | None = None) -> int:
    """Components of ``(vertices, edges)``; isolated vertices count."""
    if vmask is None:
        vmask = g.all_vertices_mask
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = popcount(vmask)
    for i in _bits(emask):
        a, b = find(g.edges[i][0]), find(g.edges[i][1])
        if a != b:
            parent[a] = b
            comps -= 1
    return comps


def component_count(g: Graph, e: EdgeSubset | int) -> int:
    mask = e if isinstance(e, int) else e.mask
    if mask & ~g.full_mask:
        raise ValueError("edge subset is not contained in the graph")
    return component_count_mask(g, mask)


def forest_components(g: Graph, emask: int) -> list[tuple[int, int]]:
    """``(vertex_mask, edge_mask)`` of each nontrivial component, by smallest vertex."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in _bits(emask):
        a, b = find(g.edges[i][0]), find(g.edges[i][1])
        if a != b:
            parent[max(a, b)] = min(a, b)
    comp_v: dict[int, int] = {}
    comp_e: dict[int, int] = {}
    for i in _bits(emask):
        r = find(g.edges[i][0])
        u, v = g.edges[i]
        comp_v[r] = comp_v.get(r, 0) | (1 << u) | (1 << v)
        comp_e[r] = comp_e.get(r, 0) | (1 << i)
    return sorted(((comp_v[r], comp_e[r]) for r in comp_v), key=lambda t: t[0] & -t[0])


def restrict(g: Graph, r: Iterable[Hashable]) -> Graph:
    """Induced subgraph on the labelled vertex set ``r``, with the induced edge order."""
    return g.induced(g.vertex_mask(r))[0]


def connected_subset_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    resolve(limits).check_vertices(g.n, "connected subsets")
    return kernels.connected_subsets(g.n, g.adjacency)


def enumerate_connected_subsets(g: Graph, limits: Limits | None = None) -> list[ConnectedSubset]:
    """All vertex sets of size >= 2 inducing a connected subgraph, by ascending bitmask."""
    return [ConnectedSubset(g, vm) for vm in connected_subset_masks(g, limits)]


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise NotConnectedError(f"{what} requires a connected graph")


def connected_spanning_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    _require_connected(g, "connected spanning subgraph enumeration")
    resolve(limits).check_edges(g.m, "connected spanning subgraphs")
    eu, ev = g.endpoints
    return kernels.connected_spanning_masks(g.n, eu, ev)


def enumerate_connected_spanning_subgraphs(
    g: Graph, limits: Limits | None = None
) -> list[EdgeSubset]:
    return [EdgeSubset(g, mask) for mask in connected_spanning_masks(g, limits)]


def spanning_tree_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    _require_connected(g, "spanning tree enumeration")
    resolve(limits).check_edges(g.m, "spanning trees")
    eu, ev = g.endpoints
    return kernels.spanning_tree_masks(g.n, eu, ev)


def matrix_tree_count(g: Graph) -> int:
    """Spanning-tree count as a reduced-Laplacian determinant (exact Bareiss elimination)."""
    if g.n <= 1:
        return 1
    size = g.n - 1
    lap = [[0] * size for _ in range(size)]
    for u, v in g.edges:
        for a in (u, v):
            if a:
                lap[a - 1][a - 1] += 1
        if u and v:
            lap[u - 1][v - 1] -= 1
            lap[v - 1][u - 1] -= 1
    return _bareiss_det(lap)


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def enumerate_spanning_trees(g: Graph, limits: Limits | None = None) -> list[Tree]:
    masks = spanning_tree_masks(g, limits)
    expected = matrix_tree_count(g)
    if len(masks) != expected:
        raise AssertionError(
            f"spanning tree enumeration found {len(masks)} trees, Matrix-Tree gives {expected}"
        )
    if g.n <= 1:
        return []
    return [Tree(g, mask, g.all_vertices_mask) for mask in masks]


def forest_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    lim = resolve(limits)
    lim.check_vertices(g.n, "forest enumeration")
    lim.check_edges(g.m, "forest enumeration")
    eu, ev = g.endpoints
    return kernels.forests(g.n, eu, ev, [[] for _ in range(g.m)], True)[1]


def enumerate_forests(g: Graph, limits: Limits | None = None) -> list[Forest]:
    """Every acyclic edge subset, the empty one included."""
    return [Forest(g, mask) for mask in forest_masks(g, limits)]


def tree_path(t: Tree, x: Hashable, y: Hashable) -> list[tuple]:
    """Edges of the unique path from ``x`` to ``y`` in ``t``, in walking order."""
    g = t.graph
    for lab in (x, y):
        if lab not in g.vertex_index or not (t.vertex_mask >> g.vertex_index[lab]) & 1:
            raise VertexNotInTreeError(lab)
    if x == y:
        raise ValueError("tree_path needs two distinct vertices")
    src, dst = g.vertex_index[x], g.vertex_index[y]
    nbrs: dict[int, list[tuple[int, int]]] = {}
    for i in _bits(t.mask):
        u, v = g.edges[i]
        nbrs.setdefault(u, []).append((v, i))
        nbrs.setdefault(v, []).append((u, i))
    back = {src: None}
    stack = [src]
    while stack:
        v = stack.pop()
        for w, i in nbrs.get(v, ()):
            if w not in back:
                back[w] = (v, i)
                stack.append(w)
    path = []
    v = dst
    while back[v] is not None:
        prev, i = back[v]
        path.append((g.labels[prev], g.labels[v]))
        v = prev
    path.reverse()
    return path


def simple_circuits(g: Graph, limits: Limits | None = None) -> list[Circuit]:
    """Every simple circuit exactly once.

    A DFS from each start vertex ``s`` only visits vertices above ``s``, so
    each circuit is rooted at its smallest vertex; of the two traversal
    directions only the one whose second vertex is smaller than its last is
    kept.
    """
    resolve(limits).check_vertices(g.n, "circuit enumeration")
    rank = g._edge_rank
    adj = g.adjacency
    out: list[Circuit] = []
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        path = [s]
        on_path = 1 << s

        def dfs(v: int) -> None:
            nonlocal on_path
            nbrs = adj[v]
            if len(path) >= 3 and (nbrs >> s) & 1 and path[1] < v:
                seq = [rank[(min(a, b), max(a, b))] for a, b in zip(path, path[1:])]
                seq.append(rank[(s, v)])
                out.append(Circuit(g, tuple(seq)))
            for w in _bits(nbrs & above & ~on_path):
                path.append(w)
                on_path |= 1 << w
                dfs(w)
                on_path &= ~(1 << w)
                path.pop()

        dfs(s)
    return out


def broken_circuit_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    return sorted({c.broken().mask for c in simple_circuits(g, limits)})


def broken_circuits(g: Graph, limits: Limits | None = None) -> list[EdgeSubset]:
    """Each simple circuit minus its largest edge, deduplicated as edge sets."""
    return [EdgeSubset(g, mask) for mask in broken_circuit_masks(g, limits)]


def is_broken_circuit_free(f: Forest | EdgeSubset | int, bc: Iterable[EdgeSubset | int]) -> bool:
    fm = f if isinstance(f, int) else f.mask
    for b in bc:
        bm = b if isinstance(b, int) else b.mask
        if bm & ~fm == 0:
            return False
    return True


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members; a set contains some member iff it contains a minimal one."""
    kept: list[int] = []
    for mask in sorted(set(masks), key=popcount):
        if all(k & ~mask for k in kept):
            kept.append(mask)
    return kept


def blockers_by_top(masks: Iterable[int], m: int) -> list[list[int]]:
    """Group masks by their highest set bit, the layout the forest kernel expects."""
    groups: list[list[int]] = [[] for _ in range(m)]
    for mask in masks:
        groups[mask.bit_length() - 1].append(mask)
    return groups


def is_connected_by_cuts(g: Graph) -> bool:
    """Connectivity by the cut definition: every bipartition is crossed by an edge."""
    if g.n <= 1:
        return True
    full = g.all_vertices_mask
    # fix vertex 0 on side B to visit each unordered bipartition once
    for b in range(1, full, 2):
        c = full & ~b
        if not c:
            continue
        crossed = any(((b >> u) & 1) != ((b >> v) & 1) for u, v in g.edges)
        if not crossed:
            return False
    return True


def weight_vector(g: Graph, weights) -> list[Fraction]:
    """Normalise a weight assignment (sequence by rank or mapping by labelled edge)."""
    if isinstance(weights, dict):
        out = [None] * g.m
        for (u, v), w in weights.items():
            out[g.edge_index(u, v)] = w
        if any(w is None for w in out):
            raise ValueError("weight assignment must cover every edge")
        return out
    out = list(weights)
    if len(out) != g.m:
        raise ValueError(f"expected {g.m} weights, got {len(out)}")
    return out

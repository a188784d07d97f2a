"""Chromatic polynomial by every route, plus the brute-force coloring count."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

from . import kernels
from .errors import Limits, resolve
from .graph import (
    Forest,
    Graph,
    _bits,
    blockers_by_top,
    broken_circuit_masks,
    connected_subset_masks,
    lift_mask,
    minimal_masks,
    popcount,
)
from .polynomial import IntPolynomial
from .schemes import MinimalTreeScheme, SchemeMap, require_valid


def _from_forest_counts(n: int, counts) -> IntPolynomial:
    """q^n * sum_k N_k (-1/q)^k."""
    out = [0] * (n + 1)
    for k, c in enumerate(counts):
        if c:
            out[n - k] += (-1) ** k * c
    return IntPolynomial(out)


def chromatic_classical(g: Graph, limits: Limits | None = None) -> IntPolynomial:
    """Sum over all edge subsets of (-1)^|E| q^(components)."""
    resolve(limits).check_edges(g.m, "subgraph expansion")
    eu, ev = g.endpoints
    return IntPolynomial(kernels.classical_coefficients(g.n, eu, ev))


# ------------------------------------------------------------- Whitney
def _nbc_forests(g: Graph, collect: bool, limits: Limits | None):
    lim = resolve(limits)
    lim.check_vertices(g.n, "broken-circuit-free forests")
    lim.check_edges(g.m, "broken-circuit-free forests")
    blockers = blockers_by_top(minimal_masks(broken_circuit_masks(g, limits)), g.m)
    eu, ev = g.endpoints
    return kernels.forests(g.n, eu, ev, blockers, collect)


def broken_circuit_free_forest_masks(g: Graph, limits: Limits | None = None) -> list[int]:
    return _nbc_forests(g, True, limits)[1]


def enumerate_broken_circuit_free_forests(g: Graph, limits: Limits | None = None) -> list[Forest]:
    return [Forest(g, mask) for mask in broken_circuit_free_forest_masks(g, limits)]


def chromatic_whitney(g: Graph, limits: Limits | None = None) -> IntPolynomial:
    """q^n times the signed count of broken-circuit-free forests by size."""
    counts, _ = _nbc_forests(g, False, limits)
    return _from_forest_counts(g.n, counts)


# ------------------------------------------------------ scheme forests
def closed_tree_table(g: Graph, m: SchemeMap, limits: Limits | None = None) -> dict[int, list[int]]:
    """For each connected vertex subset R, the spanning trees of g|R fixed by m (parent edge masks).

    Untrusted schemes are validated on every restriction they are applied to.
    """
    lim = resolve(limits)
    lim.check_edges(g.m, "scheme forests")
    table = {}
    for r in connected_subset_masks(g, lim):
        sub, ranks = g.induced(r)
        require_valid(sub, m, lim)
        eu, ev = sub.endpoints
        closed = [t for t in kernels.spanning_tree_masks(sub.n, eu, ev) if m.map_mask(sub, t) == t]
        if closed:
            table[r] = [lift_mask(t, ranks) for t in closed]
    return table


def _by_min_vertex(n: int, items: dict[int, object]) -> list[list[tuple[int, object]]]:
    groups: list[list[tuple[int, object]]] = [[] for _ in range(n)]
    for r, payload in items.items():
        groups[(r & -r).bit_length() - 1].append((r, payload))
    return groups


def disjoint_collection_sum(n: int, weights: dict[int, int], full: int | None = None) -> list[int]:
    """Sum over sets of pairwise disjoint vertex subsets R (keys of ``weights``) of the product of weights.

    The result is graded by the total of (|R| - 1): entry k collects the
    collections whose subsets have k "excess" vertices in total. The empty
    collection contributes 1 at k = 0. Collections are built by always
    deciding the smallest free vertex first, so each is produced once.
    """
    groups = _by_min_vertex(n, weights)
    memo: dict[int, list[int]] = {0: [1]}

    def solve(free: int) -> list[int]:
        hit = memo.get(free)
        if hit is not None:
            return hit
        low = free & -free
        v = low.bit_length() - 1
        out = list(solve(free & ~low))
        for r, w in groups[v]:
            if r & ~free:
                continue
            shift = popcount(r) - 1
            rest = solve(free & ~r)
            need = shift + len(rest)
            if len(out) < need:
                out.extend([0] * (need - len(out)))
            for k, c in enumerate(rest):
                out[k + shift] += w * c
        memo[free] = out
        return out

    result = solve(((1 << n) - 1) if full is None else full)
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def _iter_disjoint(groups, free: int, acc: int) -> Iterator[int]:
    if not free:
        yield acc
        return
    low = free & -free
    v = low.bit_length() - 1
    yield from _iter_disjoint(groups, free & ~low, acc)
    for r, trees in groups[v]:
        if r & ~free:
            continue
        for t in trees:
            yield from _iter_disjoint(groups, free & ~r, acc | t)


def scheme_forest_masks(g: Graph, m: SchemeMap, limits: Limits | None = None) -> list[int]:
    table = closed_tree_table(g, m, limits)
    groups = _by_min_vertex(g.n, table)
    return sorted(_iter_disjoint(groups, g.all_vertices_mask, 0))


def enumerate_scheme_forests(g: Graph, m: SchemeMap | None = None, limits: Limits | None = None) -> list[Forest]:
    """Forests (empty one included) whose every nontrivial tree is fixed by the scheme."""
    m = MinimalTreeScheme() if m is None else m
    return [Forest(g, mask) for mask in scheme_forest_masks(g, m, limits)]


@dataclass(frozen=True)
class ForestLevelCounts:
    """``counts[k]`` = number of scheme-closed forests with k edges, k = 0..n-1."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1 or any(c < 0 for c in self.counts):
            raise ValueError("forest counts must start with N_0 = 1 and be nonnegative")

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def forest_level_counts(g: Graph, m: SchemeMap | None = None, limits: Limits | None = None) -> ForestLevelCounts:
    m = MinimalTreeScheme() if m is None else m
    table = closed_tree_table(g, m, limits)
    graded = disjoint_collection_sum(g.n, {r: len(ts) for r, ts in table.items()})
    size = max(g.n, 1)
    return ForestLevelCounts(tuple(graded) + (0,) * (size - len(graded)))


def chromatic_scheme(g: Graph, m: SchemeMap | None = None, limits: Limits | None = None) -> IntPolynomial:
    """q^n times the signed count of scheme-closed forests by size."""
    return _from_forest_counts(g.n, forest_level_counts(g, m, limits).counts)


# ------------------------------------------------------------ oracles
def coloring_order(g: Graph) -> list[int]:
    """Vertex order in which each vertex sees as many earlier neighbours as possible."""
    if g.n == 0:
        return []
    adj = g.adjacency
    degree = [popcount(a) for a in adj]
    order = [max(range(g.n), key=lambda v: (degree[v], -v))]
    placed = 1 << order[0]
    while len(order) < g.n:
        best = max(
            (v for v in range(g.n) if not (placed >> v) & 1),
            key=lambda v: (popcount(adj[v] & placed), degree[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def count_proper_colorings(g: Graph, q: int, limits: Limits | None = None) -> int:
    """Exhaustive count of colorings with q colors and no monochromatic edge.

    The budget applies to q^n, the size of the full configuration space.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    resolve(limits).check_budget(q**g.n)
    order = coloring_order(g)
    position = {v: i for i, v in enumerate(order)}
    adj = g.adjacency
    earlier = [[position[u] for u in _bits(adj[v]) if position[u] < i] for i, v in enumerate(order)]
    return kernels.count_colorings(g.n, earlier, q)


def interpolate(values: list[int]) -> IntPolynomial:
    """Integer polynomial of degree < len(values) through (q, values[q]), q = 0, 1, ...

    Newton forward differences; the binomial basis keeps everything integral.
    """
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    result = IntPolynomial(())
    basis = IntPolynomial((1,))  # q (q-1) ... (q-k+1)
    for k, d in enumerate(diffs):
        if d:
            if d % factorial(k):
                raise ValueError("values do not come from an integer polynomial")
            result = result + basis * (d // factorial(k))
        basis = basis * IntPolynomial((-k, 1))
    return result


def chromatic_brute(g: Graph, limits: Limits | None = None) -> IntPolynomial:
    """Interpolate exhaustive coloring counts at q = 0..n."""
    return interpolate([count_proper_colorings(g, q, limits) for q in range(g.n + 1)])


# ---------------------------------------------------- deletion-contraction
# above this many candidate relabelings the memo falls back to labelled keys
_CANON_CAP = 5040


def _drop_vertex(mask: int, v: int) -> int:
    low = mask & ((1 << v) - 1)
    return low | ((mask >> (v + 1)) << v)


def _refine(adj: tuple[int, ...]) -> list[int]:
    n = len(adj)
    colors = [popcount(a) for a in adj]
    classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _bits(adj[v])))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == classes:
            return colors
        classes = len(ranking)


def canonical_key(adj: tuple[int, ...]):
    """Isomorphism-invariant key when affordable, otherwise the labelled adjacency.

    Colour refinement splits the vertices into cells; every relabeling that
    lists cells in colour order is tried and the smallest relabelled
    adjacency wins. Isomorphic graphs share the candidate set, so the key is
    exact.
    """
    n = len(adj)
    colors = _refine(adj)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    if prod(factorial(len(c)) for c in ordered) > _CANON_CAP:
        return ("labelled", adj)
    best = None
    for choice in product(*(permutations(c) for c in ordered)):
        order = [v for cell in choice for v in cell]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        relabelled = tuple(sum(1 << pos[u] for u in _bits(adj[v])) for v in order)
        if best is None or relabelled < best:
            best = relabelled
    return (tuple(len(c) for c in ordered), best)


def deletion_contraction(g: Graph, limits: Limits | None = None) -> IntPolynomial:
    """P(G) = P(G - e) - P(G / e) with P(edgeless on n) = q^n, memoised up to isomorphism."""
    lim = resolve(limits)
    lim.check_vertices(g.n, "deletion-contraction")
    lim.check_edges(g.m, "deletion-contraction")
    memo: dict = {}

    def solve(adj: tuple[int, ...]) -> IntPolynomial:
        n = len(adj)
        u = next((v for v in range(n) if adj[v]), None)
        if u is None:
            return IntPolynomial.monomial(n)
        key = canonical_key(adj)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # contract along an edge at a highest-degree vertex
        u = max(range(n), key=lambda v: popcount(adj[v]))
        w = (adj[u] & -adj[u]).bit_length() - 1
        deleted = list(adj)
        deleted[u] &= ~(1 << w)
        deleted[w] &= ~(1 << u)
        merged = list(deleted)
        merged[u] |= deleted[w]
        for x in _bits(deleted[w]):
            merged[x] |= 1 << u
        merged = tuple(_drop_vertex(a & ~(1 << w), w) for i, a in enumerate(merged) if i != w)
        result = solve(tuple(deleted)) - solve(merged)
        memo[key] = result
        return result

    return solve(g.adjacency)

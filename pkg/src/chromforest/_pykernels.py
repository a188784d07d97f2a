"""Pure-Python enumeration kernels.

Reference twin of ``_ckernels.pyx``; both modules expose the same functions
with the same semantics. Graphs arrive as ``n`` dense vertices plus parallel
endpoint lists ``eu``/``ev`` indexed by edge rank, so bit ``i`` of an edge
mask is the ``i``-th smallest edge. Vertex subsets are bitmasks as well.
"""

from __future__ import annotations

import sys

BACKEND = "python"

# recursion depth is bounded by the edge count (<= 63) plus the vertex count
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def _connected_within(mask: int, adj) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def connected_subsets(n: int, adj) -> list[int]:
    """Vertex masks with at least two vertices inducing a connected subgraph, ascending."""
    out = []
    for mask in range(3, 1 << n):
        if mask & (mask - 1) and _connected_within(mask, adj):
            out.append(mask)
    return out


class _UnionFind:
    # union by size, no path compression, so merges can be undone in LIFO order
    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        return b

    def undo(self, b: int) -> None:
        a = self.parent[b]
        self.parent[b] = b
        self.size[a] -= self.size[b]


def classical_coefficients(n: int, eu, ev) -> list[int]:
    """coef[k] = sum of (-1)^|E| over all edge subsets E with k components."""
    m = len(eu)
    uf = _UnionFind(n)
    coef = [0] * (n + 1)

    def rec(i: int, comps: int, sign: int) -> None:
        if i == m:
            coef[comps] += sign
            return
        rec(i + 1, comps, sign)
        a = uf.find(eu[i])
        b = uf.find(ev[i])
        if a == b:
            rec(i + 1, comps, -sign)
        else:
            child = uf.union(a, b)
            rec(i + 1, comps - 1, -sign)
            uf.undo(child)

    rec(0, n, 1)
    return coef


def _connected_spanning(n: int, eu, ev, collect: bool):
    m = len(eu)
    uf = _UnionFind(n)
    total = 0
    masks = []

    def rec(i: int, comps: int, mask: int, sign: int) -> None:
        nonlocal total
        if comps - 1 > m - i:
            return
        if i == m:
            total += sign
            if collect:
                masks.append(mask)
            return
        rec(i + 1, comps, mask, sign)
        a = uf.find(eu[i])
        b = uf.find(ev[i])
        if a == b:
            rec(i + 1, comps, mask | (1 << i), -sign)
        else:
            child = uf.union(a, b)
            rec(i + 1, comps - 1, mask | (1 << i), -sign)
            uf.undo(child)

    if n <= 1:
        return 1, [0]
    rec(0, n, 0, 1)
    return total, masks


def signed_connected_sum(n: int, eu, ev) -> int:
    """Sum of (-1)^|E| over edge subsets E whose spanning subgraph is connected."""
    return _connected_spanning(n, eu, ev, False)[0]


def connected_spanning_masks(n: int, eu, ev) -> list[int]:
    return _connected_spanning(n, eu, ev, True)[1]


def spanning_tree_masks(n: int, eu, ev) -> list[int]:
    m = len(eu)
    need = n - 1
    uf = _UnionFind(n)
    out = []

    def rec(i: int, size: int, mask: int) -> None:
        if size == need:
            out.append(mask)
            return
        if size + (m - i) < need:
            return
        a = uf.find(eu[i])
        b = uf.find(ev[i])
        if a != b:
            child = uf.union(a, b)
            rec(i + 1, size + 1, mask | (1 << i))
            uf.undo(child)
        rec(i + 1, size, mask)

    if n <= 1:
        return [0]
    rec(0, 0, 0)
    return out


def forests(n: int, eu, ev, blockers, collect: bool):
    """Acyclic edge subsets avoiding every blocker mask.

    ``blockers[i]`` lists the forbidden masks whose highest edge is ``i``;
    edges are added in increasing rank so only those need checking when
    edge ``i`` joins. Returns ``(counts_by_size, masks or None)``.
    """
    m = len(eu)
    uf = _UnionFind(n)
    counts = [0] * max(n, 1)
    masks = [] if collect else None

    def rec(i: int, size: int, mask: int) -> None:
        if i == m:
            counts[size] += 1
            if collect:
                masks.append(mask)
            return
        rec(i + 1, size, mask)
        a = uf.find(eu[i])
        b = uf.find(ev[i])
        if a == b:
            return
        grown = mask | (1 << i)
        for bad in blockers[i]:
            if bad & ~grown == 0:
                return
        child = uf.union(a, b)
        rec(i + 1, size + 1, grown)
        uf.undo(child)

    rec(0, 0, 0)
    return counts, masks


def minimal_tree_extension(n: int, eu, ev, tree_mask: int) -> int:
    """Mask of non-tree edges that exceed every edge on their tree path."""
    if n == 0:
        return 0
    m = len(eu)
    nbrs = [[] for _ in range(n)]
    for i in range(m):
        if tree_mask >> i & 1:
            nbrs[eu[i]].append((ev[i], i))
            nbrs[ev[i]].append((eu[i], i))
    parent = [-1] * n
    pedge = [-1] * n
    depth = [0] * n
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        for w, i in nbrs[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                pedge[w] = i
                depth[w] = depth[v] + 1
                stack.append(w)
    ext = 0
    for j in range(m):
        if tree_mask >> j & 1:
            continue
        x, y = eu[j], ev[j]
        top = -1
        while x != y:
            if depth[x] < depth[y]:
                x, y = y, x
            if pedge[x] > top:
                top = pedge[x]
            x = parent[x]
        if j > top:
            ext |= 1 << j
    return ext


def count_colorings(n: int, earlier, q: int) -> int:
    """Number of proper q-colorings.

    ``earlier[v]`` lists the neighbours of ``v`` that precede it in the
    enumeration order. Every coloring of vertices ``0..n-2`` is visited; the
    last vertex contributes its number of free colors directly.
    """
    if n == 0:
        return 1
    if q <= 0:
        return 0
    color = [0] * n
    last = n - 1

    def rec(v: int) -> int:
        if v == last:
            used = {color[u] for u in earlier[v]}
            return q - len(used)
        total = 0
        prev = earlier[v]
        for c in range(q):
            for u in prev:
                if color[u] == c:
                    break
            else:
                color[v] = c
                total += rec(v + 1)
        return total

    return rec(0)

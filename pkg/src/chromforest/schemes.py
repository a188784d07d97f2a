"""Partition schemes: maps from spanning trees to connected spanning supergraphs.

A scheme acts on one connected graph at a time (a restriction of the host
graph); ``map_mask`` receives that graph and a spanning-tree edge mask over
its ranks and returns the image mask. Schemes are only trusted after they
have been checked by :func:`validate_scheme`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import kernels
from .errors import Limits, NotConnectedError, NotSpanningError, SchemeInvalidError
from .graph import (
    EdgeSubset,
    Graph,
    Tree,
    _bits,
    connected_spanning_masks,
    lift_mask,
    lower_mask,
    popcount,
    spanning_tree_masks,
    weight_vector,
)

FLOAT_TOLERANCE = 1e-9


class SchemeMap:
    """Base class; subclasses implement :meth:`map_mask`."""

    kind = "custom"
    trusted = False

    def map_mask(self, g: Graph, tree_mask: int) -> int:
        raise NotImplementedError

    def image(self, t: Tree) -> EdgeSubset:
        """The scheme's image of a nontrivial tree, computed on the restriction to its vertex set."""
        g = t.graph
        sub, ranks = g.induced(t.vertex_mask)
        local = lower_mask(t.mask, ranks)
        return EdgeSubset(g, lift_mask(self.map_mask(sub, local), ranks))

    def __repr__(self):
        return f"{type(self).__name__}(kind={self.kind!r})"


class MinimalTreeScheme(SchemeMap):
    """Adds every non-tree edge that is larger than all edges on its tree path.

    Larger means later in the graph's edge order; on a restriction that is
    the induced order.
    """

    kind = "minimal-tree"
    trusted = True

    def map_mask(self, g: Graph, tree_mask: int) -> int:
        _check_spanning(g, tree_mask)
        eu, ev = g.endpoints
        return tree_mask | kernels.minimal_tree_extension(g.n, eu, ev, tree_mask)


PARENT_BEFORE_SHALLOW = "parent-before-shallow"
PARENT_AFTER_SHALLOW = "parent-after-shallow"


class PenroseScheme(SchemeMap):
    """Depth-based scheme rooted at the smallest vertex.

    With depths taken in the tree, a non-tree edge is added when its ends sit
    at equal depth, or at adjacent depths with the deeper end's tree parent
    ordered before the shallower end (``parent-before-shallow``) or after it
    (``parent-after-shallow``).
    """

    kind = "penrose"

    def __init__(self, orientation: str = PARENT_BEFORE_SHALLOW, trusted: bool = False):
        if orientation not in (PARENT_BEFORE_SHALLOW, PARENT_AFTER_SHALLOW):
            raise ValueError(f"unknown orientation {orientation!r}")
        self.orientation = orientation
        self.trusted = trusted

    def map_mask(self, g: Graph, tree_mask: int) -> int:
        _check_spanning(g, tree_mask)
        depth, parent = _tree_depths(g, tree_mask)
        out = tree_mask
        before = self.orientation == PARENT_BEFORE_SHALLOW
        for i, (x, y) in enumerate(g.edges):
            if (tree_mask >> i) & 1:
                continue
            if depth[x] == depth[y]:
                out |= 1 << i
            elif abs(depth[x] - depth[y]) == 1:
                deep, shallow = (x, y) if depth[x] > depth[y] else (y, x)
                if (parent[deep] < shallow) == before:
                    out |= 1 << i
        return out

    def __repr__(self):
        return f"PenroseScheme(orientation={self.orientation!r}, trusted={self.trusted})"


class CustomScheme(SchemeMap):
    """Wraps ``fn(graph, tree_mask) -> image_mask``; validated before every use."""

    def __init__(self, fn: Callable[[Graph, int], int], name: str = "custom"):
        self.fn = fn
        self.kind = name

    def map_mask(self, g: Graph, tree_mask: int) -> int:
        return self.fn(g, tree_mask)


def identity_scheme() -> CustomScheme:
    """m(tau) = tau. Not a partition scheme once a graph has a circuit."""
    return CustomScheme(lambda g, tree_mask: tree_mask, name="identity")


def _check_spanning(g: Graph, tree_mask: int) -> None:
    if popcount(tree_mask) != g.n - 1 or (g.n > 1 and g.mask_vertices(tree_mask) != g.all_vertices_mask):
        raise NotSpanningError("tree does not span the graph")


def _tree_depths(g: Graph, tree_mask: int) -> tuple[list[int], list[int]]:
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for i in _bits(tree_mask):
        u, v = g.edges[i]
        nbrs[u].append(v)
        nbrs[v].append(u)
    depth = [-1] * g.n
    parent = [-1] * g.n
    depth[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in nbrs[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    return depth, parent


# ------------------------------------------------------------- operations
def minimal_tree_map(t: Tree | int, g_restricted: Graph) -> EdgeSubset:
    """Image of a spanning tree of ``g_restricted`` under the minimal-tree scheme.

    The edge order is the one carried by ``g_restricted``; re-rank with
    :meth:`Graph.with_edge_order` to use another.
    """
    mask = t if isinstance(t, int) else t.mask
    return EdgeSubset(g_restricted, MinimalTreeScheme().map_mask(g_restricted, mask))


def penrose_map(t: Tree | int, g_restricted: Graph) -> EdgeSubset:
    mask = t if isinstance(t, int) else t.mask
    return EdgeSubset(g_restricted, penrose_scheme().map_mask(g_restricted, mask))


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    n_subgraphs: int
    n_trees: int
    witness: EdgeSubset | None = None
    coverage: int | None = None
    message: str = ""

    def __bool__(self):
        return self.valid


def validate_scheme(g: Graph, m: SchemeMap, limits: Limits | None = None) -> ValidationReport:
    """Check that the intervals [tau, m(tau)] partition the connected spanning subgraphs.

    Every image must contain its tree and stay inside the edge set; then each
    connected spanning subgraph has to be covered exactly once. On failure
    the report carries a witness subgraph and how often it was covered.
    """
    if not g.is_connected():
        raise NotConnectedError("schemes are defined on connected graphs")
    subgraphs = connected_spanning_masks(g, limits)
    trees = spanning_tree_masks(g, limits)
    cover = dict.fromkeys(subgraphs, 0)
    for t in trees:
        image = m.map_mask(g, t)
        if t & ~image or image & ~g.full_mask:
            return ValidationReport(
                False, len(subgraphs), len(trees), EdgeSubset(g, t), None,
                f"image of tree {EdgeSubset(g, t).edges} does not contain it or leaves the graph",
            )
        extra = image & ~t
        sub = extra
        while True:
            cover[t | sub] += 1
            if sub == 0:
                break
            sub = (sub - 1) & extra
    for h in sorted(cover):
        if cover[h] != 1:
            return ValidationReport(
                False, len(subgraphs), len(trees), EdgeSubset(g, h), cover[h],
                f"connected spanning subgraph {EdgeSubset(g, h).edges} covered {cover[h]} times",
            )
    return ValidationReport(True, len(subgraphs), len(trees))


def require_valid(g: Graph, m: SchemeMap, limits: Limits | None = None) -> None:
    """Raise :class:`SchemeInvalidError` unless ``m`` is trusted or validates on ``g``."""
    if m.trusted:
        return
    report = validate_scheme(g, m, limits)
    if not report.valid:
        raise SchemeInvalidError(report.message, report.witness, report.coverage)


def is_scheme_closed(t: Tree, g: Graph, m: SchemeMap) -> bool:
    """Whether m(t) = t, with m acting on the restriction of ``g`` to t's vertices."""
    if t.graph != g:
        raise ValueError("tree belongs to a different graph")
    return m.image(t).mask == t.mask


@dataclass(frozen=True)
class PenroseCheck:
    lhs: Fraction | float
    rhs: Fraction | float
    equal: bool


def check_penrose_identity(
    g: Graph,
    weights,
    m: SchemeMap,
    exact: bool = True,
    limits: Limits | None = None,
) -> PenroseCheck:
    """Connected-subgraph weight sum against the tree sum with (1 + w) factors.

    ``weights`` is a sequence indexed by edge rank or a mapping from
    labelled edges. Exact mode works over a common denominator with integer
    arithmetic; ``exact=False`` uses floats and compares with
    ``FLOAT_TOLERANCE``.
    """
    require_valid(g, m, limits)
    w = weight_vector(g, weights)
    subgraphs = connected_spanning_masks(g, limits)
    trees = spanning_tree_masks(g, limits)
    images = [m.map_mask(g, t) for t in trees]
    if not exact:
        wf = [float(x) for x in w]
        lhs = math.fsum(math.prod(wf[i] for i in _bits(h)) for h in subgraphs)
        rhs = math.fsum(
            math.prod(wf[i] for i in _bits(t)) * math.prod(1.0 + wf[i] for i in _bits(img & ~t))
            for t, img in zip(trees, images)
        )
        return PenroseCheck(lhs, rhs, math.isclose(lhs, rhs, rel_tol=FLOAT_TOLERANCE, abs_tol=FLOAT_TOLERANCE))
    fw = [Fraction(x) for x in w]
    den = math.lcm(*(x.denominator for x in fw)) if fw else 1
    num = [int(x * den) for x in fw]
    m_edges = g.m
    dpow = [den**k for k in range(m_edges + 1)]
    # every term is scaled by den**m so the sums stay integral
    lhs_scaled = 0
    for h in subgraphs:
        p = 1
        for i in _bits(h):
            p *= num[i]
        lhs_scaled += p * dpow[m_edges - popcount(h)]
    rhs_scaled = 0
    for t, img in zip(trees, images):
        p = 1
        for i in _bits(t):
            p *= num[i]
        if not p:
            continue
        for i in _bits(img & ~t):
            p *= den + num[i]
        rhs_scaled += p * dpow[m_edges - popcount(img)]
    lhs = Fraction(lhs_scaled, dpow[m_edges])
    rhs = Fraction(rhs_scaled, dpow[m_edges])
    return PenroseCheck(lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------- registry
@functools.lru_cache(maxsize=None)
def penrose_scheme(max_vertices: int = 6) -> PenroseScheme:
    """Penrose scheme that passed validation on every connected graph up to ``max_vertices``.

    The ``parent-before-shallow`` orientation is tried first and the flipped
    one only if it fails.
    """
    from .generators import small_connected_graphs

    graphs = small_connected_graphs(max_vertices)
    failures = []
    for orientation in (PARENT_BEFORE_SHALLOW, PARENT_AFTER_SHALLOW):
        candidate = PenroseScheme(orientation)
        bad = next((g for g in graphs if not validate_scheme(g, candidate).valid), None)
        if bad is None:
            return PenroseScheme(orientation, trusted=True)
        failures.append((orientation, bad))
    raise SchemeInvalidError(f"no Penrose orientation validates: {failures}")


SCHEME_NAMES = ("minimal-tree", "penrose")


def get_scheme(name: str) -> SchemeMap:
    if name == "minimal-tree":
        return MinimalTreeScheme()
    if name == "penrose":
        return penrose_scheme()
    raise KeyError(f"unknown scheme {name!r}; choose from {', '.join(SCHEME_NAMES)}")

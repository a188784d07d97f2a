"""Polymer-gas form of the chromatic polynomial.

Polymers are connected vertex subsets with at least two vertices; the
activity of R is a_R / q^(|R|-1) where a_R is the signed count of connected
spanning subgraphs of g|R. Collections of pairwise disjoint polymers are
summed in powers of 1/q, never by numeric division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable

from . import kernels
from .chromatic import closed_tree_table, disjoint_collection_sum
from .errors import Limits, NotConnectedError, resolve
from .graph import ConnectedSubset, Graph, connected_subset_masks, popcount
from .polynomial import IntPolynomial, XiPolynomial
from .schemes import SchemeMap, require_valid


@dataclass(frozen=True)
class Activity:
    """z(R, q) = numerator / q**exponent."""

    numerator: int
    exponent: int

    def __call__(self, q) -> Fraction:
        return Fraction(self.numerator, 1) / Fraction(q) ** self.exponent

    def __str__(self):
        return f"{self.numerator}/q^{self.exponent}" if self.exponent != 1 else f"{self.numerator}/q"


def _subset_mask(g: Graph, r: ConnectedSubset | Iterable[Hashable] | int) -> int:
    if isinstance(r, ConnectedSubset):
        return r.mask
    if isinstance(r, int):
        return r
    return g.vertex_mask(r)


def activity(g: Graph, r, limits: Limits | None = None) -> Activity:
    """Activity by direct enumeration of the connected spanning subgraphs of g|R."""
    vm = _subset_mask(g, r)
    if popcount(vm) < 2:
        raise ValueError("polymers have at least two vertices")
    sub, _ = g.induced(vm)
    if not sub.is_connected():
        raise NotConnectedError("polymer must induce a connected subgraph")
    resolve(limits).check_edges(sub.m, "activity")
    eu, ev = sub.endpoints
    return Activity(kernels.signed_connected_sum(sub.n, eu, ev), sub.n - 1)


def activity_via_scheme(g: Graph, r, m: SchemeMap, limits: Limits | None = None) -> Activity:
    """Activity as (-1)^(|R|-1) times the number of spanning trees of g|R fixed by m."""
    vm = _subset_mask(g, r)
    if popcount(vm) < 2:
        raise ValueError("polymers have at least two vertices")
    sub, _ = g.induced(vm)
    if not sub.is_connected():
        raise NotConnectedError("polymer must induce a connected subgraph")
    resolve(limits).check_edges(sub.m, "activity")
    require_valid(sub, m, limits)
    eu, ev = sub.endpoints
    closed = sum(1 for t in kernels.spanning_tree_masks(sub.n, eu, ev) if m.map_mask(sub, t) == t)
    return Activity((-1) ** (sub.n - 1) * closed, sub.n - 1)


def activity_table(g: Graph, limits: Limits | None = None) -> dict[int, Activity]:
    """Activity of every polymer, keyed by vertex mask."""
    lim = resolve(limits)
    lim.check_edges(g.m, "activity table")
    return {r: activity(g, r, lim) for r in connected_subset_masks(g, lim)}


def xi(g: Graph, limits: Limits | None = None) -> XiPolynomial:
    """Hard-core polymer partition function as a polynomial in 1/q."""
    table = activity_table(g, limits)
    weights = {r: a.numerator for r, a in table.items() if a.numerator}
    return XiPolynomial(disjoint_collection_sum(g.n, weights))


def xi_via_scheme(g: Graph, m: SchemeMap, limits: Limits | None = None) -> XiPolynomial:
    """Same series with every activity replaced by its closed-tree form."""
    table = closed_tree_table(g, m, limits)
    weights = {r: (-1) ** (popcount(r) - 1) * len(ts) for r, ts in table.items()}
    return XiPolynomial(disjoint_collection_sum(g.n, weights))


def chromatic_via_polymer(g: Graph, limits: Limits | None = None) -> IntPolynomial:
    """q^n times the polymer partition function."""
    return xi(g, limits).times_q_power(g.n)

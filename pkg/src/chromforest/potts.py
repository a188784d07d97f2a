"""q-state Potts model on a graph, and the Mayer-expansion identities behind
the polymer representation.

Finite inverse temperatures use floats. The zero-temperature
antiferromagnet is a hard constraint (an edge contributes a factor 1 if its
ends differ and 0 otherwise) and is evaluated with exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import Limits, resolve
from .graph import Graph, _bits, popcount
from .polymer import activity

INF = math.inf
# configurations decoded per numpy chunk
_CHUNK = 1 << 20


@dataclass(frozen=True)
class SpinConfiguration:
    """Colors in ``1..q``, one per vertex in the graph's vertex order."""

    colors: tuple[int, ...]
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be at least 1")
        if any(not 1 <= c <= self.q for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.q}")

    @classmethod
    def from_mapping(cls, g: Graph, colors: Mapping[Hashable, int], q: int) -> "SpinConfiguration":
        missing = [v for v in g.vertices if v not in colors]
        if missing:
            raise ValueError(f"configuration is not total: missing {missing}")
        return cls(tuple(colors[v] for v in g.vertices), q)

    def restrict(self, g: Graph, vertices: Iterable[Hashable]) -> "SpinConfiguration":
        """Restriction to a vertex subset, in the graph's vertex order."""
        keep = g.vertex_mask(vertices)
        return SpinConfiguration(tuple(self.colors[i] for i in _bits(keep)), self.q)


@dataclass(frozen=True)
class PottsParameters:
    q: int
    beta: float
    J: float

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be at least 1")
        if not self.beta >= 0:
            raise ValueError("beta must be nonnegative or +inf")


def monochromatic_edges(g: Graph, colors: Sequence[int]) -> int:
    return sum(1 for u, v in g.edges if colors[u] == colors[v])


def hamiltonian(g: Graph, s: SpinConfiguration, J):
    """-J times the number of edges whose ends share a spin."""
    if len(s.colors) != g.n:
        raise ValueError("configuration must assign every vertex")
    return -J * monochromatic_edges(g, s.colors)


def energy_histogram(g: Graph, q: int, limits: Limits | None = None) -> list[int]:
    """``hist[j]`` = number of configurations in [q]^V with exactly j monochromatic edges.

    Every one of the q^n configurations is decoded and scored.
    """
    n = g.n
    total = q**n
    resolve(limits).check_budget(total, "configuration enumeration")
    hist = np.zeros(g.m + 1, dtype=np.int64)
    if total == 0:
        return hist.tolist()
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    powers = q ** np.arange(n, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        spins = (idx[:, None] // powers[None, :]) % q
        if g.m:
            mono = (spins[:, eu] == spins[:, ev]).sum(axis=1)
        else:
            mono = np.zeros(len(idx), dtype=np.int64)
        hist += np.bincount(mono, minlength=g.m + 1)
    return [int(x) for x in hist]


def partition_function(g: Graph, p: PottsParameters, limits: Limits | None = None):
    """Sum over all configurations of exp(-beta H).

    ``beta = inf`` is only meaningful for J < 0, where it is the exact count
    of proper configurations; J = 0 gives q^n at any beta.
    """
    if p.J == 0:
        return p.q**g.n
    if math.isinf(p.beta):
        if p.J < 0:
            return zero_temperature_antiferromagnetic(g, p.q, limits)
        raise ValueError("ferromagnetic partition function diverges at beta = inf")
    hist = energy_histogram(g, p.q, limits)
    # -beta H = beta J j for a configuration with j monochromatic edges
    return math.fsum(c * math.exp(p.beta * p.J * j) for j, c in enumerate(hist) if c)


def probability(g: Graph, s: SpinConfiguration, p: PottsParameters, z: float | None = None):
    """Boltzmann weight over Z; exact (uniform over proper colorings) at beta = inf."""
    if math.isinf(p.beta):
        if p.J >= 0:
            raise ValueError("zero-temperature probabilities need J < 0")
        z = partition_function(g, p) if z is None else z
        if z == 0:
            raise ValueError("no proper configuration exists at this q")
        return Fraction(1, z) if monochromatic_edges(g, s.colors) == 0 else Fraction(0)
    z = partition_function(g, p) if z is None else z
    return math.exp(-p.beta * hamiltonian(g, s, p.J)) / z


def total_probability(g: Graph, p: PottsParameters, limits: Limits | None = None) -> float:
    """Sum of Prob over every configuration (should be 1)."""
    z = partition_function(g, p, limits)
    hist = energy_histogram(g, p.q, limits)
    if math.isinf(p.beta):
        if z == 0:
            raise ValueError("no proper configuration exists at this q")
        return Fraction(hist[0], z)
    return math.fsum(c * math.exp(p.beta * p.J * j) / z for j, c in enumerate(hist) if c)


def zero_temperature_antiferromagnetic(g: Graph, q: int, limits: Limits | None = None) -> int:
    """Number of configurations with no monochromatic edge, by full enumeration."""
    if q == 0:
        return 1 if g.n == 0 else 0
    return energy_histogram(g, q, limits)[0]


def partition_table(g: Graph, q: int, J: float, betas: Iterable[float], limits: Limits | None = None) -> list[dict]:
    rows = []
    for beta in betas:
        z = partition_function(g, PottsParameters(q, beta, J), limits)
        rows.append({"q": q, "beta": beta, "J": J, "Z": z})
    return rows


# ------------------------------------------------------- Mayer expansion
def mayer_factor(is_edge: bool, same_spin: bool) -> int:
    """exp(-J_xy delta) - 1 with J_xy = +inf on edges, 0 elsewhere, and 0 * inf = 0."""
    if not is_edge:
        return 0
    return -1 if same_spin else 0


def _subset_and_colors(g: Graph, r, s_r) -> tuple[int, list[int]]:
    vm = r if isinstance(r, int) else g.vertex_mask(r)
    verts = list(_bits(vm))
    if isinstance(s_r, SpinConfiguration):
        colors = list(s_r.colors)
    elif isinstance(s_r, Mapping):
        colors = [s_r[g.labels[v]] for v in verts]
    else:
        colors = list(s_r)
    if len(colors) != len(verts):
        raise ValueError("spin configuration must cover exactly the subset")
    return vm, colors


def rho(g: Graph, r, s_r, limits: Limits | None = None) -> int:
    """Sum over connected graphs on R of the product of Mayer factors.

    Only pairs that are edges of g with equal spins have a nonzero factor
    (-1), so this is the signed count of connected spanning subgraphs of g|R
    built from monochromatic edges. ``s_r`` lists spins in vertex order, or
    maps labels to spins.
    """
    vm, colors = _subset_and_colors(g, r, s_r)
    if popcount(vm) < 2:
        raise ValueError("rho needs at least two vertices")
    sub, _ = g.induced(vm)
    resolve(limits).check_edges(sub.m, "rho")
    eu = [u for u, v in sub.edges if colors[u] == colors[v]]
    ev = [v for u, v in sub.edges if colors[u] == colors[v]]
    return kernels.signed_connected_sum(sub.n, eu, ev)


def rho_literal(g: Graph, r, s_r) -> int:
    """Sum over every connected graph on R with all pairs of R as candidate edges.

    Meant for |R| <= 5; pairs that are not edges of g are scored with
    their (zero) Mayer factor instead of being skipped.
    """
    vm, colors = _subset_and_colors(g, r, s_r)
    verts = list(_bits(vm))
    k = len(verts)
    if k < 2:
        raise ValueError("rho needs at least two vertices")
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    adj = g.adjacency
    factors = [
        mayer_factor(bool((adj[verts[i]] >> verts[j]) & 1), colors[i] == colors[j]) for i, j in pairs
    ]
    total = 0
    for h in kernels.connected_spanning_masks(k, [i for i, _ in pairs], [j for _, j in pairs]):
        term = 1
        for b in _bits(h):
            term *= factors[b]
            if not term:
                break
        total += term
    return total


@dataclass(frozen=True)
class MayerCheck:
    lhs: int
    rhs: int
    equal: bool


def check_mayer_identity(g: Graph, r, q: int, limits: Limits | None = None) -> MayerCheck:
    """Sum of rho over all q^|R| spin assignments of R against q * a_R (0 if g|R is disconnected)."""
    vm = r if isinstance(r, int) else g.vertex_mask(r)
    k = popcount(vm)
    resolve(limits).check_budget(q**k, "Mayer identity")
    lhs = sum(rho(g, vm, colors, limits) for colors in product(range(1, q + 1), repeat=k))
    sub, _ = g.induced(vm)
    rhs = q * activity(g, vm, limits).numerator if sub.is_connected() else 0
    return MayerCheck(lhs, rhs, lhs == rhs)


def chromatic_value_via_mayer(g: Graph, q: int, limits: Limits | None = None) -> Fraction:
    """P(q) assembled from spin-summed rho over disjoint vertex subsets of size >= 2.

    Every subset is included, connected or not, exactly as the expansion of
    the Boltzmann factor produces them; disconnected ones contribute zero.
    """
    if q < 1:
        raise ValueError("the spin sum needs q >= 1")
    n = g.n
    lim = resolve(limits)
    weight: dict[int, Fraction] = {}
    for vm in range(1, 1 << n):
        k = popcount(vm)
        if k < 2:
            continue
        lim.check_budget(q**k, "Mayer assembly")
        s = sum(rho(g, vm, colors, lim) for colors in product(range(1, q + 1), repeat=k))
        if s:
            weight[vm] = Fraction(s, q**k)

    memo = {0: Fraction(1)}

    def solve(free: int) -> Fraction:
        if free in memo:
            return memo[free]
        low = free & -free
        total = solve(free & ~low)
        for vm, w in weight.items():
            if vm & low and not vm & ~free:
                total += w * solve(free & ~vm)
        memo[free] = total
        return total

    return Fraction(q) ** n * solve((1 << n) - 1)

import random
from itertools import product

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromforest.chromatic import (
    ForestLevelCounts,
    canonical_key,
    chromatic_brute,
    chromatic_classical,
    chromatic_scheme,
    chromatic_whitney,
    count_proper_colorings,
    deletion_contraction,
    enumerate_broken_circuit_free_forests,
    enumerate_scheme_forests,
    forest_level_counts,
    interpolate,
)
from chromforest.errors import BudgetExceededError, GraphTooLargeError, Limits, SchemeInvalidError
from chromforest.generators import complete, cycle, edgeless, path, star
from chromforest.graph import Graph, broken_circuits, enumerate_forests, is_broken_circuit_free
from chromforest.polynomial import IntPolynomial
from chromforest.schemes import MinimalTreeScheme, identity_scheme, is_scheme_closed, penrose_scheme

from conftest import graphs, labelled_c4

K3 = IntPolynomial((0, 2, -3, 1))
C4 = IntPolynomial((0, -3, 6, -4, 1))
K2 = IntPolynomial((0, -1, 1))
MT = MinimalTreeScheme()


def naive_colorings(g, q):
    """Independent oracle: itertools over every assignment."""
    return sum(
        1 for colors in product(range(q), repeat=g.n) if all(colors[u] != colors[v] for u, v in g.edges)
    )


def tree_poly(n):
    return IntPolynomial((0, 1)) * _power(IntPolynomial((-1, 1)), n - 1)


def _power(p, k):
    out = IntPolynomial((1,))
    for _ in range(k):
        out = out * p
    return out


ROUTES = {
    "classical": chromatic_classical,
    "whitney": chromatic_whitney,
    "minimal-tree": lambda g: chromatic_scheme(g, MT),
    "penrose": lambda g: chromatic_scheme(g, penrose_scheme()),
    "deletion-contraction": deletion_contraction,
    "brute": chromatic_brute,
}


class TestConcreteValues:
    @pytest.mark.parametrize("route", ROUTES)
    def test_k2(self, route):
        assert ROUTES[route](complete(2)) == K2

    @pytest.mark.parametrize("route", ROUTES)
    def test_k3(self, route):
        assert ROUTES[route](complete(3)) == K3

    @pytest.mark.parametrize("route", ROUTES)
    def test_c4(self, route):
        assert ROUTES[route](cycle(4)) == C4

    @pytest.mark.parametrize("route", ROUTES)
    def test_edgeless(self, route):
        assert ROUTES[route](edgeless(4)) == IntPolynomial.monomial(4)

    @pytest.mark.parametrize("route", ROUTES)
    def test_trees(self, route):
        for g in (path(5), star(6)):
            assert ROUTES[route](g) == tree_poly(g.n)

    @pytest.mark.parametrize("route", ROUTES)
    def test_complete_is_falling_factorial(self, route):
        assert ROUTES[route](complete(5)) == IntPolynomial.falling_factorial(5)

    def test_c4_closed_form(self):
        q1 = IntPolynomial((-1, 1))
        assert deletion_contraction(cycle(4)) == _power(q1, 4) + q1

    def test_empty_graph(self):
        assert chromatic_classical(Graph.from_edges([])) == IntPolynomial((1,))


class TestForestSets:
    def test_k3_whitney_forests(self, k3):
        forests = enumerate_broken_circuit_free_forests(k3)
        assert sorted(len(f) for f in forests) == [0, 1, 1, 1, 2, 2]
        assert 0b011 not in {f.mask for f in forests}

    def test_k3_scheme_forests(self, k3):
        masks = {f.mask for f in enumerate_scheme_forests(k3, MT)}
        assert masks == {0, 0b001, 0b010, 0b100, 0b101, 0b110}

    def test_edgeless(self):
        assert [f.mask for f in enumerate_scheme_forests(edgeless(3), MT)] == [0]

    def test_c4_scheme_forests(self):
        g = labelled_c4()
        forests = enumerate_scheme_forests(g, MT)
        assert len(forests) == 14
        assert 0b0111 not in {f.mask for f in forests}

    def test_every_tree_closed(self, connected_le6):
        for g in connected_le6[::5]:
            for m in (MT, penrose_scheme()):
                for f in enumerate_scheme_forests(g, m):
                    assert all(is_scheme_closed(t, g, m) for t in f.trees)

    def test_whitney_forests_against_definition(self, connected_le6):
        for g in connected_le6[::3]:
            bc = broken_circuits(g)
            expected = {f.mask for f in enumerate_forests(g) if is_broken_circuit_free(f, bc)}
            assert {f.mask for f in enumerate_broken_circuit_free_forests(g)} == expected

    def test_minimal_tree_equals_whitney(self, connected_le6):
        for g in connected_le6:
            a = {f.mask for f in enumerate_scheme_forests(g, MT)}
            b = {f.mask for f in enumerate_broken_circuit_free_forests(g)}
            assert a == b

    def test_invalid_scheme_rejected(self, k3):
        with pytest.raises(SchemeInvalidError):
            chromatic_scheme(k3, identity_scheme())


class TestLevelCounts:
    def test_examples(self):
        assert tuple(forest_level_counts(complete(3))) == (1, 3, 2)
        assert tuple(forest_level_counts(cycle(4))) == (1, 4, 6, 3)
        assert tuple(forest_level_counts(complete(2))) == (1, 1)

    def test_both_schemes(self):
        for g in (complete(3), cycle(4), complete(2)):
            assert forest_level_counts(g, MT) == forest_level_counts(g, penrose_scheme())

    def test_invariants(self):
        with pytest.raises(ValueError):
            ForestLevelCounts((2, 1))
        with pytest.raises(ValueError):
            ForestLevelCounts((1, -1))

    def test_match_coefficients(self, connected_le6):
        for g in connected_le6[::4]:
            p = chromatic_classical(g)
            counts = forest_level_counts(g)
            assert all(abs(p.coeff(g.n - k)) == counts[k] for k in range(len(counts)))

    def test_random_orders_same_counts(self, connected_le6):
        rng = random.Random(11)
        for g in connected_le6[-30:]:
            base = forest_level_counts(g)
            for _ in range(3):
                perm = list(range(g.m))
                rng.shuffle(perm)
                assert forest_level_counts(g.with_permuted_order(perm)) == base


class TestColorings:
    def test_examples(self):
        assert count_proper_colorings(complete(3), 3) == 6
        assert count_proper_colorings(complete(2), 1) == 0
        assert count_proper_colorings(cycle(5), 0) == 0
        assert count_proper_colorings(edgeless(0), 0) == 1

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            count_proper_colorings(path(10), 10, Limits(coloring_budget=10**9))

    @given(graphs(max_n=6), st.integers(0, 4))
    def test_against_naive(self, g, q):
        assert count_proper_colorings(g, q) == naive_colorings(g, q)

    def test_interpolate(self):
        p = IntPolynomial((3, -1, 0, 2))
        assert interpolate([p(q) for q in range(5)]) == p


class TestProperties:
    @given(graphs(max_n=7))
    def test_routes_agree(self, g):
        p = chromatic_classical(g)
        for route in ("whitney", "minimal-tree", "penrose", "deletion-contraction"):
            assert ROUTES[route](g) == p
        assert p.degree == g.n and p.coeff(g.n) == 1
        assert p.has_alternating_signs()

    @given(graphs(max_n=7))
    def test_evaluation(self, g):
        p = chromatic_whitney(g)
        for q in range(g.n + 2):
            assert p(q) == count_proper_colorings(g, q)

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    def test_whitney_order_independent(self, g, r):
        perm = list(range(g.m))
        r.shuffle(perm)
        assert chromatic_whitney(g.with_permuted_order(perm)) == chromatic_whitney(g)

    @given(graphs(max_n=4), graphs(max_n=4))
    def test_multiplicative_over_components(self, a, b):
        shift = a.n
        edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
        union = Graph.from_edges(edges, vertices=range(a.n + b.n))
        expected = chromatic_classical(a) * chromatic_classical(b)
        for route in ("classical", "whitney", "minimal-tree", "penrose", "deletion-contraction"):
            assert ROUTES[route](union) == expected

    def test_against_networkx_chromatic_polynomial(self):
        # independent symbolic implementation
        sympy = pytest.importorskip("sympy")
        rng = random.Random(2)
        x = sympy.Symbol("x")
        for _ in range(5):
            n = rng.randint(3, 6)
            h = nx.gnp_random_graph(n, 0.5, seed=rng.randint(0, 10**6))
            g = Graph.from_edges(list(h.edges()), vertices=range(n))
            poly = sympy.Poly(nx.chromatic_polynomial(h), x)
            assert chromatic_whitney(g) == IntPolynomial(reversed([int(c) for c in poly.all_coeffs()]))


class TestDeletionContraction:
    def test_key_is_isomorphism_invariant(self):
        rng = random.Random(4)
        for _ in range(30):
            h = nx.gnp_random_graph(7, 0.4, seed=rng.randint(0, 10**6))
            perm = list(range(7))
            rng.shuffle(perm)
            a = Graph.from_edges(list(h.edges()), vertices=range(7))
            b = Graph.from_edges([(perm[u], perm[v]) for u, v in h.edges()], vertices=range(7))
            assert canonical_key(a.adjacency) == canonical_key(b.adjacency)

    def test_key_separates_non_isomorphic(self):
        assert canonical_key(path(4).adjacency) != canonical_key(star(4).adjacency)

    def test_limits(self):
        with pytest.raises(GraphTooLargeError):
            deletion_contraction(complete(6), Limits(max_edges=10))

    def test_petersen(self):
        g = Graph.from_edges(list(nx.petersen_graph().edges()))
        p = deletion_contraction(g)
        assert p == chromatic_whitney(g)
        assert p(3) == 120

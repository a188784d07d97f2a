"""Chromatic polynomials through forests, partition schemes and polymer gases."""

from .chromatic import (
    ForestLevelCounts,
    chromatic_brute,
    chromatic_classical,
    chromatic_scheme,
    chromatic_whitney,
    count_proper_colorings,
    deletion_contraction,
    enumerate_broken_circuit_free_forests,
    enumerate_scheme_forests,
    forest_level_counts,
)
from .errors import (
    BudgetExceededError,
    ChromForestError,
    GraphFormatError,
    GraphTooLargeError,
    Limits,
    NonSimpleGraphError,
    NotConnectedError,
    NotSpanningError,
    SchemeInvalidError,
    VertexNotInTreeError,
)
from .graph import (
    Circuit,
    ConnectedSubset,
    EdgeSubset,
    Forest,
    Graph,
    Tree,
    broken_circuits,
    enumerate_connected_spanning_subgraphs,
    enumerate_connected_subsets,
    enumerate_spanning_trees,
    restrict,
    tree_path,
)
from .io import load_graph, parse_dimacs, parse_edge_list
from .kernels import BACKEND
from .polymer import Activity, activity, activity_via_scheme, chromatic_via_polymer, xi
from .polynomial import IntPolynomial, XiPolynomial
from .potts import PottsParameters, SpinConfiguration, hamiltonian, partition_function, rho
from .schemes import (
    CustomScheme,
    MinimalTreeScheme,
    PenroseScheme,
    SchemeMap,
    check_penrose_identity,
    get_scheme,
    penrose_scheme,
    validate_scheme,
)

__version__ = "0.1.0"

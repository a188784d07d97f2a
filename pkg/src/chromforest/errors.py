"""Exception hierarchy and enumeration limits."""

from __future__ import annotations

import os
from dataclasses import dataclass


class ChromForestError(Exception):
    """Base class for all errors raised by this package."""


class NonSimpleGraphError(ChromForestError, ValueError):
    pass


class GraphFormatError(ChromForestError, ValueError):
    """Input text could not be parsed as a graph or an edge order."""


class GraphTooLargeError(ChromForestError):
    pass


class BudgetExceededError(ChromForestError):
    pass


class NotConnectedError(ChromForestError, ValueError):
    pass


class NotSpanningError(ChromForestError, ValueError):
    pass


class VertexNotInTreeError(ChromForestError, KeyError):
    pass


class SchemeInvalidError(ChromForestError):
    """A partition scheme failed validation; ``witness`` holds the offending edge subset."""

    def __init__(self, message: str, witness=None, coverage: int | None = None):
        super().__init__(message)
        self.witness = witness
        self.coverage = coverage


ENV_MAX_VERTICES = "CHROMFOREST_MAX_VERTICES"
ENV_MAX_EDGES = "CHROMFOREST_MAX_EDGES"
ENV_COLORING_BUDGET = "CHROMFOREST_COLORING_BUDGET"

# Edge subsets are packed into 64-bit words by the compiled kernels.
HARD_MAX_EDGES = 63


@dataclass(frozen=True)
class Limits:
    """Caps on exhaustive enumeration. Exceeding one raises, never truncates."""

    max_vertices: int = 20
    max_edges: int = 32
    coloring_budget: int = 10**8

    def check_vertices(self, n: int, what: str = "enumeration") -> None:
        if n > self.max_vertices:
            raise GraphTooLargeError(
                f"{what}: graph has {n} vertices, limit is {self.max_vertices}"
            )

    def check_edges(self, m: int, what: str = "enumeration") -> None:
        if m > min(self.max_edges, HARD_MAX_EDGES):
            raise GraphTooLargeError(
                f"{what}: graph has {m} edges, limit is {min(self.max_edges, HARD_MAX_EDGES)}"
            )

    def check_budget(self, configurations: int, what: str = "coloring enumeration") -> None:
        if configurations > self.coloring_budget:
            raise BudgetExceededError(
                f"{what}: {configurations} configurations exceed budget {self.coloring_budget}"
            )


def limits_from_env(environ=None) -> Limits:
    env = os.environ if environ is None else environ
    kwargs = {}
    for key, field in (
        (ENV_MAX_VERTICES, "max_vertices"),
        (ENV_MAX_EDGES, "max_edges"),
        (ENV_COLORING_BUDGET, "coloring_budget"),
    ):
        if env.get(key):
            kwargs[field] = int(env[key])
    return Limits(**kwargs)


DEFAULT_LIMITS = limits_from_env()


def resolve(limits: Limits | None) -> Limits:
    return DEFAULT_LIMITS if limits is None else limits

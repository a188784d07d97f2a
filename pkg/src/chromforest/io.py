"""Graph ingestion (edge lists, DIMACS ``.col``) and edge-order files."""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError, NonSimpleGraphError
from .graph import Graph

FORMATS = ("edgelist", "dimacs")


def _token(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_edge_list(text: str) -> Graph:
    """One ``u v`` pair per line; ``#`` starts a comment.

    A line with a single token declares an isolated vertex. Integer-looking
    tokens become ints, everything else stays a string.
    """
    vertices: dict = {}
    edges = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) == 1:
            vertices.setdefault(_token(parts[0]), None)
        elif len(parts) == 2:
            u, v = _token(parts[0]), _token(parts[1])
            vertices.setdefault(u, None)
            vertices.setdefault(v, None)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
    try:
        order = sorted(vertices)
    except TypeError:
        order = list(vertices)
    try:
        return Graph.from_edges(edges, vertices=order)
    except NonSimpleGraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_dimacs(text: str) -> Graph:
    """DIMACS graph coloring format: ``c`` comments, ``p edge n m``, ``e u v`` with 1-based vertices."""
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer size") from None
        elif tag == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex outside 1..{n}")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if declared_m != len(edges):
        raise GraphFormatError(f"problem line declares {declared_m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(edges, vertices=range(1, n + 1))
    except NonSimpleGraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise GraphFormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def guess_format(path: str | Path) -> str:
    return "dimacs" if str(path).endswith((".col", ".dimacs")) else "edgelist"


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text, fmt or guess_format(path))


def apply_edge_order(g: Graph, text: str) -> Graph:
    """Re-rank edges from a file listing every edge once, smallest first, as ``u v`` lines."""
    order = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge order line {lineno}: expected 'u v'")
        order.append((_token(parts[0]), _token(parts[1])))
    try:
        return g.with_edge_order(order)
    except (KeyError, ValueError) as exc:
        raise GraphFormatError(f"bad edge order: {exc}") from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.labelled_edges()]
    touched = g.mask_vertices(g.full_mask)
    lines += [str(g.labels[i]) for i in range(g.n) if not (touched >> i) & 1]
    return "\n".join(lines) + "\n"

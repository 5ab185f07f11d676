"""Graph serialization: DIMACS ("p edge" / "e u v") and plain edge lists.

DIMACS ids are 1-based on the wire and converted to 0-based internally.
The edge-list format is "N" on the first line, then one "u v" pair per
line with 0-based ids.  Emission is deterministic: edges ascending.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph, build_graph

DIMACS = "dimacs"
EDGELIST = "edgelist"
FORMATS = (DIMACS, EDGELIST)


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def sniff_format(data: bytes | str) -> str:
    """Guess the serialization format from the first meaningful line."""
    for raw in _as_text(data).splitlines():
        line = raw.strip()
        if not line:
            continue
        if line[0] in "cp":
            return DIMACS
        tokens = line.split()
        if len(tokens) == 1 and tokens[0].isdigit():
            return EDGELIST
        raise ParseError(f"cannot sniff graph format from line {line!r}")
    raise ParseError("cannot sniff graph format: input is empty")


def _parse_dimacs(text: str) -> Graph:
    n_vertices = None
    declared_edges = None
    header_line = None
    raw_edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header_line is not None:
                raise ParseError("duplicate problem line", line=lineno)
            if len(tokens) != 4:
                raise ParseError(f"malformed problem line {line!r}", line=lineno)
            try:
                n_vertices = int(tokens[2])
                declared_edges = int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed problem line {line!r}", line=lineno) from None
            header_line = lineno
        elif tokens[0] == "e":
            if header_line is None:
                raise ParseError("edge line before problem line", line=lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", line=lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line=lineno) from None
            raw_edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", line=lineno)
    if header_line is None or n_vertices is None:
        raise ParseError("missing problem line")
    if len(raw_edges) != declared_edges:
        raise ParseError(
            f"problem line declares {declared_edges} edges but {len(raw_edges)} found",
            line=header_line,
        )
    return build_graph(n_vertices, raw_edges)


def _parse_edgelist(text: str) -> Graph:
    n_vertices = None
    raw_edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if n_vertices is None:
            if len(tokens) != 1:
                raise ParseError(f"expected a vertex count, got {line!r}", line=lineno)
            try:
                n_vertices = int(tokens[0])
            except ValueError:
                raise ParseError(f"expected a vertex count, got {line!r}", line=lineno) from None
        else:
            if len(tokens) != 2:
                raise ParseError(f"malformed edge line {line!r}", line=lineno)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", line=lineno) from None
            raw_edges.append((u, v))
    if n_vertices is None:
        raise ParseError("empty edge-list input")
    return build_graph(n_vertices, raw_edges)


def parse_graph(text: bytes | str, fmt: str) -> Graph:
    """Parse a graph from `text` in the given format (DIMACS or EDGELIST)."""
    if fmt == DIMACS:
        return _parse_dimacs(_as_text(text))
    if fmt == EDGELIST:
        return _parse_edgelist(_as_text(text))
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> bytes:
    """Serialize deterministically (edges sorted ascending)."""
    if fmt == DIMACS:
        lines = [f"p edge {g.n_vertices} {g.n_edges}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    elif fmt == EDGELIST:
        lines = [str(g.n_vertices)]
        lines.extend(f"{u} {v}" for u, v in g.edges)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    return ("\n".join(lines) + "\n").encode("utf-8")

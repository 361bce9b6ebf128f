"""DIMACS ``.col`` and JSON serialization for graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DimacsParseError
from .graph import Graph


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise DimacsParseError(lineno, f"{what} is not an integer: {token!r}") from None


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text into a :class:`Graph`.

    Accepts ``c`` comment lines, exactly one ``p edge N M`` header (``p col``
    is tolerated), and ``e U V`` lines with 1-based indices. Duplicate edges
    and reversed orientations collapse; the declared ``M`` is not enforced
    because many published files count both orientations.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError(lineno, f"malformed header {line!r}; expected 'p edge <n> <m>'")
            n = _int(parts[2], lineno, "vertex count")
            m = _int(parts[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise DimacsParseError(lineno, "negative count in header")
        elif tag == "e":
            if n is None:
                raise DimacsParseError(lineno, "edge line before problem line")
            if len(parts) != 3:
                raise DimacsParseError(lineno, f"malformed edge line {line!r}")
            u = _int(parts[1], lineno, "edge endpoint")
            v = _int(parts[2], lineno, "edge endpoint")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(lineno, f"edge index out of range (n={n}): {line!r}")
            if u == v:
                raise DimacsParseError(lineno, f"self-loop not allowed in a simple graph: {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(0, "missing problem line 'p edge <n> <m>'")
    return Graph(n, edges)


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    return json.dumps(g.to_json())


def graph_from_json(text: str) -> Graph:
    return Graph.from_json(json.loads(text))


def read_graph(path: str | Path) -> Graph:
    """Load a graph file; ``.json`` uses the JSON form, anything else DIMACS."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return graph_from_json(text)
    return parse_dimacs(text)

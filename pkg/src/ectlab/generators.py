"""Named graph catalog and seeded random generators."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ContractViolation, UnknownGraphError
from .graph import Graph, complete_graph

# Vertex labels of split-K5: a, b, c, d form a K4; u sees {a, b}, v sees {c, d}.
SPLIT_K5_LABELS = ("a", "b", "c", "d", "u", "v")
SPLIT_K5_PAIR = (4, 5)


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def _split_k5() -> Graph:
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    return Graph(6, k4 + [(4, 0), (4, 1), (5, 2), (5, 3)])


def catalog_names() -> list[str]:
    """Every name accepted by :func:`named_graph`, in a fixed order."""
    return (
        [f"K{i}" for i in range(1, 9)]
        + [f"C{i}" for i in range(3, 13)]
        + [f"P{i}" for i in range(2, 13)]
        + ["K3,3", "petersen", "split-K5"]
    )


def named_graph(name: str) -> Graph:
    """Build a graph from the catalog.

    ``Kn`` (1..8) is complete, ``Cn`` (3..12) the cycle 0-1-...-(n-1)-0, ``Pn``
    (2..12) the path on n vertices, ``K3,3`` has sides {0,1,2} and {3,4,5},
    ``petersen`` has outer cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2)%5)
    and spokes i ~ 5+i, and ``split-K5`` is K4 on 0..3 plus vertex 4 adjacent
    to {0,1} and vertex 5 adjacent to {2,3}.
    """
    if name in ("K3,3", "K33"):
        return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    if name == "petersen":
        return _petersen()
    if name == "split-K5":
        return _split_k5()
    match = re.fullmatch(r"([KCP])(\d+)", name)
    if match:
        kind, size = match.group(1), int(match.group(2))
        if kind == "K" and 1 <= size <= 8:
            return complete_graph(size)
        if kind == "C" and 3 <= size <= 12:
            return _cycle(size)
        if kind == "P" and 2 <= size <= 12:
            return _path(size)
    raise UnknownGraphError(f"unknown graph {name!r}; catalog: {', '.join(catalog_names())}")


def generate_random_planar(n: int, seed: int) -> Graph:
    """Random maximal planar graph by incremental triangulation.

    Starts from the triangle 0-1-2 (two triangular faces) and inserts vertex
    ``i`` into a uniformly chosen face, joining it to that face's corners.
    The result always has ``3n - 6`` edges.
    """
    if n < 3:
        raise ContractViolation(f"generate_random_planar needs n >= 3, got {n}")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        idx = rng.randrange(len(faces))
        a, b, c = faces[idx]
        faces[idx] = (a, b, v)
        faces.extend([(b, c, v), (c, a, v)])
        edges.extend([(a, v), (b, v), (c, v)])
    return Graph(n, edges)


def subsample_edges(g: Graph, p: float, seed: int) -> Graph:
    """Delete each edge independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"deletion probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(g.n, [e for e in g.edges if rng.random() >= p])


def generate_sparse_planar(n: int, seed: int, p: float) -> Graph:
    """Maximal planar graph with each edge then deleted with probability ``p``."""
    rng = random.Random(seed)
    base = generate_random_planar(n, rng.getrandbits(64))
    return subsample_edges(base, p, rng.getrandbits(64))


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs are visited in lexicographic order."""
    if n < 0:
        raise ContractViolation(f"vertex count must be non-negative, got {n}")
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


GENERATORS = ("maximal", "subsample", "gnp")


@dataclass(frozen=True)
class GraphSource:
    """Where a graph came from, precise enough to rebuild it.

    ``kind`` is ``file``, ``named`` or ``generated``. For generated graphs
    ``detail`` is ``(generator, n, seed)`` or ``(generator, n, seed, p)``.
    """

    kind: str
    detail: str | tuple

    def resolve(self) -> Graph:
        if self.kind == "named":
            return named_graph(str(self.detail))
        if self.kind == "file":
            from .io import read_graph

            return read_graph(Path(str(self.detail)))
        if self.kind == "generated":
            gen, n, seed, *rest = self.detail
            if gen == "maximal":
                return generate_random_planar(n, seed)
            if gen == "subsample":
                return generate_sparse_planar(n, seed, rest[0])
            if gen == "gnp":
                return generate_gnp(n, rest[0], seed)
            raise ContractViolation(f"unknown generator {gen!r}; expected one of {GENERATORS}")
        raise ContractViolation(f"unknown source kind {self.kind!r}")

    def to_json(self) -> dict:
        if self.kind != "generated":
            return {"kind": self.kind, "name" if self.kind == "named" else "path": str(self.detail)}
        gen, n, seed, *rest = self.detail
        out = {"kind": "generated", "generator": gen, "n": n, "seed": seed}
        if rest:
            out["p"] = rest[0]
        return out

    @classmethod
    def from_json(cls, data: dict) -> GraphSource:
        kind = data["kind"]
        if kind == "named":
            return cls("named", data["name"])
        if kind == "file":
            return cls("file", data["path"])
        detail = (data["generator"], data["n"], data["seed"])
        if "p" in data:
            detail += (data["p"],)
        return cls("generated", detail)

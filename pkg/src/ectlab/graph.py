"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one Python int bitmask per vertex, so neighborhood
unions and pairwise adjacency tests are single integer operations. The
exact solver and the minor search lean on this heavily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import ContractViolation

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``edges`` is normalized on construction: each pair is stored as
    ``(min, max)``, duplicates (in either orientation) collapse, and the
    tuple is sorted. Self-loops and out-of-range endpoints are rejected.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _adj: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ContractViolation(f"vertex count must be non-negative, got {self.n}")
        norm: set[Edge] = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ContractViolation(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        edges = tuple(sorted(norm))
        adj = [0] * self.n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        return cls(len(masks), [(u, v) for u, m in enumerate(masks) for v in iter_bits(m) if u < v])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood bitmask of every vertex."""
        return self._adj

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.n

    def remove_edge(self, u: int, v: int) -> Graph:
        key = (min(u, v), max(u, v))
        if key not in set(self.edges):
            raise ContractViolation(f"edge {key} not in graph")
        return Graph(self.n, [e for e in self.edges if e != key])

    def remove_vertex(self, v: int) -> Graph:
        """Delete ``v``; vertices above it shift down by one."""
        if not self.has_vertex(v):
            raise ContractViolation(f"vertex {v} out of range for n={self.n}")

        def shift(x: int) -> int:
            return x - 1 if x > v else x

        return Graph(self.n - 1, [(shift(a), shift(b)) for a, b in self.edges if v not in (a, b)])

    def induced(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on ``keep``, relabeled in ascending order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(index[a], index[b]) for a, b in self.edges if a in index and b in index])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = reachable(self._adj, 1 << s, self.all_mask)
            seen |= comp
            out.append(list(iter_bits(comp)))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


def reachable(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` moving only through ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    """True iff the vertices in ``mask`` induce a connected subgraph."""
    if not mask:
        return False
    return reachable(adj, mask & -mask, mask) == mask


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def is_complete(g: Graph) -> bool:
    """True iff every pair of distinct vertices is adjacent."""
    return g.m == g.n * (g.n - 1) // 2


def identify_vertices(g: Graph, u: int, v: int) -> Graph:
    """Merge the non-adjacent vertices ``u`` and ``v`` into one.

    The merged vertex sits in slot ``min(u, v)`` and inherits the union of
    both neighborhoods; parallel edges collapse. Vertices above
    ``max(u, v)`` shift down by one, everything else keeps its label.
    """
    if not (g.has_vertex(u) and g.has_vertex(v)):
        raise ContractViolation(f"vertex out of range: ({u}, {v}) for n={g.n}")
    if u == v:
        raise ContractViolation(f"cannot identify vertex {u} with itself")
    if g.adjacent(u, v):
        raise ContractViolation(f"vertices {u} and {v} are adjacent; identification would create a loop")
    keep, gone = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == gone:
            return keep
        return x - 1 if x > gone else x

    return Graph(g.n - 1, [(relabel(a), relabel(b)) for a, b in g.edges])

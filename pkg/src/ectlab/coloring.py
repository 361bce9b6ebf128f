"""Proper colorings, exact chromatic number and minimal-coloring enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContractViolation
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color map whose used colors are exactly ``0..k-1``."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        if any(c < 0 for c in colors):
            raise ContractViolation("color indices must be non-negative")
        if set(colors) != set(range(len(set(colors)))):
            raise ContractViolation(f"colors are not contiguous from 0: {sorted(set(colors))}")
        object.__setattr__(self, "colors", colors)

    @property
    def k(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @classmethod
    def relabeled(cls, colors: Sequence[int]) -> Coloring:
        """Renumber arbitrary labels by first appearance in vertex order."""
        mapping: dict[int, int] = {}
        return cls(tuple(mapping.setdefault(c, len(mapping)) for c in colors))

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> Coloring:
        c = cls(tuple(data["colors"]))
        if "k" in data and data["k"] != c.k:
            raise ContractViolation(f"declared k={data['k']} but {c.k} colors are used")
        return c


def _check_total(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ContractViolation(f"coloring covers {len(c)} vertices but graph has {g.n}")


def monochromatic_edge(g: Graph, c: Coloring) -> tuple[int, int] | None:
    _check_total(g, c)
    for u, v in g.edges:
        if c[u] == c[v]:
            return (u, v)
    return None


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge joins two vertices of the same color."""
    return monochromatic_edge(g, c) is None


def greedy_color(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring along ``order`` (identity order by default).

    Colors are handed out as first-fit indices, so they are contiguous
    without relabeling.
    """
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise ContractViolation("order must be a permutation of the vertices")
    colors = [-1] * g.n
    for v in order:
        used = {colors[w] for w in iter_bits(g.adj_mask(v)) if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy extension from every start vertex."""
    best: list[int] = []
    for s in range(g.n):
        clique = [s]
        cand = g.adj_mask(s)
        while cand:
            v = max(iter_bits(cand), key=lambda x: ((g.adj_mask(x) & cand).bit_count(), -x))
            clique.append(v)
            cand &= g.adj_mask(v)
        if len(clique) > len(best):
            best = sorted(clique)
    return best


class _Dsatur:
    """Branch-and-bound state for one exact search."""

    def __init__(self, g: Graph) -> None:
        self.g = g
        self.adj = g.masks
        self.deg = [g.degree(v) for v in range(g.n)]
        self.colors = [-1] * g.n
        # bitmask of colors present in each vertex's neighborhood
        self.sat = [0] * g.n
        self.nodes = 0

    def pick(self, uncolored: int) -> int:
        best, key = -1, None
        for v in iter_bits(uncolored):
            k = (self.sat[v].bit_count(), self.deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def run(self, upper: list[int], lower: int) -> list[int]:
        self.best = list(upper)
        self.best_k = max(upper) + 1
        self.lower = lower
        if self.best_k > lower:
            self._search(self.g.all_mask, 0)
        return self.best

    def _search(self, uncolored: int, used: int) -> bool:
        """Returns True once a coloring meeting the lower bound is found."""
        self.nodes += 1
        if not uncolored:
            if used < self.best_k:
                self.best_k = used
                self.best = list(self.colors)
            return self.best_k <= self.lower
        v = self.pick(uncolored)
        forbidden = self.sat[v]
        # color index `used` is a fresh color; opening it only pays if it beats the incumbent
        for c in range(used + 1):
            if c >= self.best_k - 1:
                break
            if forbidden >> c & 1:
                continue
            bit = 1 << c
            touched = []
            for w in iter_bits(self.adj[v] & uncolored):
                if not self.sat[w] & bit:
                    self.sat[w] |= bit
                    touched.append(w)
            self.colors[v] = c
            done = self._search(uncolored & ~(1 << v), max(used, c + 1))
            self.colors[v] = -1
            for w in touched:
                self.sat[w] &= ~bit
            if done:
                return True
        return False


def chromatic_number_exact(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal witness.

    DSATUR branch and bound: branch on the uncolored vertex with the most
    distinct neighbor colors (ties by degree, then lowest index), try colors
    ascending, and open a new color only as ``max used + 1``. The incumbent
    starts from the better of two first-fit colorings and the search stops
    as soon as it meets the greedy clique bound.

    The empty graph returns ``(0, Coloring(()))``.
    """
    if g.n == 0:
        return 0, Coloring(())
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    upper = min(greedy_color(g), greedy_color(g, by_degree), key=lambda c: c.k)
    lower = len(greedy_clique(g))
    best = _Dsatur(g).run(list(upper.colors), lower)
    witness = Coloring.relabeled(best)
    return witness.k, witness


def chromatic_number(g: Graph) -> int:
    return chromatic_number_exact(g)[0]


def iter_colorings_with(g: Graph, k: int) -> Iterator[Coloring]:
    """Every proper coloring with exactly ``k`` colors, one per partition.

    Vertices are colored in index order and a vertex may only open color
    ``max used + 1``, so each coloring is the canonical labeling of its
    class partition (classes numbered by smallest vertex) and partitions
    come out in lexicographic order of their color strings.
    """
    n = g.n
    if k == 0:
        if n == 0:
            yield Coloring(())
        return
    adj = g.masks
    colors = [-1] * n
    # class_masks[c] = vertices already holding color c
    class_masks = [0] * k

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if n - v < k - used:
            return
        if v == n:
            yield Coloring(tuple(colors))
            return
        for c in range(min(used + 1, k)):
            if class_masks[c] & adj[v]:
                continue
            colors[v] = c
            class_masks[c] |= 1 << v
            yield from rec(v + 1, max(used, c + 1))
            class_masks[c] &= ~(1 << v)
        colors[v] = -1

    yield from rec(0, 0)


def enumerate_minimal_colorings(g: Graph, limit: int) -> list[Coloring]:
    """Up to ``limit`` distinct minimum colorings, distinct as partitions.

    Truncation follows the canonical order of :func:`iter_colorings_with`,
    so runs with different limits agree on their common prefix.
    """
    if limit < 1:
        raise ContractViolation(f"limit must be >= 1, got {limit}")
    k = chromatic_number(g)
    out = []
    for c in iter_colorings_with(g, k):
        out.append(c)
        if len(out) >= limit:
            break
    return out

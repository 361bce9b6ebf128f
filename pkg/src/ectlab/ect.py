"""Color-class partitions, the equivalent color graph and its quotient.

Contracting every color class of a proper coloring to one vertex and
keeping a single edge between adjacent classes gives the quotient graph.
For a minimum coloring that quotient is complete; :func:`reduce_coloring`
runs the merge argument behind that fact as an actual procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import Coloring, monochromatic_edge
from .errors import ContractViolation
from .graph import Graph, is_complete


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex classes covering ``0..n-1``.

    Classes are sorted internally and ordered by their smallest vertex, so
    two partitions compare equal exactly when they group vertices alike.
    """

    n: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        classes = sorted((tuple(sorted(int(v) for v in cls)) for cls in self.classes), key=lambda c: c[:1])
        if any(not cls for cls in classes):
            raise ContractViolation("partition classes must be non-empty")
        flat = [v for cls in classes for v in cls]
        if sorted(flat) != list(range(self.n)):
            raise ContractViolation(f"classes are not a disjoint cover of 0..{self.n - 1}")
        object.__setattr__(self, "classes", tuple(classes))

    @classmethod
    def of(cls, n: int, classes: Iterable[Iterable[int]]) -> Partition:
        return cls(n, tuple(tuple(c) for c in classes))

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> list[int]:
        """Class index of every vertex."""
        out = [0] * self.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    def to_coloring(self) -> Coloring:
        return Coloring(tuple(self.class_of()))


@dataclass(frozen=True)
class ECG:
    """A base graph grouped into independent color classes."""

    base: Graph
    partition: Partition


@dataclass(frozen=True)
class QuotientGraph:
    """Result of contracting each class; vertex ``i`` stands for ``classes[i]``."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    @property
    def class_map(self) -> dict[int, tuple[int, ...]]:
        return dict(enumerate(self.classes))

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(), "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> QuotientGraph:
        return cls(Graph.from_json(data["graph"]), tuple(tuple(c) for c in data["classes"]))


def color_classes(g: Graph, c: Coloring) -> Partition:
    bad = monochromatic_edge(g, c)
    if bad is not None:
        raise ContractViolation(f"coloring is not proper: edge {bad} is monochromatic")
    classes: list[list[int]] = [[] for _ in range(c.k)]
    for v, color in enumerate(c.colors):
        classes[color].append(v)
    return Partition.of(g.n, classes)


def build_ecg(g: Graph, c: Coloring) -> ECG:
    return ECG(g, color_classes(g, c))


def _check_independent(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise ContractViolation(f"partition covers {p.n} vertices but graph has {g.n}")
    for cls in p.classes:
        mask = 0
        for v in cls:
            mask |= 1 << v
        for v in cls:
            if g.adj_mask(v) & mask:
                u = next(w for w in cls if g.adjacent(v, w))
                raise ContractViolation(
                    f"class {list(cls)} is not independent (edge {min(u, v), max(u, v)}); contraction would create a loop"
                )


def apply_ect(g: Graph, p: Partition | ECG) -> QuotientGraph:
    """Contract every class of ``p`` to a single vertex.

    Quotient vertices ``i`` and ``j`` are adjacent iff some base edge runs
    between class ``i`` and class ``j``.
    """
    if isinstance(p, ECG):
        p = p.partition
    _check_independent(g, p)
    where = p.class_of()
    return QuotientGraph(Graph(len(p), [(where[u], where[v]) for u, v in g.edges]), p.classes)


def is_quotient_complete(q: QuotientGraph) -> bool:
    return is_complete(q.graph)


def _first_mergeable(g: Graph, classes: Sequence[Sequence[int]]) -> tuple[int, int] | None:
    masks = []
    for cls in classes:
        m = 0
        for v in cls:
            m |= 1 << v
        masks.append(m)
    nbr = []
    for m, cls in zip(masks, classes):
        nm = 0
        for v in cls:
            nm |= g.adj_mask(v)
        nbr.append(nm)
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if not nbr[i] & masks[j]:
                return i, j
    return None


def reduce_coloring(g: Graph, c: Coloring) -> Coloring:
    """Merge non-adjacent classes until the quotient is complete.

    Each round merges the lexicographically first pair of classes (in
    canonical class order) with no edge between them. At most ``k - 1``
    merges happen. The result is a fixed point of the rule, which need
    not be a minimum coloring.
    """
    p = color_classes(g, c)
    while True:
        pair = _first_mergeable(g, p.classes)
        if pair is None:
            return p.to_coloring()
        i, j = pair
        merged = [cls for idx, cls in enumerate(p.classes) if idx not in pair]
        merged.append(p.classes[i] + p.classes[j])
        p = Partition.of(g.n, merged)

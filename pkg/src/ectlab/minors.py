"""K5 and K3,3 minor witnesses and an exhaustive branch-set search.

The search is deliberately independent of the planarity embedder so that
the two can be cross-checked: it knows nothing about faces or embeddings,
only about connected, pairwise-touching vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import ContractViolation, SearchInconclusive, WitnessError
from .graph import Graph, is_connected_mask, iter_bits, reachable

K5 = "K5"
K33 = "K33"

DEFAULT_BUDGET = 5_000_000
ORACLE_MAX_N = 10

_PAIRS = {
    K5: tuple(combinations(range(5), 2)),
    K33: tuple((i, j) for i in range(3) for j in range(3, 6)),
}
_SLOTS = {K5: 5, K33: 6}


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets of a K5 or K3,3 minor.

    For K5 there are five sets ordered by smallest vertex. For K3,3 there
    are six: the first three form the side holding the overall smallest
    branch vertex, the last three the other side, each triple ordered by
    smallest vertex.
    """

    target: str
    branch_sets: tuple[tuple[int, ...], ...]

    @classmethod
    def canonical(cls, target: str, sets: Sequence[Sequence[int]]) -> MinorWitness:
        sets = [tuple(sorted(s)) for s in sets]
        if target == K5:
            return cls(K5, tuple(sorted(sets)))
        a, b = sorted(sets[:3]), sorted(sets[3:])
        if b and (not a or b[0][0] < a[0][0]):
            a, b = b, a
        return cls(K33, tuple(a + b))

    def to_json(self) -> dict:
        return {"target": self.target, "branch_sets": [list(s) for s in self.branch_sets]}

    @classmethod
    def from_json(cls, data: dict) -> MinorWitness:
        return cls(data["target"], tuple(tuple(s) for s in data["branch_sets"]))


def validate_minor_witness(g: Graph, w: MinorWitness) -> None:
    """Raise :class:`WitnessError` unless ``w`` is a valid minor model in ``g``."""
    if w.target not in _SLOTS:
        raise WitnessError(f"unknown minor target {w.target!r}")
    if len(w.branch_sets) != _SLOTS[w.target]:
        raise WitnessError(f"{w.target} needs {_SLOTS[w.target]} branch sets, got {len(w.branch_sets)}")
    masks = []
    seen = 0
    for s in w.branch_sets:
        if not s:
            raise WitnessError("empty branch set")
        m = 0
        for v in s:
            if not g.has_vertex(v):
                raise WitnessError(f"branch vertex {v} not in graph")
            m |= 1 << v
        if m & seen:
            raise WitnessError(f"branch set {list(s)} overlaps an earlier one")
        if not is_connected_mask(g.masks, m):
            raise WitnessError(f"branch set {list(s)} does not induce a connected subgraph")
        seen |= m
        masks.append(m)
    for i, j in _PAIRS[w.target]:
        touch = any(g.adj_mask(v) & masks[j] for v in iter_bits(masks[i]))
        if not touch:
            raise WitnessError(f"branch sets {list(w.branch_sets[i])} and {list(w.branch_sets[j])} are not joined by an edge")


@dataclass(frozen=True)
class MinorSearch:
    """Outcome of a budgeted search: ``found``, ``none`` or ``inconclusive``."""

    result: str
    witness: MinorWitness | None = None
    nodes: int = 0

    def to_json(self) -> dict:
        if self.witness is not None:
            return self.witness.to_json()
        return {"result": self.result}


class _Exhausted(Exception):
    pass


def _strip_low_degree(g: Graph) -> int:
    # vertices of degree <= 1 never help a minor whose target has min degree 3
    active = g.all_mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(active):
            if (g.adj_mask(v) & active).bit_count() <= 1:
                active &= ~(1 << v)
                changed = True
    return active


def search_minor(g: Graph, target: str, budget: int | None = DEFAULT_BUDGET) -> MinorSearch:
    """Exhaustive search for a ``target`` minor model.

    Any model can be grown until no unused vertex touches a branch set, and
    then the unused vertices are whole components. Since both targets are
    connected, it suffices to split a single component completely into
    branch sets, so no vertex is ever left out.

    Within a component, vertices are decided in ascending order; each joins
    an open branch-set slot or opens the next one. Slots are opened in order
    (and for K3,3 the first slot opened is always on side one), which
    removes the symmetric duplicates. A partial assignment is pruned when a
    slot can no longer become connected through undecided vertices, when a
    required pair of slots can no longer touch, or when too few vertices
    remain to open the missing slots.
    """
    if target not in _SLOTS:
        raise ContractViolation(f"unknown minor target {target!r}")
    adj = g.masks
    n_slots = _SLOTS[target]
    pairs = _PAIRS[target]
    sets = [0] * n_slots
    nodes = 0
    verts: list[int] = []
    suffix: list[int] = []

    def feasible(undecided: int, open_slots: list[int]) -> bool:
        if n_slots - len(open_slots) > undecided.bit_count():
            return False
        reach = {}
        for s in open_slots:
            # the slot must still be joinable into one piece through undecided vertices
            r = reachable(adj, sets[s] & -sets[s], sets[s] | undecided)
            if r & sets[s] != sets[s]:
                return False
            reach[s] = r
        for a, b in pairs:
            if a in reach and b in reach:
                ra = reach[a]
                nb = 0
                for v in iter_bits(ra):
                    nb |= adj[v]
                if not nb & reach[b]:
                    return False
        return True

    def complete() -> bool:
        if not all(sets):
            return False
        for m in sets:
            if not is_connected_mask(adj, m):
                return False
        for a, b in pairs:
            if not any(adj[v] & sets[b] for v in iter_bits(sets[a])):
                return False
        return True

    def choices(open_slots: list[int]) -> list[int]:
        if target == K5:
            out = list(open_slots)
            if len(open_slots) < 5:
                out.append(len(open_slots))
            return out
        side_a = [s for s in open_slots if s < 3]
        side_b = [s for s in open_slots if s >= 3]
        out = side_a + side_b
        if len(side_a) < 3:
            out.append(len(side_a))
        if side_a and len(side_b) < 3:
            out.append(3 + len(side_b))
        return out

    def rec(i: int, open_slots: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Exhausted
        if len(open_slots) == n_slots and complete():
            return True
        if i == len(verts) or not feasible(suffix[i], open_slots):
            return False
        bit = 1 << verts[i]
        for s in choices(open_slots):
            fresh = not sets[s]
            sets[s] |= bit
            if rec(i + 1, sorted(open_slots + [s]) if fresh else open_slots):
                return True
            sets[s] &= ~bit
        return False

    found = False
    active = _strip_low_degree(g)
    try:
        while active and not found:
            comp = reachable(adj, active & -active, active)
            active &= ~comp
            if comp.bit_count() < n_slots:
                continue
            verts = list(iter_bits(comp))
            suffix = [0] * (len(verts) + 1)
            for i in range(len(verts) - 1, -1, -1):
                suffix[i] = suffix[i + 1] | 1 << verts[i]
            found = rec(0, [])
    except _Exhausted:
        return MinorSearch("inconclusive", nodes=nodes)
    if not found:
        return MinorSearch("none", nodes=nodes)
    witness = MinorWitness.canonical(target, [list(iter_bits(m)) for m in sets])
    return MinorSearch("found", witness, nodes)


def has_k5_or_k33_minor(g: Graph, budget: int | None = DEFAULT_BUDGET) -> MinorWitness | None:
    """Return a K5 (tried first) or K3,3 minor witness, or None if neither exists.

    ``budget`` caps search nodes per target; ``None`` means unlimited.
    Raises :class:`SearchInconclusive` if the cap is hit before a verdict.
    """
    result = search_k5_or_k33(g, budget)
    if result.result == "inconclusive":
        raise SearchInconclusive(f"minor search exceeded {budget} nodes")
    return result.witness


def search_k5_or_k33(g: Graph, budget: int | None = DEFAULT_BUDGET) -> MinorSearch:
    first = search_minor(g, K5, budget)
    if first.result == "found":
        return first
    second = search_minor(g, K33, budget)
    if second.result == "found":
        return second
    if "inconclusive" in (first.result, second.result):
        return MinorSearch("inconclusive", nodes=first.nodes + second.nodes)
    return MinorSearch("none", nodes=first.nodes + second.nodes)


def planarity_oracle_small(g: Graph) -> bool:
    """Planarity decided purely by the absence of K5 and K3,3 minors.

    Refuses graphs with more than ten vertices; it exists to cross-check
    the embedder, not to be fast.
    """
    if g.n > ORACLE_MAX_N:
        raise ContractViolation(f"planarity oracle is capped at n <= {ORACLE_MAX_N}, got n={g.n}")
    return has_k5_or_k33_minor(g, budget=None) is None

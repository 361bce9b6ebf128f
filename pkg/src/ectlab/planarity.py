"""Planarity verdicts that carry a checkable witness either way.

Planar graphs get a rotation system (cyclic neighbor order per vertex),
built block by block with the Demoucron-Malgrange-Pertuiset path-addition
method. Non-planar graphs get K5 or K3,3 branch sets read off a minimal
non-planar subgraph, which is a subdivision of one of the two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import WitnessError
from .graph import Edge, Graph
from .minors import K5, K33, MinorWitness, validate_minor_witness

Rotation = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    rotation: Rotation | None = None
    minor: MinorWitness | None = None

    @property
    def witness(self) -> Rotation | MinorWitness | None:
        return self.rotation if self.planar else self.minor

    def to_json(self) -> dict:
        if self.planar:
            return {"planar": True, "witness": {"rotation": [list(r) for r in self.rotation]}}
        return {"planar": False, "witness": self.minor.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> PlanarityVerdict:
        if data["planar"]:
            return cls(True, rotation=tuple(tuple(r) for r in data["witness"]["rotation"]))
        return cls(False, minor=MinorWitness.from_json(data["witness"]))


def euler_bound_check(g: Graph) -> bool:
    """Necessary condition for planarity: ``n < 3`` or ``m <= 3n - 6``."""
    return g.n < 3 or g.m <= 3 * g.n - 6


# --- biconnected blocks -----------------------------------------------------


def _adjacency(n: int, edges: Iterable[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return adj


def biconnected_blocks(n: int, edges: Iterable[Edge]) -> list[list[Edge]]:
    """Edge sets of the biconnected blocks (bridges count as blocks)."""
    adj = _adjacency(n, edges)
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[list[Edge]] = []
    estack: list[Edge] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append((min(e), max(e)))
                        if e == (u, v):
                            break
                    blocks.append(sorted(block))
    return blocks


# --- path addition ----------------------------------------------------------


def _find_cycle(adj: dict[int, list[int]], start: int) -> list[int]:
    parent = {start: start}
    depth = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
            elif parent[v] != w and parent[w] != v:
                # non-tree edge v-w closes a cycle through their common ancestor
                left, right = [v], [w]
                a, b = v, w
                while depth[a] > depth[b]:
                    a = parent[a]
                    left.append(a)
                while depth[b] > depth[a]:
                    b = parent[b]
                    right.append(b)
                while a != b:
                    a, b = parent[a], parent[b]
                    left.append(a)
                    right.append(b)
                return left + right[-2::-1]
    raise AssertionError("block without a cycle")


def _split_face(face: list[int], path: list[int]) -> tuple[list[int], list[int]]:
    a, b = path[0], path[-1]
    i = face.index(a)
    r = face[i:] + face[:i]
    j = r.index(b)
    inner = path[1:-1]
    first = r[: j + 1] + inner[::-1]
    second = r[j:] + [a] + inner
    return first, second


def _fragments(adj: dict[int, list[int]], in_h: set[int], h_edges: set[Edge]) -> list[tuple[frozenset[int], list[int]]]:
    """Bridges of the embedded part: (attachment set, a path to embed)."""
    out = []
    for v in sorted(in_h):
        for w in adj[v]:
            if v < w and w in in_h and (v, w) not in h_edges:
                out.append((frozenset((v, w)), [v, w]))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in in_h or s in seen:
            continue
        comp = {s}
        queue = deque([s])
        attach: set[int] = set()
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in in_h:
                    attach.add(w)
                elif w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append((frozenset(attach), _bridge_path(adj, comp, attach)))
    return out


def _bridge_path(adj: dict[int, list[int]], comp: set[int], attach: set[int]) -> list[int]:
    a = min(attach)
    parent: dict[int, int] = {}
    queue = deque()
    for w in adj[a]:
        if w in comp and w not in parent:
            parent[w] = a
            queue.append(w)
    while queue:
        v = queue.popleft()
        ends = [w for w in adj[v] if w in attach and w != a]
        if ends:
            path = [min(ends), v]
            while path[-1] != a:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in adj[v]:
            if w in comp and w not in parent:
                parent[w] = v
                queue.append(w)
    raise AssertionError("fragment with fewer than two attachments in a biconnected block")


def _embed_block(block: list[Edge]) -> dict[int, list[int]] | None:
    """Rotation system for one biconnected block, or None if it is not planar."""
    adj: dict[int, list[int]] = {}
    for u, v in block:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for a in adj.values():
        a.sort()
    if len(block) == 1:
        (u, v), = block
        return {u: [v], v: [u]}
    if len(block) > 3 * len(adj) - 6:
        return None
    cycle = _find_cycle(adj, min(adj))
    faces = [cycle, cycle[::-1]]
    in_h = set(cycle)
    h_edges = {(min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
    while len(h_edges) < len(block):
        face_sets = [set(f) for f in faces]
        pick = None
        for attach, path in _fragments(adj, in_h, h_edges):
            admissible = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not admissible:
                return None
            if pick is None or len(admissible) == 1:
                pick = (admissible[0], path)
                if len(admissible) == 1:
                    break
        idx, path = pick
        first, second = _split_face(faces[idx], path)
        faces[idx] = first
        faces.append(second)
        in_h.update(path)
        h_edges.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    succ: dict[int, dict[int, int]] = {v: {} for v in adj}
    for f in faces:
        k = len(f)
        for i, v in enumerate(f):
            succ[v][f[i - 1]] = f[(i + 1) % k]
    rotation = {}
    for v, nbrs in adj.items():
        order = [nbrs[0]]
        while len(order) < len(nbrs):
            order.append(succ[v][order[-1]])
        rotation[v] = order
    return rotation


def planar_rotation(n: int, edges: Iterable[Edge]) -> Rotation | None:
    """Combined rotation system of all blocks, or None if some block is not planar.

    Block rotations are concatenated at cut vertices, which keeps the
    embedding planar.
    """
    combined: list[list[int]] = [[] for _ in range(n)]
    for block in biconnected_blocks(n, edges):
        rot = _embed_block(block)
        if rot is None:
            return None
        for v, order in rot.items():
            combined[v].extend(order)
    return tuple(tuple(r) for r in combined)


def _first_nonplanar_block(g: Graph) -> list[Edge] | None:
    for block in biconnected_blocks(g.n, g.edges):
        if _embed_block(block) is None:
            return block
    return None


def kuratowski_subgraph(g: Graph) -> list[Edge]:
    """Edges of a minimal non-planar subgraph of a non-planar ``g``.

    Greedy deletion (vertices first, then edges) keeps only edges whose
    removal would make the rest planar; what is left is a subdivision of
    K5 or K3,3.
    """
    block = _first_nonplanar_block(g)
    if block is None:
        raise ValueError("graph is planar")
    cur = set(block)
    for v in sorted({x for e in block for x in e}):
        trial = {e for e in cur if v not in e}
        if len(trial) < len(cur) and planar_rotation(g.n, trial) is None:
            cur = trial
    for e in sorted(cur):
        trial = cur - {e}
        if planar_rotation(g.n, trial) is None:
            cur = trial
    return sorted(cur)


def branch_sets_from_subdivision(edges: list[Edge]) -> MinorWitness:
    """Turn a K5 or K3,3 subdivision into branch sets.

    Each subdivided path's interior joins the branch set of its
    lower-numbered end.
    """
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) >= 3)
    sets = {b: [b] for b in branch}
    linked: dict[int, set[int]] = {b: set() for b in branch}
    for b in branch:
        for first in sorted(adj[b]):
            prev, cur, inner = b, first, []
            while cur not in sets:
                inner.append(cur)
                prev, cur = cur, next(x for x in adj[cur] if x != prev)
            linked[b].add(cur)
            if b < cur:
                sets[b].extend(inner)
    degrees = sorted(len(adj[b]) for b in branch)
    if degrees == [4] * 5:
        return MinorWitness.canonical(K5, [sets[b] for b in branch])
    if degrees == [3] * 6:
        # the side of the lowest branch vertex is everything it does not reach
        side = [b for b in branch if b not in linked[branch[0]]]
        other = [b for b in branch if b in linked[branch[0]]]
        return MinorWitness.canonical(K33, [sets[b] for b in side] + [sets[b] for b in other])
    raise AssertionError(f"not a Kuratowski subdivision (branch degrees {degrees})")


def is_planar(g: Graph) -> PlanarityVerdict:
    """Decide planarity, returning an embedding or a K5/K3,3 minor witness."""
    rotation = planar_rotation(g.n, g.edges) if euler_bound_check(g) else None
    if rotation is not None:
        return PlanarityVerdict(True, rotation=rotation)
    return PlanarityVerdict(False, minor=branch_sets_from_subdivision(kuratowski_subgraph(g)))


# --- independent validation -------------------------------------------------


def count_faces(g: Graph, rotation: Rotation) -> list[int]:
    """Faces traced from ``rotation``, tallied per connected component.

    The face after dart ``u -> v`` continues along ``v -> w`` where ``w``
    follows ``u`` in the cyclic order at ``v``. An isolated vertex is one
    face by itself.
    """
    comps = g.components()
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    faces = [0] * len(comps)
    seen: set[tuple[int, int]] = set()
    for u in range(g.n):
        if not rotation[u]:
            faces[comp_of[u]] += 1
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            faces[comp_of[u]] += 1
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                r = rotation[b]
                a, b = b, r[(pos[b][a] + 1) % len(r)]
    return faces


def validate_embedding(g: Graph, rotation: Rotation) -> None:
    """Raise :class:`WitnessError` unless ``rotation`` is a planar embedding of ``g``.

    Checks every vertex lists exactly its neighbors, then that each
    component satisfies ``V - E + F = 2``.
    """
    if len(rotation) != g.n:
        raise WitnessError(f"rotation lists {len(rotation)} vertices, graph has {g.n}")
    for v, r in enumerate(rotation):
        if len(r) != len(set(r)) or sorted(r) != g.neighbors(v):
            raise WitnessError(f"rotation at vertex {v} is not a cyclic order of its neighbors")
    faces = count_faces(g, rotation)
    for comp, f in zip(g.components(), faces):
        mask = set(comp)
        e = sum(1 for u, v in g.edges if u in mask)
        if len(comp) - e + f != 2:
            raise WitnessError(f"component {comp}: V - E + F = {len(comp) - e + f}, expected 2")


def validate_verdict(g: Graph, verdict: PlanarityVerdict) -> None:
    if verdict.planar:
        if verdict.rotation is None:
            raise WitnessError("planar verdict without an embedding")
        validate_embedding(g, verdict.rotation)
    else:
        if verdict.minor is None:
            raise WitnessError("non-planar verdict without a minor witness")
        validate_minor_witness(g, verdict.minor)

"""Brute-force reference implementations used only by the tests.

None of these share code paths with the package's solvers beyond the
Graph container itself.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from ectlab.graph import Graph

CHUNK = 1 << 18


def _assignments(n: int, k: int, start: int, stop: int) -> np.ndarray:
    """Rows are the base-k digit strings of integers in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), n), dtype=np.int8)
    for v in range(n):
        out[:, v] = idx % k
        idx //= k
    return out


def brute_proper_exists(g: Graph, k: int) -> bool:
    """Try every one of the k**n color maps (vectorised in chunks)."""
    if g.n == 0:
        return True
    if k == 0:
        return False
    if not g.edges:
        return True
    us = np.array([u for u, _ in g.edges])
    vs = np.array([v for _, v in g.edges])
    total = k**g.n
    for start in range(0, total, CHUNK):
        a = _assignments(g.n, k, start, min(total, start + CHUNK))
        ok = ~(a[:, us] == a[:, vs]).any(axis=1)
        if ok.any():
            return True
    return False


def brute_chromatic(g: Graph) -> int:
    k = 0
    while not brute_proper_exists(g, k):
        k += 1
    return k


def brute_partitions(g: Graph, k: int) -> set[tuple[tuple[int, ...], ...]]:
    """All proper k-colorings with exactly k colors, as canonical partitions."""
    out = set()
    for colors in itertools.product(range(k), repeat=g.n):
        if len(set(colors)) != k:
            continue
        if any(colors[u] == colors[v] for u, v in g.edges):
            continue
        classes = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        out.add(tuple(sorted(tuple(c) for c in classes.values())))
    return out


def random_graph(rng: random.Random, n_lo: int, n_hi: int, p_lo: float = 0.1, p_hi: float = 0.9) -> Graph:
    n = rng.randint(n_lo, n_hi)
    p = rng.uniform(p_lo, p_hi)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def canonical_classes(colors) -> tuple[tuple[int, ...], ...]:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return tuple(sorted(tuple(c) for c in classes.values()))

"""Seeded random instance generators used by the CLI and the test suites.

All randomness comes from ``numpy.random.Generator`` objects; callers derive
independent streams with ``numpy.random.SeedSequence.spawn``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import Graph


@dataclass(frozen=True)
class ForestStarInstance:
    graph: Graph
    forest: frozenset[int]
    stars: frozenset[int]

    def decomposition_json(self) -> dict:
        return {"format": 1, "forest": sorted(self.forest), "star_forest": sorted(self.stars)}


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn(seed: int, count: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_tree_pairs(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random recursive tree on a shuffled vertex order."""
    perm = rng.permutation(n).tolist()
    pairs = []
    for i in range(1, n):
        p = perm[int(rng.integers(0, i))]
        pairs.append((p, perm[i]))
    return pairs


def random_forest_star(n: int, rng: np.random.Generator, style: str | None = None) -> ForestStarInstance:
    """Random simple graph given as the union of a forest and a star forest.

    ``style`` is one of ``"matching"`` (spanning tree plus a near-perfect
    matching), ``"stars"`` (random forest plus random stars of mixed sizes)
    or ``"dense"`` (spanning tree plus stars covering most vertices).
    """
    if style is None:
        style = ("matching", "stars", "dense")[int(rng.integers(0, 3))]
    tree = random_tree_pairs(n, rng)
    if style == "stars":
        drop = float(rng.uniform(0.0, 0.3))
        tree = [e for e in tree if rng.random() >= drop]
    used = {(min(u, v), max(u, v)) for u, v in tree}
    star: list[tuple[int, int]] = []
    if style == "matching":
        perm = rng.permutation(n).tolist()
        for i in range(0, n - 1, 2):
            u, v = perm[i], perm[i + 1]
            if (min(u, v), max(u, v)) not in used:
                star.append((u, v))
    else:
        p_center = 0.15 if style == "dense" else float(rng.uniform(0.05, 0.5))
        p_leaf = 0.8 if style == "dense" else float(rng.uniform(0.2, 0.8))
        roles = rng.random(n)
        centers = [v for v in range(n) if roles[v] < p_center]
        if centers:
            picks = rng.integers(0, len(centers), size=n)
            coins = rng.random(n)
            for v in range(n):
                if roles[v] < p_center or coins[v] >= p_leaf:
                    continue
                w = centers[int(picks[v])]
                if (min(v, w), max(v, w)) not in used:
                    star.append((w, v))
    pairs = tree + star
    g = Graph.from_pairs(n, pairs)
    return ForestStarInstance(g, frozenset(range(len(tree))), frozenset(range(len(tree), len(pairs))))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_pairs(n, pairs)


def random_k_forest_union(n: int, k: int, rng: np.random.Generator) -> Graph:
    """Simple graph made of ``k`` random spanning trees; an edge already
    present is skipped, so the result has arboricity at most ``k``."""
    seen: set[tuple[int, int]] = set()
    pairs = []
    for _ in range(k):
        for u, v in random_tree_pairs(n, rng):
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    return Graph.from_pairs(n, pairs)


def cube_graph() -> Graph:
    pairs = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return Graph.from_pairs(8, pairs)


def octahedron() -> Graph:
    # K6 minus the perfect matching {i, i+3}.
    pairs = [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3]
    return Graph.from_pairs(6, pairs)


def complete_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])

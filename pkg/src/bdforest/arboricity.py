"""Arboricity via graphic-matroid union, star-forest splitting, and the
bounded-diameter pipelines layered on the forest + star forest theorem.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .decomposer import decompose_forest_star
from .graph_core import (
    CapacityError,
    ForestDecomposition,
    Graph,
    InputError,
    graph_diameter,
    is_forest,
)
from .verify import DecompositionReport, verify_bounded_forest_partition

DENSITY_LIMIT = 15
DIAMETER_BOUND = 18


@dataclass(frozen=True)
class ArboricityResult:
    k: int
    parts: ForestDecomposition
    witness: frozenset[int] | None = None


@dataclass(frozen=True)
class StarSplit:
    part1: frozenset[int]
    part2: frozenset[int]


@dataclass(frozen=True)
class BoundedResult:
    decomposition: ForestDecomposition
    report: DecompositionReport
    arboricity: int


class _Forests:
    """k edge-disjoint forests with per-forest adjacency maps."""

    def __init__(self, g: Graph, k: int) -> None:
        self.g = g
        self.adj: list[list[dict[int, int]]] = [[{} for _ in range(g.n)] for _ in range(k)]
        self.where: dict[int, int] = {}

    @property
    def k(self) -> int:
        return len(self.adj)

    def add_forest(self) -> None:
        self.adj.append([{} for _ in range(self.g.n)])

    def put(self, eid: int, i: int) -> None:
        u, v = self.g.ends[eid]
        self.adj[i][u][v] = eid
        self.adj[i][v][u] = eid
        self.where[eid] = i

    def take(self, eid: int) -> None:
        i = self.where.pop(eid)
        u, v = self.g.ends[eid]
        del self.adj[i][u][v]
        del self.adj[i][v][u]

    def path(self, i: int, a: int, b: int) -> list[int] | None:
        """Edge ids on the a-b path of forest i, or None if disconnected."""
        adj = self.adj[i]
        prev = {a: (-1, -1)}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                out = []
                while x != a:
                    x, eid = prev[x]
                    out.append(eid)
                return out
            for w, eid in adj[x].items():
                if w not in prev:
                    prev[w] = (x, eid)
                    queue.append(w)
        return None

    def insert(self, e: int) -> bool:
        """Add edge e, reshuffling along a shortest exchange sequence."""
        label: dict[int, tuple[int, int] | None] = {e: None}
        queue = deque([e])
        ends = self.g.ends
        while queue:
            x = queue.popleft()
            u, v = ends[x]
            home = self.where.get(x)
            for i in range(self.k):
                if i == home:
                    continue
                path = self.path(i, u, v)
                if path is None:
                    self._augment(x, i, label)
                    return True
                for f in path:
                    if f not in label:
                        label[f] = (x, i)
                        queue.append(f)
        return False

    def _augment(self, x: int, target: int, label) -> None:
        while True:
            if x in self.where:
                self.take(x)
            self.put(x, target)
            if label[x] is None:
                return
            x, target = label[x]

    def parts(self) -> ForestDecomposition:
        groups: list[set[int]] = [set() for _ in range(self.k)]
        for eid, i in self.where.items():
            groups[i].add(eid)
        return ForestDecomposition.of(groups)


def arboricity_decompose(g: Graph) -> ArboricityResult:
    """Minimum number of forests covering E(g), with a decomposition.

    Edges are inserted one at a time; an edge that fits in no forest
    triggers a breadth-first search over exchanges (edge x may displace f
    from forest i when f lies on the x-path of forest i).  Failure of that
    search proves the current k is too small.  A densest-subgraph witness is
    attached when ``g.n <= 15``.
    """
    if g.has_loops():
        raise InputError("arboricity is undefined for graphs with loops")
    if g.m == 0:
        return ArboricityResult(0, ForestDecomposition(()), frozenset() if g.n <= DENSITY_LIMIT else None)
    k = max(1, math.ceil(g.m / max(g.n - 1, 1)))
    forests = _Forests(g, k)
    for eid, _, _ in g.edges:
        if not forests.insert(eid):
            forests.add_forest()
            forests.put(eid, forests.k - 1)
    witness = None
    if g.n <= DENSITY_LIMIT:
        witness, _ = _densest(g)
    return ArboricityResult(forests.k, forests.parts(), witness)


def _subset_edge_counts(g: Graph) -> list[int]:
    n = g.n
    if n > DENSITY_LIMIT:
        raise CapacityError(f"subset enumeration limited to {DENSITY_LIMIT} vertices")
    if g.has_loops():
        raise InputError("density is undefined here for graphs with loops")
    mult = [dict() for _ in range(n)]
    for _, u, v in g.edges:
        mult[u][v] = mult[u].get(v, 0) + 1
        mult[v][u] = mult[v].get(u, 0) + 1
    counts = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        counts[s] = counts[rest] + sum(k for u, k in mult[v].items() if rest >> u & 1)
    return counts


def _densest(g: Graph) -> tuple[frozenset[int], Fraction]:
    counts = _subset_edge_counts(g)
    best, best_mask = Fraction(0), 0
    for s in range(1, 1 << g.n):
        size = s.bit_count()
        if size < 2:
            continue
        dens = Fraction(counts[s], size - 1)
        if dens > best:
            best, best_mask = dens, s
    return frozenset(v for v in range(g.n) if best_mask >> v & 1), best


def fractional_density(g: Graph) -> Fraction:
    """max over vertex subsets H with |H| >= 2 of |E(H)| / (|H| - 1); exact,
    by enumeration, for at most 15 vertices."""
    return _densest(g)[1]


def split_star_forests(forest: Iterable[int], g: Graph) -> StarSplit:
    """Two star forests covering a forest: root every tree at its smallest
    vertex and give each child edge to the part of its parent's depth parity."""
    forest = set(forest)
    g.check_ids(forest)
    if not is_forest(g, forest):
        raise InputError("edge set is not a forest")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in forest:
        u, v = g.ends[eid]
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    depth = [-1] * g.n
    part1, part2 = set(), set()
    for s in range(g.n):
        if depth[s] != -1:
            continue
        depth[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w, eid in adj[x]:
                if depth[w] == -1:
                    depth[w] = depth[x] + 1
                    (part1 if depth[x] % 2 == 0 else part2).add(eid)
                    queue.append(w)
    return StarSplit(frozenset(part1), frozenset(part2))


def _bounded_group(g: Graph, forests: list[frozenset[int]]) -> list[frozenset[int]]:
    """1 forest -> 2 parts, 2 -> 3, 3 -> 4, all of diameter <= 18."""
    if len(forests) == 1:
        split = split_star_forests(forests[0], g)
        dec, _ = decompose_forest_star(g, split.part1, split.part2)
        return list(dec.parts)
    split = split_star_forests(forests[-1], g)
    first, _ = decompose_forest_star(g, forests[0], split.part1)
    if len(forests) == 2:
        return list(first.parts) + [split.part2]
    second, _ = decompose_forest_star(g, forests[1], split.part2)
    return list(first.parts) + list(second.parts)


def decompose_bounded(g: Graph, jobs: int = 1) -> BoundedResult:
    """At most ceil(4k/3) forests of component diameter <= 18, k = arboricity.

    Forests are processed in groups of three (the last group may be
    smaller).  ``jobs > 1`` runs groups in a process pool.
    """
    arb = arboricity_decompose(g)
    forests = sorted(arb.parts.parts, key=lambda p: (-len(p), sorted(p)))
    groups = [forests[i:i + 3] for i in range(0, len(forests), 3)]
    if jobs > 1 and len(groups) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bounded_group, [g] * len(groups), groups))
    else:
        results = [_bounded_group(g, grp) for grp in groups]
    parts = [p for res in results for p in res]
    report = verify_bounded_forest_partition(g, parts, DIAMETER_BOUND)
    return BoundedResult(ForestDecomposition(tuple(parts)), report, arb.k)


def lower_bound_certificate(g: Graph, k: int, d: int, c: int) -> tuple[bool, str]:
    """Counting certificate that no k forests of diameter <= d cover g.

    Holds when |E| >= k|V| - c (so any such cover has at most c trees) and
    the diameter is at least c*d + 1 (so some tree contains d + 1 edges of a
    shortest path).
    """
    n, m = g.n, g.m
    diam = graph_diameter(g)
    dense = m >= k * n - c
    long = diam >= c * d + 1
    text = (
        f"|E|={m} {'>=' if dense else '<'} k|V|-c={k * n - c}; "
        f"diameter={diam} {'>=' if long else '<'} cd+1={c * d + 1}"
    )
    if dense and long:
        text += f"; certifies diameter-{d} arboricity > {k}"
    return dense and long, text

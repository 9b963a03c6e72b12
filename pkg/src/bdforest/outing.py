"""Outings: an out star forest S together with a spanning out tree T.

``build_outing`` turns a (forest, star forest) decomposition of a simple
graph into an outing whose underlying graph contains the original one.  The
forest's components are linked into a single spanning tree with fresh edges
that never duplicate an existing adjacency, so the base stays simple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .graph_core import (
    DiEdgeSet,
    Graph,
    GraphError,
    InputError,
    UnionFind,
    component_vertex_sets,
    is_forest,
)


class AugmentationError(GraphError):
    """No non-adjacent pair was available to link two forest components."""


class OutingError(GraphError):
    """Arcs given to ``Outing.from_arcs`` do not form a valid outing."""


@dataclass(frozen=True)
class Outing:
    base: Graph
    star_arcs: DiEdgeSet
    tree_arcs: DiEdgeSet
    root: int
    centers: frozenset[int]
    leaves: frozenset[int]
    added_edge_ids: frozenset[int] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def original_edge_ids(self) -> frozenset[int]:
        return self.base.edge_ids - self.added_edge_ids

    @cached_property
    def star_parent(self) -> list[int]:
        """Center of the star containing each leaf; -1 for centers."""
        parent = [-1] * self.n
        for _, (tail, head) in self.star_arcs:
            parent[head] = tail
        return parent

    @cached_property
    def tree_parent(self) -> list[int]:
        """Parent in T; -1 for the root."""
        parent = [-1] * self.n
        for _, (tail, head) in self.tree_arcs:
            parent[head] = tail
        return parent

    @cached_property
    def tree_children(self) -> list[list[int]]:
        children: list[list[int]] = [[] for _ in range(self.n)]
        for _, (tail, head) in self.tree_arcs:
            children[tail].append(head)
        for c in children:
            c.sort()
        return children

    @cached_property
    def bfs_order(self) -> list[int]:
        """Vertices of T from the root outward; siblings by increasing index."""
        order = [self.root]
        children = self.tree_children
        i = 0
        while i < len(order):
            order.extend(children[order[i]])
            i += 1
        return order

    @cached_property
    def is_center(self) -> list[bool]:
        flags = [False] * self.n
        for v in self.centers:
            flags[v] = True
        return flags

    @classmethod
    def from_arcs(
        cls,
        n: int,
        star_arcs: Iterable[tuple[int, int]],
        tree_arcs: Iterable[tuple[int, int]],
        root: int = 0,
    ) -> "Outing":
        """Assemble an outing from explicit arcs (star arcs get the low ids).

        Vertices that head no star arc are centers.  Raises OutingError
        unless every outing invariant holds.
        """
        star_arcs = list(star_arcs)
        tree_arcs = list(tree_arcs)
        pairs = star_arcs + tree_arcs
        try:
            base = Graph.from_pairs(n, pairs)
        except InputError as exc:
            raise OutingError(f"underlying graph is not simple: {exc}") from None
        s, t = DiEdgeSet(), DiEdgeSet()
        for i, (u, v) in enumerate(star_arcs):
            s.add(i, u, v)
        for j, (u, v) in enumerate(tree_arcs):
            t.add(len(star_arcs) + j, u, v)
        leaves = frozenset(v for _, v in star_arcs)
        o = cls(base, s, t, root, frozenset(range(n)) - leaves, leaves)
        problems = outing_violations(o)
        if problems:
            raise OutingError("; ".join(problems))
        return o


def outing_violations(o: Outing) -> list[str]:
    """Check the outing invariants; returns human-readable findings."""
    out: list[str] = []
    n = o.n
    s_ids, t_ids = set(o.star_arcs.arcs), set(o.tree_arcs.arcs)
    if s_ids & t_ids:
        out.append(f"edges in both S and T: {sorted(s_ids & t_ids)[:10]}")
    if (s_ids | t_ids) != set(o.base.edge_ids):
        out.append("S and T do not cover the base edge set")
    for eid, (tail, head) in list(o.star_arcs) + list(o.tree_arcs):
        if {tail, head} != set(o.base.endpoints(eid)):
            out.append(f"arc {eid} does not match base edge endpoints")

    # T: spanning out tree rooted at root
    if not (0 <= o.root < n) and n > 0:
        out.append(f"root {o.root} out of range")
    if o.tree_arcs.in_degree(o.root) != 0:
        out.append(f"root {o.root} is head of a tree arc")
    for v in range(n):
        if v != o.root and o.tree_arcs.in_degree(v) != 1:
            out.append(f"vertex {v} is head of {o.tree_arcs.in_degree(v)} tree arcs")
    if len(o.tree_arcs) != max(n - 1, 0):
        out.append(f"T has {len(o.tree_arcs)} arcs for {n} vertices")
    elif n > 0 and not is_forest(o.base, t_ids):
        out.append("T contains a cycle")

    # S: out star forest with centers/leaves partitioning V
    if o.centers & o.leaves:
        out.append(f"vertices both center and leaf: {sorted(o.centers & o.leaves)[:10]}")
    if (o.centers | o.leaves) != frozenset(range(n)):
        out.append("centers and leaves do not cover V")
    for v in o.leaves:
        if o.star_arcs.in_degree(v) != 1:
            out.append(f"leaf {v} is head of {o.star_arcs.in_degree(v)} star arcs")
    for v in o.centers:
        if o.star_arcs.in_degree(v) != 0:
            out.append(f"center {v} is head of a star arc")
    for eid, (tail, _) in o.star_arcs:
        if tail not in o.centers:
            out.append(f"star arc {eid} has non-center tail {tail}")
    degree = [0] * n
    for _, (tail, head) in o.star_arcs:
        degree[tail] += 1
        degree[head] += 1
    for eid, (tail, head) in o.star_arcs:
        if degree[tail] > 1 and degree[head] > 1:
            out.append(f"star arc {eid} joins two vertices of degree > 1")
        elif degree[head] > 1:
            out.append(f"star arc {eid} points into a vertex of degree > 1")

    for v in range(n):
        if o.star_arcs.in_degree(v) + o.tree_arcs.in_degree(v) > 2:
            out.append(f"vertex {v} has in-degree > 2")
    return out


def star_forest_orientation(g: Graph, star_edges: Iterable[int]) -> dict[int, tuple[int, int]]:
    """Orient each star edge center -> leaf.

    Single-edge stars take the lower-indexed endpoint as center.  Raises
    InputError when the edges do not form a star forest.
    """
    star_edges = list(star_edges)
    degree: dict[int, int] = {}
    for eid in star_edges:
        u, v = g.endpoints(eid)
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    arcs = {}
    for eid in star_edges:
        u, v = g.endpoints(eid)
        du, dv = degree[u], degree[v]
        if du > 1 and dv > 1:
            raise InputError(f"star edges are not a star forest (edge {eid} joins two non-leaves)")
        if du > 1:
            arcs[eid] = (u, v)
        elif dv > 1:
            arcs[eid] = (v, u)
        else:
            arcs[eid] = (min(u, v), max(u, v))
    return arcs


def build_outing(forest_edges: Iterable[int], star_edges: Iterable[int], g: Graph) -> Outing:
    """Outing (S, T) whose underlying graph contains the union of the two
    edge sets.  T is the forest completed to a spanning tree, rooted at 0."""
    forest = set(forest_edges)
    stars = set(star_edges)
    g.check_ids(forest)
    g.check_ids(stars)
    if forest & stars:
        raise InputError(f"forest and star forest overlap on edges {sorted(forest & stars)[:10]}")
    if g.multigraph and not g.is_simple():
        raise InputError("outings need a simple graph")
    if not is_forest(g, forest):
        raise InputError("forest edges contain a cycle")
    star_orient = star_forest_orientation(g, stars)

    n = g.n
    uf = UnionFind(n)
    for eid in forest:
        uf.union(*g.endpoints(eid))
    labels = _relabel([uf.find(v) for v in range(n)])
    comps = component_vertex_sets(labels)
    comp_of = labels

    adjacent = {(min(u, v), max(u, v)) for _, u, v in g.edges}
    added: list[tuple[int, int, int]] = []
    next_id = g.next_edge_id()
    # Consecutive components first; any leftover groups are then joined by
    # the first free pair between two groups, scanning groups in order.
    groups = UnionFind(len(comps))

    def link(pair: tuple[int, int], i: int, j: int) -> None:
        nonlocal next_id
        adjacent.add(pair)
        added.append((next_id, pair[0], pair[1]))
        next_id += 1
        groups.union(i, j)

    for i in range(1, len(comps)):
        pair = _free_pair(comps[i - 1], comps[i], adjacent)
        if pair is not None:
            link(pair, i - 1, i)
    while len(added) < len(comps) - 1:
        members: dict[int, list[int]] = {}
        for i, comp in enumerate(comps):
            members.setdefault(groups.find(i), []).extend(comp)
        order = sorted(members.values(), key=min)
        found = None
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                pair = _free_pair(sorted(order[a]), sorted(order[b]), adjacent)
                if pair is not None:
                    found = pair
                    break
            if found:
                break
        if found is None:
            raise AugmentationError("no non-adjacent pair links the remaining forest components")
        link(found, comp_of[found[0]], comp_of[found[1]])

    kept = forest | stars
    base = Graph(n, tuple(e for e in g.edges if e[0] in kept) + tuple(added))

    tree_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid in list(forest) + [a[0] for a in added]:
        u, v = base.endpoints(eid)
        tree_adj[u].append((v, eid))
        tree_adj[v].append((u, eid))
    tree = DiEdgeSet()
    if n:
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for w, eid in sorted(tree_adj[x]):
                if not seen[w]:
                    seen[w] = True
                    tree.add(eid, x, w)
                    queue.append(w)

    star = DiEdgeSet()
    for eid in sorted(star_orient):
        star.add(eid, *star_orient[eid])
    leaves = frozenset(head for _, head in star_orient.values())
    return Outing(
        base,
        star,
        tree,
        0,
        frozenset(range(n)) - leaves,
        leaves,
        frozenset(a[0] for a in added),
    )


def _relabel(roots: list[int]) -> list[int]:
    mapping: dict[int, int] = {}
    return [mapping.setdefault(r, len(mapping)) for r in roots]


def _free_pair(left: list[int], right: list[int], adjacent: set[tuple[int, int]]) -> tuple[int, int] | None:
    for u in left:
        for v in right:
            pair = (min(u, v), max(u, v))
            if pair not in adjacent:
                return pair
    return None


def restrict_to_original(o: Outing, coloring: Mapping[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    """Split the original (non-augmentation) edges by color."""
    missing = [eid for eid in o.base.edge_ids if eid not in coloring]
    if missing:
        raise InputError(f"edge coloring misses edges {sorted(missing)[:10]}")
    part1 = frozenset(e for e in o.original_edge_ids if coloring[e] == 1)
    part2 = frozenset(e for e in o.original_edge_ids if coloring[e] == 2)
    return part1, part2

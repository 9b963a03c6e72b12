"""Edge-identified undirected graphs and the elementary queries shared by
every other module.

Vertices are dense integers ``0..n-1``.  Every edge carries an integer id
that survives subgraph views and transformations, so decompositions can be
expressed as plain sets of edge ids.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GraphError, ValueError):
    """Malformed input: unknown ids, overlapping sets, bad JSON fields."""


class StructuralError(GraphError):
    """An argument does not have the required structure (e.g. not a tree)."""


class CapacityError(GraphError):
    """The instance exceeds the documented limit of an exhaustive routine."""


@dataclass(frozen=True)
class Graph:
    """Undirected graph with explicit, stable edge ids.

    ``edges`` holds ``(edge_id, u, v)`` triples.  In simple mode loops and
    parallel edges are rejected at construction; ``multigraph=True`` lifts
    both restrictions (operations that cannot handle loops check for them).
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]
    multigraph: bool = False

    def __post_init__(self) -> None:
        edges = tuple((int(e), int(u), int(v)) for e, u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        ids = {e[0] for e in edges}
        if len(ids) != len(edges):
            seen: set[int] = set()
            dup = next(e[0] for e in edges if e[0] in seen or seen.add(e[0]))
            raise InputError(f"duplicate edge id {dup}")
        for eid, u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {eid} has endpoint outside 0..{self.n - 1}")
        if not self.multigraph:
            pairs = {(u, v) if u < v else (v, u) for _, u, v in edges}
            if len(pairs) != len(edges) or any(u == v for _, u, v in edges):
                seen_pairs: set[tuple[int, int]] = set()
                for eid, u, v in edges:
                    if u == v:
                        raise InputError(f"loop at vertex {u} (edge {eid}) in simple graph")
                    pair = (u, v) if u < v else (v, u)
                    if pair in seen_pairs:
                        raise InputError(f"parallel edge {eid} on {pair} in simple graph")
                    seen_pairs.add(pair)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]], multigraph: bool = False) -> "Graph":
        """Build a graph whose edge ids are the positions in ``pairs``."""
        return cls(n, tuple((i, p[0], p[1]) for i, p in enumerate(pairs)), multigraph)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {eid: i for i, (eid, _, _) in enumerate(self.edges)}

    @cached_property
    def ends(self) -> dict[int, tuple[int, int]]:
        """``edge_id -> (u, v)`` lookup table."""
        return {eid: (u, v) for eid, u, v in self.edges}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbour, edge_id)`` pairs in edge order.
        A loop contributes two entries at its vertex."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, u, v in self.edges:
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, eid: int) -> bool:
        return eid in self._index

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self.ends[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_loops(self) -> bool:
        return any(u == v for _, u, v in self.edges)

    def is_simple(self) -> bool:
        pairs = {(min(u, v), max(u, v)) for _, u, v in self.edges}
        return len(pairs) == len(self.edges) and not self.has_loops()

    def check_ids(self, edge_ids: Iterable[int]) -> None:
        for eid in edge_ids:
            if eid not in self._index:
                raise InputError(f"unknown edge id {eid}")

    def subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping the given ids."""
        keep = set(edge_ids)
        self.check_ids(keep)
        return Graph(self.n, tuple(e for e in self.edges if e[0] in keep), self.multigraph)

    def next_edge_id(self) -> int:
        return max((e[0] for e in self.edges), default=-1) + 1

    def to_json(self) -> dict:
        """Position-indexed JSON form; only valid when ids are ``0..m-1`` in order."""
        if any(e[0] != i for i, e in enumerate(self.edges)):
            raise InputError("JSON graph format needs edge ids 0..m-1 in order")
        out = {"format": 1, "n": self.n, "edges": [[u, v] for _, u, v in self.edges]}
        if self.multigraph:
            out["multigraph"] = True
        return out


def graph_from_json(data: dict) -> Graph:
    """Parse the ``{"n": .., "edges": [[u, v], ..], "multigraph": ..}`` format."""
    if not isinstance(data, dict):
        raise InputError("graph JSON must be an object")
    if "n" not in data or not isinstance(data["n"], int) or isinstance(data["n"], bool):
        raise InputError("graph JSON field 'n' must be an integer")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("graph JSON field 'edges' must be an array")
    for i, pair in enumerate(edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise InputError(f"graph JSON edges[{i}] must be a pair of integers")
    multigraph = data.get("multigraph", False)
    if not isinstance(multigraph, bool):
        raise InputError("graph JSON field 'multigraph' must be a boolean")
    return Graph.from_pairs(data["n"], edges, multigraph)


def dumps(obj: dict) -> str:
    """Canonical JSON text used for every artifact the package writes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


@dataclass
class DiEdgeSet:
    """Oriented edges ``edge_id -> (tail, head)`` with an in-arc index."""

    arcs: dict[int, tuple[int, int]] = field(default_factory=dict)
    _in: dict[int, list[int]] = field(default_factory=dict, repr=False)

    def add(self, eid: int, tail: int, head: int) -> None:
        if eid in self.arcs:
            raise InputError(f"edge id {eid} oriented twice")
        self.arcs[eid] = (tail, head)
        self._in.setdefault(head, []).append(eid)

    def in_degree(self, v: int) -> int:
        return len(self._in.get(v, ()))

    def in_arcs(self, v: int) -> list[int]:
        return self._in.get(v, [])

    def __contains__(self, eid: int) -> bool:
        return eid in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs.items())


@dataclass(frozen=True)
class ForestDecomposition:
    """Edge-disjoint forests whose union is the whole edge set."""

    parts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> "ForestDecomposition":
        return cls(tuple(frozenset(p) for p in parts))

    def __len__(self) -> int:
        return len(self.parts)

    def is_valid_for(self, g: Graph) -> bool:
        total = sum(len(p) for p in self.parts)
        union = frozenset().union(*self.parts) if self.parts else frozenset()
        return (
            total == len(union)
            and union == g.edge_ids
            and all(is_forest(g, p) for p in self.parts)
        )

    def to_json(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def connected_components(g: Graph, edge_ids: Iterable[int] | None = None) -> list[int]:
    """Component label per vertex, labels numbered by smallest member vertex.

    With ``edge_ids`` only that edge subset is used (all vertices are kept).
    """
    if edge_ids is None:
        adj = g.adjacency
    else:
        keep = set(edge_ids)
        g.check_ids(keep)
        adj = [[(w, e) for w, e in nbrs if e in keep] for nbrs in g.adjacency]
    label = [-1] * g.n
    current = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = current
        stack = [s]
        while stack:
            x = stack.pop()
            for w, _ in adj[x]:
                if label[w] == -1:
                    label[w] = current
                    stack.append(w)
        current += 1
    return label


def component_vertex_sets(labels: Sequence[int]) -> list[list[int]]:
    groups: list[list[int]] = [[] for _ in range(max(labels, default=-1) + 1)]
    for v, lab in enumerate(labels):
        groups[lab].append(v)
    return groups


def is_forest(g: Graph, edge_ids: Iterable[int]) -> bool:
    """True iff the given edge subset contains no cycle (loops and parallel
    pairs count as cycles)."""
    uf = UnionFind(g.n)
    ends = g.ends
    for eid in edge_ids:
        if eid not in ends:
            raise InputError(f"unknown edge id {eid}")
        u, v = ends[eid]
        if not uf.union(u, v):
            return False
    return True


def _bfs_far(adj, source: int) -> tuple[int, int, int]:
    dist = {source: 0}
    queue = deque([source])
    far = source
    while queue:
        x = queue.popleft()
        if dist[x] > dist[far]:
            far = x
        for w, _ in adj[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return far, dist[far], len(dist)


def tree_diameter(g: Graph, component: Iterable[int]) -> int:
    """Diameter (in edges) of the tree induced by ``component``.

    Uses two farthest-vertex sweeps, which is exact on trees.  Raises
    StructuralError when the induced subgraph is not a tree.
    """
    vs = set(component)
    if not vs:
        raise StructuralError("empty component")
    induced = 0
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
    for eid, u, v in g.edges:
        if u in vs and v in vs:
            induced += 1
            adj[u].append((v, eid))
            if u != v:
                adj[v].append((u, eid))
    if induced != len(vs) - 1:
        raise StructuralError(f"component with {len(vs)} vertices induces {induced} edges, not a tree")
    start = min(vs)
    far, _, reached = _bfs_far(adj, start)
    if reached != len(vs):
        raise StructuralError("component is disconnected")
    _, diameter, _ = _bfs_far(adj, far)
    return diameter


def forest_component_diameters(g: Graph, edge_ids: Iterable[int]) -> list[int]:
    """Diameters of the non-trivial trees of a forest edge subset, ordered by
    smallest vertex.  Isolated vertices are skipped."""
    keep = set(edge_ids)
    if not is_forest(g, keep):
        raise StructuralError("edge subset contains a cycle")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in keep:
        u, v = g.endpoints(eid)
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s] or not adj[s]:
            continue
        far, _, _ = _bfs_far(adj, s)
        _, diameter, _ = _bfs_far(adj, far)
        stack = [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            for w, _ in adj[x]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(diameter)
    return out


def bfs_distances(g: Graph, source: int, edge_ids: Iterable[int] | None = None) -> list[int]:
    """Hop distances from ``source``; -1 for unreachable vertices."""
    if edge_ids is None:
        adj = g.adjacency
    else:
        keep = set(edge_ids)
        adj = [[(w, e) for w, e in nbrs if e in keep] for nbrs in g.adjacency]
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for w, _ in adj[x]:
            if dist[w] == -1:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def graph_diameter(g: Graph) -> int:
    """Largest finite shortest-path distance over all vertex pairs (per
    component for disconnected graphs)."""
    return max((max(bfs_distances(g, s)) for s in range(g.n)), default=0)


def spanning_tree_edges(g: Graph, edge_ids: Iterable[int] | None = None, root: int = 0) -> list[int]:
    """BFS tree edges over the given edge subset; raises StructuralError if
    the subset does not connect all vertices."""
    if g.n == 0:
        return []
    if edge_ids is None:
        adj = g.adjacency
    else:
        keep = set(edge_ids)
        adj = [[(w, e) for w, e in nbrs if e in keep] for nbrs in g.adjacency]
    seen = [False] * g.n
    seen[root] = True
    tree = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for w, e in adj[x]:
            if not seen[w]:
                seen[w] = True
                tree.append(e)
                queue.append(w)
    if len(tree) != g.n - 1:
        raise StructuralError("edge subset is not connected and spanning")
    return tree

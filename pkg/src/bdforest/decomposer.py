"""Two-forest decomposition of a forest plus a star forest with every tree
of diameter at most 18.

Pipeline: outing -> center graph -> tame vertex 2-coloring -> induced edge
2-coloring -> drop augmentation edges.  Colors are the integers 1 and 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph_core import ForestDecomposition, Graph, GraphError, StructuralError
from .outing import Outing, build_outing, restrict_to_original

VertexColoring = list[int]
"""Color (1 or 2) per vertex index."""

EdgeColoring = dict[int, int]
"""Color (1 or 2) per edge id."""


class CenterGraphError(GraphError):
    """The center graph violates in-degree <= 1 (malformed outing)."""


@dataclass(frozen=True)
class CenterGraph:
    """Digraph on the star centers.

    ``parent[v]`` is the tail of the unique arc into center ``v`` (or -1);
    ``provenance[v]`` is the tree edge id for a direct T-arc, or a
    ``(star_edge_id, tree_edge_id)`` pair for an arc through a leaf.
    """

    vertices: frozenset[int]
    parent: tuple[int, ...]
    provenance: tuple[object, ...]

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(self.parent[v], v) for v in sorted(self.vertices) if self.parent[v] != -1]


@dataclass(frozen=True)
class DipathStats:
    d_tree: int
    d_1: int
    d_2: int

    @property
    def bound(self) -> int:
        return self.d_tree + 2 * (self.d_1 + self.d_2) + 6


def center_graph(o: Outing) -> CenterGraph:
    n = o.n
    is_center = o.is_center
    star_parent = o.star_parent
    star_edge = [-1] * n
    for eid, (_, head) in o.star_arcs:
        star_edge[head] = eid
    parent = [-1] * n
    provenance: list[object] = [None] * n
    for eid, (u, v) in o.tree_arcs:
        if not is_center[v]:
            continue
        if is_center[u]:
            tail, prov = u, eid
        else:
            tail, prov = star_parent[u], (star_edge[u], eid)
            if tail == v:
                continue
        if parent[v] != -1:
            raise CenterGraphError(f"center {v} has two incoming center-graph arcs")
        parent[v] = tail
        provenance[v] = prov
    return CenterGraph(o.centers, tuple(parent), tuple(provenance))


def _color_center_components(cg: CenterGraph, n: int) -> list[int]:
    """Proper 2-coloring of each center-graph component, or of the tree left
    after cutting the odd cycle's lexicographically smallest arc."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for v in cg.vertices:
        p = cg.parent[v]
        if p != -1:
            adj[v].append(p)
            adj[p].append(v)
    color = [0] * n
    seen = [False] * n
    for s in sorted(cg.vertices):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        i = 0
        while i < len(comp):
            for w in adj[comp[i]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        cut = _odd_cycle_cut(cg, comp)
        if cut is None:
            _two_color(adj, comp, s, 1, color, None)
        else:
            u, v = cut
            _two_color(adj, comp, u, 2, color, cut)
    return color


def _odd_cycle_cut(cg: CenterGraph, comp: list[int]) -> tuple[int, int] | None:
    # In-degree <= 1 forces at most one directed cycle per component.
    parent = cg.parent
    members = set(comp)
    state: dict[int, int] = {}
    for s in comp:
        path = []
        x = s
        while x != -1 and x in members and x not in state:
            state[x] = 1
            path.append(x)
            x = parent[x]
        if x != -1 and state.get(x) == 1:
            cycle = path[path.index(x):]
            for y in path:
                state[y] = 2
            if len(cycle) % 2 == 0:
                return None
            arcs = sorted((parent[y], y) for y in cycle)
            return arcs[0]
        for y in path:
            state[y] = 2
    return None


def _two_color(adj, comp, start, start_color, color, skip) -> None:
    color[start] = start_color
    queue = deque([start])
    done = {start}
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if skip is not None and {x, w} == set(skip):
                continue
            if w not in done:
                done.add(w)
                color[w] = 3 - color[x]
                queue.append(w)


def tame_coloring(o: Outing, cg: CenterGraph | None = None) -> VertexColoring:
    """Tame vertex 2-coloring: class 1 independent in the center graph,
    class 2 without directed 2-paths there, and no vertex-monochromatic
    2-dipath of T inside the leaves."""
    if cg is None:
        cg = center_graph(o)
    color = _color_center_components(cg, o.n)
    star_parent = o.star_parent
    tree_parent = o.tree_parent
    is_center = o.is_center
    for v in o.bfs_order:
        if is_center[v]:
            continue
        w = star_parent[v]
        u = tree_parent[v]
        if u == -1:
            color[v] = color[w]
            continue
        cu = color[u]
        u_rebellious = not is_center[u] and cu != color[star_parent[u]]
        if u_rebellious and cu == color[w]:
            color[v] = cu
        else:
            color[v] = 3 - cu
    return color


def rebellious_vertices(o: Outing, c: Sequence[int]) -> list[bool]:
    star_parent = o.star_parent
    return [star_parent[v] != -1 and c[star_parent[v]] != c[v] for v in range(o.n)]


def extend_coloring(o: Outing, c: Sequence[int]) -> EdgeColoring:
    """Edge coloring induced by a vertex coloring.

    Star arc u->v gets c(v).  Tree arc u->v gets c(v) when v is a center,
    c(u) == c(v) and u is not rebellious; otherwise 3 - c(v).
    """
    rebellious = rebellious_vertices(o, c)
    is_center = o.is_center
    ec: EdgeColoring = {}
    for eid, (_, v) in o.star_arcs:
        ec[eid] = c[v]
    for eid, (u, v) in o.tree_arcs:
        if is_center[v] and c[u] == c[v] and not rebellious[u]:
            ec[eid] = c[v]
        else:
            ec[eid] = 3 - c[v]
    return ec


def _longest_chain(parent: Sequence[int], keep: Sequence[bool]) -> int:
    """Longest path (in arcs) along ``parent`` pointers restricted to kept
    vertices.  Raises StructuralError on a cycle."""
    n = len(parent)
    depth = [-1] * n
    for s in range(n):
        if not keep[s] or depth[s] != -1:
            continue
        path = []
        x = s
        on_path = set()
        while x != -1 and keep[x] and depth[x] == -1:
            if x in on_path:
                raise StructuralError("directed cycle among kept vertices")
            on_path.add(x)
            path.append(x)
            x = parent[x]
        base = depth[x] if (x != -1 and keep[x]) else -1
        for y in reversed(path):
            base += 1
            depth[y] = base
    return max((d for d in depth if d > 0), default=0)


def dipath_stats(o: Outing, c: Sequence[int], cg: CenterGraph | None = None) -> DipathStats:
    """Measured d_T (leaf-only vertex-monochromatic T-dipaths) and d_1, d_2
    (monochromatic center-graph dipaths per color)."""
    if cg is None:
        cg = center_graph(o)
    n = o.n
    is_center = o.is_center
    tp = o.tree_parent
    tree_parent = [p if (p != -1 and not is_center[v] and not is_center[p] and c[p] == c[v]) else -1
                   for v, p in enumerate(tp)]
    d_tree = _longest_chain(tree_parent, [not x for x in is_center])
    per_color = []
    for col in (1, 2):
        keep = [is_center[v] and c[v] == col for v in range(n)]
        parent = [p if (p != -1 and keep[p]) else -1 for p in cg.parent]
        per_color.append(_longest_chain(parent, keep))
    return DipathStats(d_tree, per_color[0], per_color[1])


@dataclass(frozen=True)
class ForestStarResult:
    decomposition: ForestDecomposition
    outing: Outing
    vertex_coloring: VertexColoring
    edge_coloring: EdgeColoring
    center: CenterGraph
    stats: DipathStats


def color_forest_star(g: Graph, forest_edges: Iterable[int], star_edges: Iterable[int]) -> ForestStarResult:
    """Run the whole construction and keep every intermediate object."""
    o = build_outing(forest_edges, star_edges, g)
    cg = center_graph(o)
    c = tame_coloring(o, cg)
    ec = extend_coloring(o, c)
    part1, part2 = restrict_to_original(o, ec)
    stats = dipath_stats(o, c, cg)
    return ForestStarResult(ForestDecomposition((part1, part2)), o, c, ec, cg, stats)


def decompose_forest_star(g: Graph, forest_edges: Iterable[int], star_edges: Iterable[int]):
    """Two forests covering forest_edges | star_edges, each tree of diameter
    at most 18.  Returns ``(ForestDecomposition, DecompositionReport)``; the
    report is computed by the independent checkers in ``verify``."""
    from .verify import report_for_forest_star

    res = color_forest_star(g, forest_edges, star_edges)
    sub = g if res.outing.original_edge_ids == g.edge_ids else g.subgraph(res.outing.original_edge_ids)
    return res.decomposition, report_for_forest_star(sub, res, diameter=18)

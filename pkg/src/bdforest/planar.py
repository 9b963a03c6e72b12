"""Combinatorial plane embeddings (rotation systems), duals, thin spanning
trees of 6-edge-connected plane multigraphs, and instance generators.

A dart is ``(edge_id, side)``: side 0 leaves the edge's first endpoint,
side 1 leaves the second.  Rotations list darts counter-clockwise; the face
after dart ``d`` (ending at ``y``) is the rotation successor at ``y`` of the
reverse of ``d``.  Genus zero is certified by Euler's formula.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .decomposer import color_forest_star
from .graph_core import (
    CapacityError,
    Graph,
    GraphError,
    InputError,
    connected_components,
    forest_component_diameters,
    is_forest,
    spanning_tree_edges,
)
from .verify import THIN_EXHAUSTIVE_LIMIT, CutBoundary, boundary, verify_thin

Dart = tuple[int, int]

__all__ = [
    "CutBoundary",
    "DualMap",
    "EmbeddingError",
    "PlanarEmbedding",
    "PreconditionError",
    "ThinTreesResult",
    "build_dual",
    "edge_connectivity",
    "find_forest_matching",
    "find_forest_plus",
    "gen_counterexample",
    "gen_honeycomb",
    "gen_triangulation_strip",
    "girth",
    "random_bipartite_planar",
    "random_triangulation",
    "thin_trees",
    "thinness_witness_search",
]


class EmbeddingError(GraphError):
    """Rotation system is malformed or not of genus zero."""


class PreconditionError(GraphError):
    """Input violates a structural precondition (connectivity, girth)."""


@dataclass(frozen=True)
class PlanarEmbedding:
    graph: Graph
    rotation: tuple[tuple[Dart, ...], ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError(f"rotation has {len(self.rotation)} entries for {g.n} vertices")
        seen: set[Dart] = set()
        for x, darts in enumerate(self.rotation):
            for eid, side in darts:
                u, v = g.endpoints(eid)
                if (u, v)[side] != x:
                    raise EmbeddingError(f"dart ({eid},{side}) does not leave vertex {x}")
                if (eid, side) in seen:
                    raise EmbeddingError(f"dart ({eid},{side}) appears twice")
                seen.add((eid, side))
        if len(seen) != 2 * g.m:
            raise EmbeddingError("some edge is missing from the rotation system")

    @classmethod
    def from_edge_rotation(cls, g: Graph, rotation: Sequence[Sequence[int]]) -> "PlanarEmbedding":
        """Rotation given as edge ids per vertex; a loop is listed twice and
        its first occurrence is taken as side 0."""
        out = []
        for x, eids in enumerate(rotation):
            darts = []
            used: set[int] = set()
            for eid in eids:
                u, v = g.endpoints(eid)
                if u == v:
                    side = 1 if eid in used else 0
                    used.add(eid)
                elif x == u:
                    side = 0
                elif x == v:
                    side = 1
                else:
                    raise EmbeddingError(f"edge {eid} listed at non-incident vertex {x}")
                darts.append((eid, side))
            out.append(tuple(darts))
        return cls(g, tuple(out))

    @classmethod
    def from_coordinates(cls, g: Graph, coords: Sequence[tuple[float, float]]) -> "PlanarEmbedding":
        """Counter-clockwise rotation of a straight-line drawing (simple
        graphs only)."""
        rot = []
        for x in range(g.n):
            cx, cy = coords[x]
            darts = []
            for w, eid in g.adjacency[x]:
                u, _ = g.endpoints(eid)
                side = 0 if u == x else 1
                wx, wy = coords[w]
                darts.append((math.atan2(wy - cy, wx - cx), (eid, side)))
            darts.sort()
            rot.append(tuple(d for _, d in darts))
        return cls(g, tuple(rot))

    def edge_rotation(self) -> list[list[int]]:
        return [[eid for eid, _ in darts] for darts in self.rotation]

    def head(self, dart: Dart) -> int:
        u, v = self.graph.endpoints(dart[0])
        return v if dart[1] == 0 else u

    def tail(self, dart: Dart) -> int:
        u, v = self.graph.endpoints(dart[0])
        return u if dart[1] == 0 else v

    @cached_property
    def _position(self) -> dict[Dart, tuple[int, int]]:
        return {d: (x, i) for x, darts in enumerate(self.rotation) for i, d in enumerate(darts)}

    def face_successor(self, dart: Dart) -> Dart:
        eid, side = dart
        x, i = self._position[(eid, 1 - side)]
        darts = self.rotation[x]
        return darts[(i + 1) % len(darts)]

    @cached_property
    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        """Facial walks, ordered by their smallest dart."""
        done: set[Dart] = set()
        out = []
        for eid, _, _ in sorted(self.graph.edges):
            for side in (0, 1):
                start = (eid, side)
                if start in done:
                    continue
                walk = []
                d = start
                while d not in done:
                    done.add(d)
                    walk.append(d)
                    d = self.face_successor(d)
                out.append(tuple(walk))
        return tuple(out)

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {d: i for i, walk in enumerate(self.faces) for d in walk}

    def euler_violations(self) -> list[str]:
        """Per component with edges: V - E + F must equal 2."""
        labels = connected_components(self.graph)
        nv: dict[int, int] = {}
        ne: dict[int, int] = {}
        nf: dict[int, int] = {}
        for v, lab in enumerate(labels):
            nv[lab] = nv.get(lab, 0) + 1
        for _, u, _ in self.graph.edges:
            ne[labels[u]] = ne.get(labels[u], 0) + 1
        for walk in self.faces:
            lab = labels[self.tail(walk[0])]
            nf[lab] = nf.get(lab, 0) + 1
        bad = []
        for lab in ne:
            chi = nv[lab] - ne[lab] + nf.get(lab, 0)
            if chi != 2:
                bad.append(f"component {lab}: V-E+F = {chi}")
        return bad

    def is_euler_valid(self) -> bool:
        return not self.euler_violations()

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["rotation"] = self.edge_rotation()
        return out


def embedding_from_json(data: dict) -> PlanarEmbedding:
    from .graph_core import graph_from_json

    g = graph_from_json(data)
    rotation = data.get("rotation")
    if not isinstance(rotation, list) or len(rotation) != g.n:
        raise InputError("embedding JSON needs 'rotation': one edge-id list per vertex")
    for i, r in enumerate(rotation):
        if not isinstance(r, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in r):
            raise InputError(f"embedding JSON rotation[{i}] must be a list of edge ids")
    try:
        return PlanarEmbedding.from_edge_rotation(g, rotation)
    except EmbeddingError as exc:
        raise InputError(f"invalid rotation: {exc}") from None


def insert_vertices_in_face(emb: PlanarEmbedding, face: int, groups: Sequence[Sequence[int]]) -> PlanarEmbedding:
    """Add one new vertex per group inside a face, joined to the corners
    listed in the group (indices into the facial walk, increasing).  Groups
    must occupy non-interleaving corner ranges."""
    g = emb.graph
    walk = emb.faces[face]
    n, next_id = g.n, g.next_edge_id()
    new_edges = list(g.edges)
    rotation = [list(r) for r in emb.rotation]
    insert_after: dict[Dart, list[Dart]] = {}
    for t, corners in enumerate(groups):
        p = n + t
        p_rot = []
        for ci in corners:
            x = emb.tail(walk[ci])
            incoming = walk[ci - 1]
            rev_in = (incoming[0], 1 - incoming[1])
            new_edges.append((next_id, x, p))
            insert_after.setdefault(rev_in, []).append((next_id, 0))
            p_rot.append((next_id, 1))
            next_id += 1
        rotation.append(p_rot[::-1])
    for x in range(n):
        out = []
        for d in rotation[x]:
            out.append(d)
            out.extend(insert_after.get(d, ()))
        rotation[x] = out
    g2 = Graph(n + len(groups), tuple(new_edges), g.multigraph)
    return PlanarEmbedding(g2, tuple(tuple(r) for r in rotation))


# -- duality --------------------------------------------------------------------

@dataclass(frozen=True)
class DualMap:
    dual: PlanarEmbedding
    edge_bijection: dict[int, int]

    @property
    def inverse(self) -> dict[int, int]:
        return {d: p for p, d in self.edge_bijection.items()}


def build_dual(emb: PlanarEmbedding) -> DualMap:
    """One dual vertex per face, dual edge ids equal to primal ids; the
    rotation at a dual vertex follows its facial walk."""
    g = emb.graph
    if connected_components(g).count(0) != g.n and g.n:
        raise EmbeddingError("dual needs a connected embedding")
    bad = emb.euler_violations()
    if bad:
        raise EmbeddingError("; ".join(bad))
    face_of = emb.face_of
    faces = emb.faces
    nf = len(faces) if g.m else 1
    edges = tuple((eid, face_of[(eid, 0)], face_of[(eid, 1)]) for eid, _, _ in g.edges)
    dual_graph = Graph(nf, edges, multigraph=True)
    rotation = [tuple(walk) for walk in faces] if g.m else [()]
    dual = PlanarEmbedding(dual_graph, tuple(rotation))
    return DualMap(dual, {eid: eid for eid, _, _ in g.edges})


# -- structural queries ------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle (1 for loops, 2 for parallel edges);
    ``math.inf`` for forests."""
    if g.has_loops():
        return 1
    if not g.is_simple():
        return 2
    best = math.inf
    adj = g.adjacency
    for s in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for w, eid in adj[x]:
                if eid == via[x]:
                    continue
                if dist[w] == -1:
                    dist[w] = dist[x] + 1
                    via[w] = eid
                    queue.append(w)
                else:
                    best = min(best, dist[x] + dist[w] + 1)
    return best


def edge_connectivity(g: Graph) -> int:
    """Global minimum edge cut by unit-capacity max flow from vertex 0 to
    every other vertex.  Loops are ignored."""
    if g.n < 2:
        return 0
    return min(_max_flow(g, 0, t) for t in range(1, g.n))


def _max_flow(g: Graph, s: int, t: int) -> int:
    # Undirected unit edges: each edge carries flow -1, 0 or +1 (u->v positive).
    flow: dict[int, int] = {}
    ends = g.ends
    adj = g.adjacency
    total = 0
    while True:
        prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for w, eid in adj[x]:
                if w in prev or w == x:
                    continue
                u, _ = ends[eid]
                f = flow.get(eid, 0)
                direction = 1 if x == u else -1
                if f * direction < 1:
                    prev[w] = (x, eid)
                    queue.append(w)
        if t not in prev:
            return total
        x = t
        while x != s:
            px, eid = prev[x]
            u, _ = ends[eid]
            flow[eid] = flow.get(eid, 0) + (1 if px == u else -1)
            x = px
        total += 1


def find_forest_matching(g: Graph, max_vertices: int | None = 14) -> tuple[frozenset[int], frozenset[int]]:
    """Exhaustive search for a partition of E(g) into a forest and a
    matching; returns ``(forest, matching)``."""
    return find_forest_plus(g, "matching", max_vertices)


def find_forest_plus(
    g: Graph, kind: str = "matching", max_vertices: int | None = 14
) -> tuple[frozenset[int], frozenset[int]]:
    """Backtracking search for a forest + matching (``kind="matching"``) or
    forest + star forest (``kind="star"``) partition of E(g).

    Raises CapacityError when g exceeds ``max_vertices`` or when no such
    partition exists.
    """
    if kind not in ("matching", "star"):
        raise InputError(f"unknown partition kind {kind!r}")
    if max_vertices is not None and g.n > max_vertices:
        raise CapacityError(f"forest + {kind} search limited to {max_vertices} vertices")
    if g.has_loops():
        raise CapacityError("a loop fits in neither a forest nor a star forest")
    order = []
    seen_e: set[int] = set()
    for x in _bfs_vertex_order(g):
        for _, eid in g.adjacency[x]:
            if eid not in seen_e:
                seen_e.add(eid)
                order.append(eid)
    ends = g.ends
    parent = list(range(g.n))
    size = [1] * g.n
    star_nbrs: list[list[int]] = [[] for _ in range(g.n)]
    choice: dict[int, str] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def may_center(x: int) -> bool:
        nb = star_nbrs[x]
        return not nb or len(nb) >= 2 or len(star_nbrs[nb[0]]) == 1

    def star_ok(u: int, v: int) -> bool:
        if kind == "matching":
            return not star_nbrs[u] and not star_nbrs[v]
        return (not star_nbrs[v] and may_center(u)) or (not star_nbrs[u] and may_center(v))

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        eid = order[i]
        u, v = ends[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            choice[eid] = "F"
            if rec(i + 1):
                return True
            parent[rv] = rv
            size[ru] -= size[rv]
        if star_ok(u, v):
            star_nbrs[u].append(v)
            star_nbrs[v].append(u)
            choice[eid] = "S"
            if rec(i + 1):
                return True
            star_nbrs[u].pop()
            star_nbrs[v].pop()
        choice.pop(eid, None)
        return False

    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(order) + 100))
    try:
        found = rec(0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        raise CapacityError(f"no forest + {kind} partition exists")
    forest = frozenset(e for e, c in choice.items() if c == "F")
    return forest, frozenset(choice) - forest


def _bfs_vertex_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            out.append(x)
            for w, _ in g.adjacency[x]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return out


# -- thin spanning trees -----------------------------------------------------

@dataclass(frozen=True)
class ThinTreesResult:
    tree1: frozenset[int]
    tree2: frozenset[int]
    dual_forest: frozenset[int]
    dual_matching: frozenset[int]
    max_diameter: int
    epsilon: Fraction
    measured_epsilon: Fraction
    thin_checked: bool
    witnesses: tuple[CutBoundary | None, CutBoundary | None] = (None, None)

    @property
    def thin_ok(self) -> bool | None:
        if not self.thin_checked:
            return None
        return self.witnesses == (None, None)

    def to_json(self) -> dict:
        return {
            "format": 1,
            "tree1": sorted(self.tree1),
            "tree2": sorted(self.tree2),
            "dual_forest": sorted(self.dual_forest),
            "dual_matching": sorted(self.dual_matching),
            "max_diameter": self.max_diameter,
            "epsilon": str(self.epsilon),
            "measured_epsilon": str(self.measured_epsilon),
            "thin_checked": self.thin_checked,
            "thin_ok": self.thin_ok,
            "witnesses": [None if w is None else sorted(w.vertex_set) for w in self.witnesses],
        }


def thin_trees(
    emb: PlanarEmbedding,
    matching: Iterable[int] | None = None,
    forest: Iterable[int] | None = None,
    max_search_vertices: int | None = 14,
    check: bool = True,
) -> ThinTreesResult:
    """Two edge-disjoint 18/19-thin spanning trees of a 6-edge-connected
    plane multigraph.

    The dual must be simple of girth >= 6.  Its forest + matching partition
    (dual edge ids) can be supplied; otherwise it is searched exhaustively.
    The dual's two bounded-diameter forests, pulled back through the edge
    bijection, are connected spanning subgraphs of the primal; a BFS tree is
    taken in each.  With ``check`` and at most 20 vertices every cut is
    enumerated to confirm thinness.
    """
    g = emb.graph
    dm = build_dual(emb)
    dual = dm.dual.graph
    gi = girth(dual)
    if gi < 6:
        raise PreconditionError(f"dual has girth {gi} < 6; the graph is not 6-edge-connected")
    dual_simple = Graph(dual.n, dual.edges)
    if matching is None:
        if forest is not None:
            raise InputError("give the matching together with the forest")
        f_set, m_set = find_forest_matching(dual_simple, max_search_vertices)
    else:
        m_set = frozenset(matching)
        f_set = frozenset(forest) if forest is not None else dual_simple.edge_ids - m_set
        dual_simple.check_ids(m_set | f_set)
        if (m_set | f_set) != dual_simple.edge_ids or (m_set & f_set):
            raise InputError("forest and matching must partition the dual edges")
        hit: set[int] = set()
        for eid in m_set:
            u, v = dual_simple.ends[eid]
            if u in hit or v in hit:
                raise InputError("supplied matching shares a vertex")
            hit.update((u, v))
        if not is_forest(dual_simple, f_set):
            raise InputError("supplied forest has a cycle")
    res = color_forest_star(dual_simple, f_set, m_set)
    diam = max(
        (max(forest_component_diameters(dual_simple, p), default=0) for p in res.decomposition.parts),
        default=0,
    )
    inverse = dm.inverse
    trees = []
    for part in res.decomposition.parts:
        primal_ids = [inverse[e] for e in part]
        trees.append(frozenset(spanning_tree_edges(g, primal_ids)))
    eps = Fraction(18, 19)
    witnesses: tuple = (None, None)
    checked = check and g.n <= THIN_EXHAUSTIVE_LIMIT
    if checked:
        witnesses = (verify_thin(g, trees[0], eps), verify_thin(g, trees[1], eps))
    return ThinTreesResult(
        trees[0], trees[1], f_set, m_set, diam, eps, Fraction(diam, diam + 1), checked, witnesses
    )


def _cut_for(g: Graph, a: Iterable[int], sub: frozenset[int]) -> CutBoundary:
    b = boundary(g, a)
    return CutBoundary(frozenset(a), b, frozenset(b & sub))


def exhaustive_cuts(g: Graph, sub: frozenset[int], eps: Fraction) -> CutBoundary | None:
    """First violating cut in bitmask order, vertex n-1 kept outside A."""
    n = g.n
    if n > THIN_EXHAUSTIVE_LIMIT:
        raise CapacityError(f"exhaustive cut search limited to {THIN_EXHAUSTIVE_LIMIT} vertices")
    edges = [(u, v, eid in sub) for eid, u, v in g.edges]
    for mask in range(1, 1 << max(n - 1, 0)):
        total = inside = 0
        for u, v, in_sub in edges:
            if (mask >> u ^ mask >> v) & 1:
                total += 1
                inside += in_sub
        if inside * eps.denominator > total * eps.numerator:
            return _cut_for(g, [v for v in range(n) if mask >> v & 1], sub)
    return None


def targeted_cuts(g: Graph, tree: Iterable[int]) -> list[CutBoundary]:
    """Cuts that defeat thinness in 4-regular graphs: components of
    G - E(T) when it is disconnected, otherwise the two sides of T' - e for
    every edge e of a spanning tree T' of G - E(T)."""
    tree = frozenset(tree)
    rest = g.edge_ids - tree
    labels = connected_components(g, rest)
    if max(labels, default=0) > 0:
        return [_cut_for(g, [v for v in range(g.n) if labels[v] == lab], tree)
                for lab in range(max(labels) + 1)]
    t2 = spanning_tree_edges(g, rest)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in t2:
        u, v = g.ends[eid]
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    # Subtree below each T' edge, from a single rooted traversal.
    parent_edge = [-1] * g.n
    order = [0]
    seen = [False] * g.n
    seen[0] = True
    for x in order:
        for w, eid in adj[x]:
            if not seen[w]:
                seen[w] = True
                parent_edge[w] = eid
                order.append(w)
    below: list[list[int]] = [[v] for v in range(g.n)]
    parent = [-1] * g.n
    for v in order[1:]:
        u, w = g.ends[parent_edge[v]]
        parent[v] = u if w == v else w
    out = []
    for v in reversed(order[1:]):
        out.append(_cut_for(g, below[v], tree))
        below[parent[v]].extend(below[v])
    return out


def thinness_witness_search(
    emb: PlanarEmbedding | Graph, tree: Iterable[int], eps, mode: str = "auto"
) -> CutBoundary | None:
    """Look for A with |sigma_T(A)| > eps |sigma_G(A)|.

    ``exhaustive`` enumerates all cuts (at most 20 vertices); ``targeted``
    tries the cut family of ``targeted_cuts`` at any size and returns the
    highest-ratio violating cut.  ``auto`` picks exhaustive when allowed.
    Finding nothing in targeted mode does not prove thinness.
    """
    g = emb.graph if isinstance(emb, PlanarEmbedding) else emb
    eps = eps if isinstance(eps, Fraction) else Fraction(str(eps))
    tree = frozenset(tree)
    if mode == "auto":
        mode = "exhaustive" if g.n <= THIN_EXHAUSTIVE_LIMIT else "targeted"
    if mode == "exhaustive":
        return exhaustive_cuts(g, tree, eps)
    if mode != "targeted":
        raise InputError(f"unknown search mode {mode!r}")
    best = None
    for cut in targeted_cuts(g, tree):
        if not cut.boundary or cut.ratio <= eps:
            continue
        if best is None or cut.ratio > best.ratio:
            best = cut
    return best


# -- generators --------------------------------------------------------------

def _find_face(emb: PlanarEmbedding, vertices: set[int]) -> int:
    for i, walk in enumerate(emb.faces):
        if {emb.tail(d) for d in walk} == vertices and len(walk) == len(vertices):
            return i
    raise EmbeddingError("face not found")


def gen_counterexample(k: int) -> PlanarEmbedding:
    """4-regular, 4-edge-connected plane graph: the product of a path of
    length 4k and a 4k-cycle, with k extra vertices in each of the two
    boundary faces, each joined to 4 consecutive degree-3 vertices."""
    if k < 1:
        raise InputError("k must be at least 1")
    size = 4 * k
    layers = size + 1
    vid = lambda i, j: i * size + (j % size)  # noqa: E731
    pairs = []
    for i in range(layers):
        for j in range(size):
            pairs.append((vid(i, j), vid(i, j + 1)))
            if i + 1 < layers:
                pairs.append((vid(i, j), vid(i + 1, j)))
    g = Graph.from_pairs(layers * size, pairs)
    coords = []
    for i in range(layers):
        for j in range(size):
            ang = 2 * math.pi * j / size
            coords.append(((i + 2) * math.cos(ang), (i + 2) * math.sin(ang)))
    emb = PlanarEmbedding.from_coordinates(g, coords)
    for layer in (0, layers - 1):
        ring = {vid(layer, j) for j in range(size)}
        face = _find_face(emb, ring)
        walk = emb.faces[face]
        start = next(i for i, d in enumerate(walk) if emb.tail(d) == vid(layer, 0))
        rotated = [(start + i) % size for i in range(size)]
        groups = [sorted(rotated[4 * t: 4 * t + 4]) for t in range(k)]
        groups = [_contiguous(gr, size) for gr in groups]
        emb = insert_vertices_in_face(emb, face, groups)
    return emb


def _contiguous(corners: list[int], length: int) -> list[int]:
    # Order corner indices along the walk so the group is a consecutive arc.
    corners = sorted(corners)
    for i in range(len(corners)):
        cand = corners[i:] + corners[:i]
        if all((cand[j + 1] - cand[j]) % length == 1 for j in range(len(cand) - 1)):
            return cand
    return corners


def gen_honeycomb(rows: int, cols: int) -> PlanarEmbedding:
    """Patch of rows x cols hexagons (pointy-top, odd rows shifted)."""
    if rows < 1 or cols < 1:
        raise InputError("rows and cols must be positive")
    key_of: dict[tuple[int, int], int] = {}
    coords: list[tuple[float, float]] = []
    pairs: set[tuple[int, int]] = set()
    for r in range(rows):
        for c in range(cols):
            cx = math.sqrt(3) * (c + 0.5 * (r % 2))
            cy = 1.5 * r
            ring = []
            for t in range(6):
                ang = math.radians(30 + 60 * t)
                x, y = cx + math.cos(ang), cy + math.sin(ang)
                key = (round(x * 1e6), round(y * 1e6))
                if key not in key_of:
                    key_of[key] = len(coords)
                    coords.append((x, y))
                ring.append(key_of[key])
            for t in range(6):
                a, b = ring[t], ring[(t + 1) % 6]
                pairs.add((min(a, b), max(a, b)))
    g = Graph.from_pairs(len(coords), sorted(pairs))
    return PlanarEmbedding.from_coordinates(g, coords)


def gen_triangulation_strip(n: int) -> PlanarEmbedding:
    """Maximal plane graph on n vertices with diameter growing like n/3:
    nested triangles joined by antiprism bands, plus up to two caps."""
    if n < 3:
        raise InputError("need at least 3 vertices")
    layers, caps = divmod(n, 3)
    pairs = []
    coords = []
    for i in range(layers):
        for j in range(3):
            ang = math.radians(90 + 120 * j + 60 * i)
            rad = 3.0 ** i
            coords.append((rad * math.cos(ang), rad * math.sin(ang)))
        base = 3 * i
        pairs += [(base, base + 1), (base + 1, base + 2), (base + 2, base)]
        if i + 1 < layers:
            nxt = base + 3
            for j in range(3):
                pairs.append((base + j, nxt + j))
                pairs.append((base + j, nxt + (j - 1) % 3))
    if caps >= 1:
        coords.append((0.0, 0.0))
        pairs += [(3 * layers, j) for j in range(3)]
    g = Graph.from_pairs(3 * layers + (1 if caps >= 1 else 0), pairs)
    emb = PlanarEmbedding.from_coordinates(g, coords)
    if caps == 2:
        outer = {3 * (layers - 1) + j for j in range(3)}
        face = _find_face(emb, outer)
        emb = insert_vertices_in_face(emb, face, [[0, 1, 2]])
    return emb


def random_triangulation(n: int, rng: np.random.Generator) -> PlanarEmbedding:
    """Delaunay triangulation of random points inside a fixed triangle; the
    triangle is the outer face, so the result is maximal planar."""
    from scipy.spatial import Delaunay

    if n < 3:
        raise InputError("need at least 3 vertices")
    corners = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]])
    w = rng.dirichlet([1.0, 1.0, 1.0], size=n - 3)
    w = 0.02 + 0.94 * w
    w /= w.sum(axis=1, keepdims=True)
    pts = np.vstack([corners, w @ corners])
    tri = Delaunay(pts)
    pairs = set()
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        for u, v in ((a, b), (b, c), (a, c)):
            pairs.add((min(u, v), max(u, v)))
    g = Graph.from_pairs(n, sorted(pairs))
    return PlanarEmbedding.from_coordinates(g, [tuple(p) for p in pts.tolist()])


def random_bipartite_planar(rng: np.random.Generator, max_side: int = 7) -> PlanarEmbedding:
    """Random spanning subgraph of a grid (bipartite and plane)."""
    rows = int(rng.integers(2, max_side + 1))
    cols = int(rng.integers(2, max_side + 1))
    keep = float(rng.uniform(0.5, 1.0))
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols and rng.random() < keep:
                pairs.append((v, v + 1))
            if r + 1 < rows and rng.random() < keep:
                pairs.append((v, v + cols))
    g = Graph.from_pairs(rows * cols, pairs)
    coords = [(float(v % cols), float(v // cols)) for v in range(rows * cols)]
    return PlanarEmbedding.from_coordinates(g, coords)

"""Independent checkers for decompositions, colorings and thinness.

Nothing here reuses the construction code it checks: rebellious status,
center-graph arcs, components and diameters are all re-derived from the raw
arcs, colorings and edge sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

import numpy as np

from .graph_core import CapacityError, Graph

if TYPE_CHECKING:
    from .decomposer import ForestStarResult
    from .outing import Outing

THIN_EXHAUSTIVE_LIMIT = 20


@dataclass
class DipathResult:
    """Longest monochromatic dipath; ``cycle`` is set instead when some
    color class contains a directed cycle (the length is then unbounded)."""

    length: int | None
    cycle: list[int] | None = None
    color: int | None = None

    @property
    def has_cycle(self) -> bool:
        return self.cycle is not None


@dataclass
class DecompositionReport:
    partition_ok: bool = True
    parts_ok: list[bool] = field(default_factory=list)
    component_diameters: list[list[int]] = field(default_factory=list)
    max_component_diameter: int = 0
    max_dipath: int | None = None
    dipath_cycle: list[int] | None = None
    tame_ok: bool = True
    res_acyclic_ok: bool = True
    ext_acyclic_ok: bool = True
    diameter_ok: bool = True
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "partition_ok": self.partition_ok,
            "parts_ok": self.parts_ok,
            "component_diameters": self.component_diameters,
            "max_component_diameter": self.max_component_diameter,
            "max_dipath": self.max_dipath,
            "dipath_cycle": self.dipath_cycle,
            "tame_ok": self.tame_ok,
            "res_acyclic_ok": self.res_acyclic_ok,
            "ext_acyclic_ok": self.ext_acyclic_ok,
            "diameter_ok": self.diameter_ok,
            "violations": self.violations,
        }


# -- forests and stars ------------------------------------------------------

def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _path_in(adj: dict[int, list[int]], a: int, b: int) -> list[int]:
    prev = {a: a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for w in adj.get(x, ()):
            if w not in prev:
                prev[w] = x
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def find_cycle(g: Graph, edge_ids: Iterable[int]) -> list[int] | None:
    """Vertex sequence of some cycle in the edge subset, or None."""
    parent = list(range(g.n))
    ends = g.ends
    adj: dict[int, list[int]] = {}
    for eid in edge_ids:
        u, v = ends[eid]
        if u == v:
            return [u, u]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return _path_in(adj, u, v) + [u]
        parent[ru] = rv
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return None


def _diameters(g: Graph, edge_ids: Iterable[int]) -> list[int]:
    """Double-sweep diameters of the trees of an acyclic edge subset."""
    n = g.n
    ends = g.ends
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid in edge_ids:
        u, v = ends[eid]
        adj[u].append(v)
        adj[v].append(u)
    dist = [-1] * n
    stamp = [-1] * n

    def sweep(s: int, tag: int) -> tuple[int, int, list[int]]:
        stamp[s] = tag
        dist[s] = 0
        order = [s]
        far, best = s, 0
        for x in order:
            dx = dist[x] + 1
            for w in adj[x]:
                if stamp[w] != tag:
                    stamp[w] = tag
                    dist[w] = dx
                    order.append(w)
                    if dx > best:
                        far, best = w, dx
        return far, best, order

    out = []
    tag = 0
    for s in range(n):
        if stamp[s] != -1 or not adj[s]:
            continue
        far, _, _ = sweep(s, tag)
        _, diam, _ = sweep(far, tag + 1)
        tag += 2
        out.append(diam)
    return out


def verify_star_forest(g: Graph, edge_ids: Iterable[int]) -> bool:
    """Every component has at most one vertex of degree >= 2."""
    edge_ids = list(edge_ids)
    parent = list(range(g.n))
    degree = [0] * g.n
    for eid in edge_ids:
        u, v = g.endpoints(eid)
        if u == v:
            return False
        degree[u] += 1
        degree[v] += 1
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
    hubs: dict[int, int] = {}
    for v in range(g.n):
        if degree[v] >= 2:
            r = _find(parent, v)
            hubs[r] = hubs.get(r, 0) + 1
            if hubs[r] > 1:
                return False
    return True


def verify_bounded_forest_partition(
    g: Graph, parts: Sequence[Iterable[int]], d: int | None
) -> DecompositionReport:
    """Partition, per-part acyclicity and (when ``d`` is given) the
    component diameter bound."""
    report = DecompositionReport()
    parts = [list(p) for p in parts]
    owner: dict[int, int] = {}
    for i, part in enumerate(parts):
        for eid in part:
            if not g.has_edge(eid):
                report.partition_ok = False
                report.violations.append(f"part {i}: unknown edge id {eid}")
            elif eid in owner:
                report.partition_ok = False
                report.violations.append(f"edge {eid} in parts {owner[eid]} and {i}")
            else:
                owner[eid] = i
    missing = sorted(g.edge_ids - owner.keys())
    if missing:
        report.partition_ok = False
        report.violations.append(f"edges in no part: {missing[:20]}")
    for i, part in enumerate(parts):
        known = [e for e in part if g.has_edge(e)]
        cycle = find_cycle(g, known)
        report.parts_ok.append(cycle is None)
        if cycle is not None:
            report.violations.append(f"part {i} contains cycle through vertices {cycle}")
            report.component_diameters.append([])
            continue
        diams = _diameters(g, known)
        report.component_diameters.append(diams)
        if diams:
            report.max_component_diameter = max(report.max_component_diameter, max(diams))
        if d is not None:
            for j, dm in enumerate(diams):
                if dm > d:
                    report.diameter_ok = False
                    report.violations.append(f"part {i}: component {j} has diameter {dm} > {d}")
    return report


# -- outing colorings --------------------------------------------------------

def _rebellious(o: "Outing", c: Sequence[int]) -> set[int]:
    return {head for _, (tail, head) in o.star_arcs if c[tail] != c[head]}


def verify_tame(o: "Outing", c: Sequence[int]) -> tuple[bool, list[str]]:
    """Every tree arc u->v into a rebellious v has c(u) != c(v) and a
    non-rebellious tail."""
    reb = _rebellious(o, c)
    bad = []
    for eid, (u, v) in sorted(o.tree_arcs):
        if v not in reb:
            continue
        if c[u] == c[v]:
            bad.append(f"tree arc {eid} {u}->{v}: rebellious head with c(u)=c(v)={c[v]}")
        if u in reb:
            bad.append(f"tree arc {eid} {u}->{v}: rebellious head and rebellious tail")
    return not bad, bad


def center_arcs(o: "Outing") -> set[tuple[int, int]]:
    """Center-graph arcs rebuilt by scanning tree arcs and star+tree pairs."""
    centers = o.centers
    t_out: dict[int, list[int]] = {}
    arcs = set()
    for _, (u, v) in o.tree_arcs:
        t_out.setdefault(u, []).append(v)
        if u in centers and v in centers and u != v:
            arcs.add((u, v))
    for _, (u, w) in o.star_arcs:
        if w in centers:
            continue
        for v in t_out.get(w, ()):
            if v in centers and v != u:
                arcs.add((u, v))
    return arcs


def _directed_cycle(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> list[int] | None:
    out: dict[int, list[int]] = {}
    indeg: dict[int, int] = {v: 0 for v in vertices}
    for u, v in arcs:
        out.setdefault(u, []).append(v)
        indeg[v] = indeg.get(v, 0) + 1
        indeg.setdefault(u, 0)
    queue = deque(v for v, k in indeg.items() if k == 0)
    removed = 0
    while queue:
        x = queue.popleft()
        removed += 1
        for w in out.get(x, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if removed == len(indeg):
        return None
    rest = {v for v, k in indeg.items() if k > 0}
    # Walk forward inside the residual graph until a vertex repeats.
    x = min(rest)
    seen: dict[int, int] = {}
    walk = []
    while x not in seen:
        seen[x] = len(walk)
        walk.append(x)
        x = next(w for w in out[x] if w in rest)
    return walk[seen[x]:] + [x]


def extame_violations(o: "Outing", c: Sequence[int]) -> list[str]:
    """Check tameness plus the three structural guarantees of the tame
    coloring construction."""
    _, bad = verify_tame(o, c)
    arcs = center_arcs(o)
    for u, v in sorted(arcs):
        if c[u] == 1 and c[v] == 1:
            bad.append(f"center arc {u}->{v} inside color class 1")
    into: dict[int, list[int]] = {}
    for u, v in arcs:
        if c[u] == 2 and c[v] == 2:
            into.setdefault(v, []).append(u)
    for u, v in sorted(arcs):
        if c[u] == 2 and c[v] == 2 and u in into:
            bad.append(f"center dipath {into[u][0]}->{u}->{v} inside color class 2")
    leaves = o.leaves
    t_parent = {v: u for _, (u, v) in o.tree_arcs}
    for _, (u, v) in sorted(o.tree_arcs):
        p = t_parent.get(u)
        if p is None:
            continue
        if {p, u, v} <= leaves and c[p] == c[u] == c[v]:
            bad.append(f"tree dipath {p}->{u}->{v} in leaves with one color")
    return bad


def res_acyclic(o: "Outing", c: Sequence[int]) -> list[int] | None:
    """A monochromatic directed cycle of the center graph, or None."""
    arcs = center_arcs(o)
    for col in (1, 2):
        vs = [v for v in o.centers if c[v] == col]
        cyc = _directed_cycle(vs, [(u, v) for u, v in arcs if c[u] == col and c[v] == col])
        if cyc:
            return cyc
    return None


def _colored_arcs(o: "Outing", ec: Mapping[int, int], col: int) -> list[tuple[int, int]]:
    return [a for eid, a in list(o.star_arcs) + list(o.tree_arcs) if ec[eid] == col]


def max_monochromatic_dipath(o: "Outing", ec: Mapping[int, int]) -> DipathResult:
    """Longest directed path inside one color class (longest path in a DAG
    by topological order); reports a cycle when one exists."""
    best = 0
    for col in (1, 2):
        arcs = _colored_arcs(o, ec, col)
        out: list[list[int]] = [[] for _ in range(o.n)]
        indeg = [0] * o.n
        for u, v in arcs:
            out[u].append(v)
            indeg[v] += 1
        dist = [0] * o.n
        queue = deque(v for v in range(o.n) if indeg[v] == 0)
        removed = 0
        while queue:
            x = queue.popleft()
            removed += 1
            for w in out[x]:
                if dist[x] + 1 > dist[w]:
                    dist[w] = dist[x] + 1
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if removed != o.n:
            return DipathResult(None, _directed_cycle(range(o.n), arcs), col)
        best = max(best, max(dist, default=0))
    return DipathResult(best)


def center_path_violations(o: "Outing", c: Sequence[int], ec: Mapping[int, int]) -> list[str]:
    """Monochromatic dipaths between centers through leaves only: equal end
    colors need length <= 2 and a center-graph arc; otherwise length <= 3,
    starting in the path's color and ending in the other."""
    arcs_c = center_arcs(o)
    centers = o.centers
    bad = []
    for col in (1, 2):
        out: dict[int, list[int]] = {}
        for u, v in _colored_arcs(o, ec, col):
            out.setdefault(u, []).append(v)
        for v0 in sorted(centers):
            stack = [(v0, 0)]
            seen = {v0}
            while stack:
                x, k = stack.pop()
                for y in out.get(x, ()):
                    if y in centers:
                        length = k + 1
                        if c[v0] == c[y]:
                            if length > 2 or (v0, y) not in arcs_c:
                                bad.append(f"color-{col} path {v0}~>{y} length {length}, equal ends, no center arc")
                        elif length > 3 or c[v0] != col:
                            bad.append(f"color-{col} path {v0}~>{y} length {length} with end colors {c[v0]},{c[y]}")
                    elif y not in seen:
                        seen.add(y)
                        stack.append((y, k + 1))
    return bad


def report_for_forest_star(g: Graph, res: "ForestStarResult", diameter: int = 18) -> DecompositionReport:
    """Full report for a forest + star forest decomposition run."""
    report = verify_bounded_forest_partition(g, res.decomposition.parts, diameter)
    o, c, ec = res.outing, res.vertex_coloring, res.edge_coloring
    tame, bad = verify_tame(o, c)
    report.tame_ok = tame
    report.violations.extend(bad)
    cyc = res_acyclic(o, c)
    if cyc:
        report.res_acyclic_ok = False
        report.violations.append(f"center graph monochromatic cycle {cyc}")
    dp = max_monochromatic_dipath(o, ec)
    if dp.has_cycle:
        report.ext_acyclic_ok = False
        report.dipath_cycle = dp.cycle
        report.violations.append(f"color-{dp.color} directed cycle {dp.cycle}")
    else:
        report.max_dipath = dp.length
        if report.max_component_diameter > 2 * dp.length:
            report.violations.append(
                f"component diameter {report.max_component_diameter} exceeds twice the dipath bound {dp.length}"
            )
    return report


# -- thinness ----------------------------------------------------------------

@dataclass(frozen=True)
class CutBoundary:
    """A vertex set A with its boundary in G and the part of that boundary
    inside the checked subgraph."""

    vertex_set: frozenset[int]
    boundary: frozenset[int]
    inside: frozenset[int]

    @property
    def ratio(self) -> Fraction:
        return Fraction(len(self.inside), len(self.boundary)) if self.boundary else Fraction(0)


def boundary(g: Graph, vertex_set: Iterable[int], edge_ids: Iterable[int] | None = None) -> frozenset[int]:
    """Edges with exactly one endpoint in the vertex set."""
    a = set(vertex_set)
    ids = g.edge_ids if edge_ids is None else edge_ids
    out = []
    for eid in ids:
        u, v = g.endpoints(eid)
        if (u in a) != (v in a):
            out.append(eid)
    return frozenset(out)


def _as_fraction(eps) -> Fraction:
    return eps if isinstance(eps, Fraction) else Fraction(str(eps))


def verify_thin(g: Graph, sub_edges: Iterable[int], eps) -> CutBoundary | None:
    """Exhaustively look for A with |sigma_H(A)| > eps * |sigma_G(A)|.

    Returns the first violating cut in subset-bitmask order, or None when
    the subgraph is eps-thin.  Limited to ``THIN_EXHAUSTIVE_LIMIT`` vertices.
    """
    eps = _as_fraction(eps)
    n = g.n
    if n > THIN_EXHAUSTIVE_LIMIT:
        raise CapacityError(f"exhaustive thinness check limited to {THIN_EXHAUSTIVE_LIMIT} vertices")
    if n < 2:
        return None
    sub = set(sub_edges)
    g.check_ids(sub)
    # A and its complement share a boundary, so vertex n-1 stays outside A.
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    sigma_g = np.zeros(masks.shape, dtype=np.int32)
    sigma_h = np.zeros(masks.shape, dtype=np.int32)
    for eid, u, v in g.edges:
        crosses = (((masks >> u) ^ (masks >> v)) & 1).astype(np.int32)
        sigma_g += crosses
        if eid in sub:
            sigma_h += crosses
    bad = sigma_h.astype(np.int64) * eps.denominator > sigma_g.astype(np.int64) * eps.numerator
    hits = np.flatnonzero(bad)
    if hits.size == 0:
        return None
    mask = int(masks[hits[0]])
    a = frozenset(v for v in range(n) if mask >> v & 1)
    b = boundary(g, a)
    return CutBoundary(a, b, frozenset(b & sub))


def brute_force_min_cut(g: Graph, limit: int = 24) -> int:
    """Global minimum edge cut by enumerating every vertex bipartition."""
    n = g.n
    if n > limit:
        raise CapacityError(f"brute-force min cut limited to {limit} vertices")
    if n < 2:
        return 0
    edges = [(u, v) for _, u, v in g.edges if u != v]
    best = len(edges)
    chunk = 1 << 18
    for start in range(1, 1 << (n - 1), chunk):
        masks = np.arange(start, min(start + chunk, 1 << (n - 1)), dtype=np.int64)
        sigma = np.zeros(masks.shape, dtype=np.int32)
        for u, v in edges:
            sigma += (((masks >> u) ^ (masks >> v)) & 1).astype(np.int32)
        best = min(best, int(sigma.min()))
    return best


# -- brute-force arboricity ---------------------------------------------------

def brute_force_arboricity(
    g: Graph, known_parts: Sequence[Iterable[int]] | None = None, limit: int = 12
) -> int:
    """Smallest k admitting a k-forest partition, independent of any matroid
    machinery.

    With ``known_parts`` (any candidate partition) the candidate is checked
    edge by edge and its size is the upper bound; exhaustive search must then
    refute every smaller k.  Without it, k climbs from 1 until the search
    succeeds.
    """
    if g.n > limit:
        raise CapacityError(f"brute-force arboricity limited to {limit} vertices")
    if any(u == v for _, u, v in g.edges):
        raise ValueError("graph has loops")
    if not g.edges:
        return 0
    if known_parts is not None:
        known_parts = [list(p) for p in known_parts]
        rep = verify_bounded_forest_partition(g, known_parts, None)
        if not rep.ok:
            raise ValueError(f"supplied partition is invalid: {rep.violations[:3]}")
        k = len([p for p in known_parts if p])
        while k > 1 and _forest_partition_exists(g, k - 1):
            k -= 1
        return k
    k = 1
    while not _forest_partition_exists(g, k):
        k += 1
    return k


def _forest_partition_exists(g: Graph, k: int) -> bool:
    # Forests are canonical vertex partitions and failed states are memoised.
    # Edges follow a min-degree elimination order so dense cores come last; a
    # branch dies when the remaining edges exceed the merges still possible
    # among the vertices they touch.
    n = g.n
    edges = _elimination_order(n, [(u, v) for _, u, v in g.edges])
    m = len(edges)
    if m > k * max(n - 1, 0):
        return False
    touched: list[tuple[int, ...]] = [()] * (m + 1)
    acc: set[int] = set()
    for i in range(m - 1, -1, -1):
        acc.update(edges[i])
        touched[i] = tuple(sorted(acc))

    def canon(labels: tuple[int, ...]) -> tuple[int, ...]:
        seen: dict[int, int] = {}
        return tuple(seen.setdefault(x, len(seen)) for x in labels)

    failed: set = set()

    def rec(idx: int, state: tuple) -> bool:
        if idx == m:
            return True
        verts = touched[idx]
        capacity = sum(len({p[x] for x in verts}) - 1 for p in state)
        if capacity < m - idx:
            return False
        key = (idx, state)
        if key in failed:
            return False
        u, v = edges[idx]
        tried = set()
        for j, part in enumerate(state):
            if part in tried or part[u] == part[v]:
                continue
            tried.add(part)
            a, b = part[u], part[v]
            merged = canon(tuple(a if x == b else x for x in part))
            nxt = tuple(sorted(state[:j] + (merged,) + state[j + 1:]))
            if rec(idx + 1, nxt):
                return True
        failed.add(key)
        return False

    return rec(0, tuple([tuple(range(n))] * k))


def _elimination_order(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    alive = set(range(n))
    remaining = list(edges)
    out = []
    while remaining:
        deg = {v: 0 for v in alive}
        for u, v in remaining:
            deg[u] += 1
            deg[v] += 1
        x = min(alive, key=lambda v: (deg[v], v))
        alive.discard(x)
        out.extend(e for e in remaining if x in e)
        remaining = [e for e in remaining if x not in e]
    return out

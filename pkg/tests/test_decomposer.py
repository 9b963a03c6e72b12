import itertools

import pytest
from hypothesis import given, settings
from strategies import forest_star_instances, outings

from bdforest.decomposer import (
    center_graph,
    color_forest_star,
    decompose_forest_star,
    dipath_stats,
    extend_coloring,
    rebellious_vertices,
    tame_coloring,
)
from bdforest.generators import random_tree_pairs, rng_for
from bdforest.graph_core import DiEdgeSet, Graph, forest_component_diameters
from bdforest.outing import Outing, build_outing
from bdforest.verify import (
    center_arcs,
    center_path_violations,
    extame_violations,
    max_monochromatic_dipath,
    res_acyclic,
    verify_tame,
)

A, B, C, D = range(4)


def o1(graph):
    return build_outing([0, 1, 2], [3], graph)


def scan_center_arcs(o):
    """Definition read literally: every T-arc, every (S-arc, T-arc) pair."""
    found = set()
    for _, (u, v) in o.tree_arcs:
        if u in o.centers and v in o.centers:
            found.add((u, v))
    for (_, (u, w)), (_, (w2, v)) in itertools.product(o.star_arcs, o.tree_arcs):
        if w == w2 and w in o.leaves and v in o.centers and u != v:
            found.add((u, v))
    return found


def rule_interpreter(o, c):
    """Edge coloring straight from the two-case definition."""
    s_into = {v: u for _, (u, v) in o.star_arcs}
    out = {}
    for eid, (_, v) in o.star_arcs:
        out[eid] = c[v]
    for eid, (u, v) in o.tree_arcs:
        u_reb = u in s_into and c[s_into[u]] != c[u]
        out[eid] = c[v] if (v in o.centers and c[u] == c[v] and not u_reb) else 3 - c[v]
    return out


def all_mono_paths(o, ec):
    """Longest monochromatic dipath by enumerating simple paths."""
    arcs = [(u, v, ec[eid]) for eid, (u, v) in list(o.star_arcs) + list(o.tree_arcs)]
    out = {}
    for u, v, col in arcs:
        out.setdefault((u, col), []).append(v)
    best = 0

    def walk(x, col, seen):
        nonlocal best
        best = max(best, len(seen) - 1)
        for y in out.get((x, col), ()):
            if y not in seen:
                walk(y, col, seen | {y})

    for v in range(o.n):
        for col in (1, 2):
            walk(v, col, {v})
    return best


def odd_cycle_outing():
    # Centers 0,1,2 with leaves 3,4,5; T: 3->1->5->0->4->2.
    star = [(0, 3), (1, 4), (2, 5)]
    tree = [(3, 1), (1, 5), (5, 0), (0, 4), (4, 2)]
    return Outing.from_arcs(6, star, tree, root=3)


class TestCenterGraph:
    def test_o1(self, o1_graph):
        o = o1(o1_graph)
        cg = center_graph(o)
        assert sorted(cg.arcs) == [(A, B), (A, D)]
        assert set(cg.arcs) == scan_center_arcs(o) == center_arcs(o)
        assert cg.provenance[B] == 0
        assert cg.provenance[D] == (3, 2)

    def test_center_path(self):
        o = Outing.from_arcs(3, [], [(0, 1), (1, 2)])
        assert center_graph(o).arcs == [(0, 1), (1, 2)]

    def test_leaf_only_tree_arcs(self):
        base = Graph(3, ((0, 0, 1), (1, 0, 2), (2, 0, 1), (3, 1, 2)), multigraph=True)
        s, t = DiEdgeSet(), DiEdgeSet()
        s.add(0, 0, 1)
        s.add(1, 0, 2)
        t.add(2, 0, 1)
        t.add(3, 1, 2)
        o = Outing(base, s, t, 0, frozenset({0}), frozenset({1, 2}))
        assert center_graph(o).arcs == []

    def test_odd_cycle(self):
        o = odd_cycle_outing()
        assert sorted(center_graph(o).arcs) == [(0, 1), (1, 2), (2, 0)]

    @settings(max_examples=100)
    @given(outings())
    def test_matches_literal_scan(self, o):
        cg = center_graph(o)
        assert set(cg.arcs) == scan_center_arcs(o)
        assert all(u != v for u, v in cg.arcs)


class TestTameColoring:
    def test_o1(self, o1_graph):
        o = o1(o1_graph)
        c = tame_coloring(o)
        assert c == [1, 2, 1, 2]
        assert verify_tame(o, c) == (True, [])
        assert not rebellious_vertices(o, c)[C]

    def test_single_center(self):
        o = Outing.from_arcs(1, [], [])
        assert tame_coloring(o) == [1]

    def test_odd_cycle_cut_tail_gets_two(self):
        o = odd_cycle_outing()
        c = tame_coloring(o)
        # Arc 0->1 is cut; its tail 0 gets color 2.
        assert c[:3] == [2, 2, 1]
        assert extame_violations(o, c) == []
        assert res_acyclic(o, c) is None

    def test_even_cycle_is_properly_colored(self):
        star = [(0, 4), (1, 5), (2, 6), (3, 7)]
        tree = [(4, 1), (1, 6), (6, 3), (3, 5), (5, 2), (2, 7), (7, 0)]
        o = Outing.from_arcs(8, star, tree, root=4)
        cg = center_graph(o)
        assert len(cg.arcs) == 4
        c = tame_coloring(o)
        assert all(c[u] != c[v] for u, v in cg.arcs)
        assert c[0] == 1

    def test_root_leaf_takes_center_color(self):
        o = Outing.from_arcs(3, [(1, 0)], [(0, 2), (2, 1)], root=0)
        c = tame_coloring(o)
        assert c[0] == c[1]

    @settings(max_examples=150)
    @given(outings())
    def test_lemma_properties_on_arbitrary_outings(self, o):
        c = tame_coloring(o)
        assert set(c) <= {1, 2}
        assert extame_violations(o, c) == []
        stats = dipath_stats(o, c)
        assert stats.d_tree <= 1 and stats.d_1 == 0 and stats.d_2 <= 1
        assert stats.bound <= 9


class TestExtension:
    def test_o1(self, o1_graph):
        o = o1(o1_graph)
        ec = extend_coloring(o, [1, 2, 1, 2])
        # ids: ab=0, bc=1, cd=2, ac=3
        assert ec == {3: 1, 0: 1, 2: 1, 1: 2}

    def test_center_arc_same_color(self):
        o = Outing.from_arcs(2, [], [(0, 1)])
        assert extend_coloring(o, [1, 1]) == {0: 1}

    def test_star_arc_takes_leaf_color(self):
        o = Outing.from_arcs(3, [(0, 1)], [(0, 2), (2, 1)])
        for c0 in (1, 2):
            assert extend_coloring(o, [c0, 2, 1])[0] == 2

    @settings(max_examples=150)
    @given(outings())
    def test_matches_rule_interpreter_for_any_coloring(self, o):
        rng = rng_for(o.n * 7919 + len(o.star_arcs))
        for _ in range(4):
            c = [int(x) for x in rng.integers(1, 3, size=o.n)]
            assert extend_coloring(o, c) == rule_interpreter(o, c)

    @settings(max_examples=150)
    @given(outings())
    def test_in_degree_and_acyclicity(self, o):
        c = tame_coloring(o)
        ec = extend_coloring(o, c)
        indeg = {}
        for eid, (_, v) in list(o.star_arcs) + list(o.tree_arcs):
            key = (v, ec[eid])
            indeg[key] = indeg.get(key, 0) + 1
        assert max(indeg.values(), default=0) <= 1
        res = max_monochromatic_dipath(o, ec)
        assert not res.has_cycle
        assert res.length == all_mono_paths(o, ec)
        assert res.length <= dipath_stats(o, c).bound <= 9
        assert center_path_violations(o, c, ec) == []


class TestDecompose:
    def test_path_40(self):
        g = Graph.from_pairs(40, [(i, i + 1) for i in range(39)])
        dec, rep = decompose_forest_star(g, g.edge_ids, [])
        assert dec.is_valid_for(g)
        assert rep.ok and rep.max_component_diameter <= 18

    def test_tree_plus_perfect_matching_2000(self):
        rng = rng_for(99)
        n = 2000
        tree = random_tree_pairs(n, rng)
        used = {frozenset(e) for e in tree}
        perm = rng.permutation(n).tolist()
        matching = [(perm[i], perm[i + 1]) for i in range(0, n, 2) if frozenset((perm[i], perm[i + 1])) not in used]
        g = Graph.from_pairs(n, tree + matching)
        dec, rep = decompose_forest_star(g, range(len(tree)), range(len(tree), g.m))
        assert len(dec) == 2 and dec.is_valid_for(g)
        assert rep.ok
        assert rep.max_component_diameter <= 18
        assert rep.max_dipath <= 9

    def test_single_edge(self):
        g = Graph.from_pairs(2, [(0, 1)])
        dec, rep = decompose_forest_star(g, [0], [])
        assert dec.parts == (frozenset({0}), frozenset())
        assert rep.ok

    def test_subset_of_graph_edges(self, o1_graph):
        dec, rep = decompose_forest_star(o1_graph, [0, 1], [3])
        assert frozenset().union(*dec.parts) == {0, 1, 3}
        assert rep.ok

    @given(forest_star_instances(max_n=60))
    def test_random_instances(self, inst):
        res = color_forest_star(inst.graph, inst.forest, inst.stars)
        dec = res.decomposition
        assert dec.is_valid_for(inst.graph)
        stats = res.stats
        assert stats.d_tree <= 1 and stats.d_1 == 0 and stats.d_2 <= 1
        dp = max_monochromatic_dipath(res.outing, res.edge_coloring)
        assert not dp.has_cycle and dp.length <= stats.bound
        for part in dec.parts:
            assert max(forest_component_diameters(inst.graph, part), default=0) <= min(2 * dp.length, 18)

    def test_deterministic(self, o1_graph):
        a = color_forest_star(o1_graph, [0, 1, 2], [3])
        b = color_forest_star(o1_graph, [0, 1, 2], [3])
        assert a.vertex_coloring == b.vertex_coloring and a.edge_coloring == b.edge_coloring

    def test_invalid_input_propagates(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            decompose_forest_star(g, [0, 1, 2], [])

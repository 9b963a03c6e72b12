import itertools
import json

import networkx as nx
import pytest
from hypothesis import given
from strategies import simple_graphs, trees

from bdforest.graph_core import (
    DiEdgeSet,
    ForestDecomposition,
    Graph,
    InputError,
    StructuralError,
    UnionFind,
    connected_components,
    dumps,
    forest_component_diameters,
    graph_diameter,
    graph_from_json,
    is_forest,
    spanning_tree_edges,
    tree_diameter,
)


def star(m):
    return Graph.from_pairs(m + 1, [(0, i) for i in range(1, m + 1)])


def path(k):
    return Graph.from_pairs(k + 1, [(i, i + 1) for i in range(k)])


class TestConstruction:
    def test_rejects_loop_in_simple_mode(self):
        with pytest.raises(InputError, match="loop"):
            Graph.from_pairs(2, [(1, 1)])

    def test_rejects_parallel_in_simple_mode(self):
        with pytest.raises(InputError, match="parallel"):
            Graph.from_pairs(2, [(0, 1), (1, 0)])

    def test_multigraph_allows_both(self):
        g = Graph.from_pairs(2, [(0, 1), (1, 0), (1, 1)], multigraph=True)
        assert g.m == 3 and g.has_loops() and not g.is_simple()

    def test_endpoint_range(self):
        with pytest.raises(InputError):
            Graph.from_pairs(2, [(0, 2)])

    def test_duplicate_ids(self):
        with pytest.raises(InputError, match="duplicate"):
            Graph(3, ((5, 0, 1), (5, 1, 2)))

    def test_subgraph_keeps_ids(self):
        g = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
        h = g.subgraph([0, 2])
        assert h.edge_ids == {0, 2}
        assert h.endpoints(2) == (2, 3)
        assert h.next_edge_id() == 3

    def test_unknown_edge(self):
        with pytest.raises(InputError):
            path(2).endpoints(7)

    def test_loop_adjacency_twice(self):
        g = Graph.from_pairs(1, [(0, 0)], multigraph=True)
        assert g.degree(0) == 2


class TestJson:
    def test_round_trip(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2)])
        assert graph_from_json(json.loads(dumps(g.to_json()))) == g

    def test_multigraph_flag(self):
        g = Graph.from_pairs(2, [(0, 1), (0, 1)], multigraph=True)
        data = g.to_json()
        assert data["multigraph"] is True
        assert graph_from_json(data) == g

    @pytest.mark.parametrize(
        "data, field",
        [
            ({"edges": []}, "'n'"),
            ({"n": "3"}, "'n'"),
            ({"n": 3, "edges": {}}, "'edges'"),
            ({"n": 3, "edges": [[0, 1, 2]]}, r"edges\[0\]"),
            ({"n": 3, "edges": [[0, True]]}, r"edges\[0\]"),
            ({"n": 3, "multigraph": 1}, "'multigraph'"),
        ],
    )
    def test_field_diagnostics(self, data, field):
        with pytest.raises(InputError, match=field):
            graph_from_json(data)

    def test_dumps_is_canonical(self):
        assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}\n'


class TestComponents:
    def test_empty_graph(self):
        assert connected_components(Graph(3, ())) == [0, 1, 2]

    def test_path(self):
        assert connected_components(path(2)) == [0, 0, 0]

    def test_single_edge(self):
        assert connected_components(Graph.from_pairs(4, [(0, 1)])) == [0, 0, 1, 2]

    def test_labels_follow_smallest_vertex(self):
        g = Graph.from_pairs(5, [(4, 1), (3, 0)])
        assert connected_components(g) == [0, 1, 2, 0, 1]

    @given(simple_graphs())
    def test_matches_networkx(self, g):
        labels = connected_components(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from((u, v) for _, u, v in g.edges)
        ours = {frozenset(v for v in range(g.n) if labels[v] == lab) for lab in set(labels)}
        assert ours == {frozenset(c) for c in nx.connected_components(nxg)}


class TestTreeDiameter:
    def test_single_vertex(self):
        assert tree_diameter(Graph(1, ()), [0]) == 0

    def test_star(self):
        assert tree_diameter(star(5), range(6)) == 2

    def test_path(self):
        assert tree_diameter(path(9), range(10)) == 9

    def test_cycle_rejected(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(StructuralError):
            tree_diameter(g, range(3))

    def test_disconnected_rejected(self):
        g = Graph.from_pairs(4, [(0, 1), (2, 3)])
        with pytest.raises(StructuralError):
            tree_diameter(g, range(4))

    @given(trees(max_n=50))
    def test_matches_all_pairs_bfs(self, t):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(t.n))
        nxg.add_edges_from((u, v) for _, u, v in t.edges)
        expected = max(d for row in nx.all_pairs_shortest_path_length(nxg) for d in row[1].values())
        assert tree_diameter(t, range(t.n)) == expected
        assert graph_diameter(t) == expected


class TestIsForest:
    def test_single_edge(self):
        assert is_forest(path(1), [0])

    def test_triangle(self):
        g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        assert not is_forest(g, [0, 1, 2])
        assert is_forest(g, [0, 1])

    def test_parallel_pair(self):
        g = Graph.from_pairs(2, [(0, 1), (0, 1)], multigraph=True)
        assert not is_forest(g, [0, 1])

    def test_unknown_id(self):
        with pytest.raises(InputError):
            is_forest(path(2), [5])

    @given(simple_graphs(max_n=8))
    def test_matches_networkx(self, g):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from((u, v) for _, u, v in g.edges)
        assert is_forest(g, g.edge_ids) == nx.is_forest(nxg)


def test_forest_component_diameters_skip_isolated():
    g = Graph.from_pairs(7, [(0, 1), (1, 2), (4, 5)])
    assert forest_component_diameters(g, [0, 1, 2]) == [2, 1]
    with pytest.raises(StructuralError):
        forest_component_diameters(Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)]), [0, 1, 2])


def test_spanning_tree_edges():
    g = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    t = spanning_tree_edges(g)
    assert len(t) == 3 and is_forest(g, t)
    with pytest.raises(StructuralError):
        spanning_tree_edges(g, [0, 1])


def test_diedgeset_in_degree():
    s = DiEdgeSet()
    s.add(0, 0, 1)
    s.add(1, 2, 1)
    assert s.in_degree(1) == 2 and s.in_degree(0) == 0
    assert sorted(s) == [(0, (0, 1)), (1, (2, 1))]


def test_forest_decomposition_validity():
    g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    assert ForestDecomposition.of([[0, 1], [2]]).is_valid_for(g)
    assert not ForestDecomposition.of([[0, 1, 2]]).is_valid_for(g)
    assert not ForestDecomposition.of([[0, 1], [1, 2]]).is_valid_for(g)
    assert not ForestDecomposition.of([[0]]).is_valid_for(g)


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4) and not uf.union(1, 0)
    assert uf.find(0) == uf.find(1) != uf.find(3)
    assert len({uf.find(v) for v in range(5)}) == 3


@pytest.mark.parametrize("n", [0, 1, 5])
def test_graph_diameter_of_complete(n):
    g = Graph.from_pairs(n, list(itertools.combinations(range(n), 2)))
    assert graph_diameter(g) == (1 if n > 1 else 0)

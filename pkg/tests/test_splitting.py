import pytest

from models import OrderedTriangleList
from services.errors import SplitError
from services.generators import gen_apollonian, gen_nested_chain
from services.oracle import brute_is_four_connected
from services.ordering import order_separating_triangles
from services.splitting import decompose, is_four_connected_component, split_triangle
from services.triangles import separating_triangles
from utils.counters import OperationCounter


def _ordered(graph):
    return order_separating_triangles(graph, separating_triangles(graph))


def _decompose(graph, counter=None):
    ordered = _ordered(graph)
    vertices, edges = graph.vertex_count, graph.edge_count
    return decompose(graph, ordered, counter), ordered, vertices, edges


class TestSplitTriangle:
    def test_canon5_interior_moves_to_copies(self, canon5):
        (t,) = _ordered(canon5)
        component = split_triangle(canon5, t)
        assert sorted(component.origins()) == [0, 1, 2, 3]
        assert sorted(component.outer_face()) == [0, 1, 2]
        assert canon5.vertex_count == 8
        assert canon5.audit() == []

    def test_parent_keeps_triangle_as_face(self, canon5):
        (t,) = _ordered(canon5)
        split_triangle(canon5, t)
        assert canon5.face_vertices(t.reference_edge) == (0, 1, 2)
        assert sorted(canon5.neighbors(0)) == [1, 2, 4]

    def test_missing_reference_edge(self, canon5):
        (t,) = separating_triangles(canon5)
        with pytest.raises(SplitError):
            split_triangle(canon5, t)


class TestDecompose:
    def test_single_triangle_is_one_node(self, triangle):
        tree, _, _, _ = _decompose(triangle)
        assert (tree.node_count, tree.edge_count, tree.root) == (1, 0, 0)
        assert tree.transfers == 0

    def test_k4_is_one_node(self, k4):
        tree, _, _, _ = _decompose(k4)
        assert tree.node_count == 1
        assert sorted(tree.component(0).origins()) == [0, 1, 2, 3]

    def test_canon5_two_nodes(self, canon5):
        tree, _, _, _ = _decompose(canon5)
        assert tree.node_count == 2
        assert tree.root == 1
        assert sorted(tree.component(0).origins()) == [0, 1, 2, 3]
        assert sorted(tree.component(1).origins()) == [0, 1, 2, 4]
        (link,) = tree.links
        assert (link.parent, link.child) == (1, 0)
        assert sorted(link.face) == [0, 1, 2]
        assert tree.transfers == 3

    def test_canon7_chain(self, canon7):
        tree, _, _, _ = _decompose(canon7)
        assert [sorted(c.origins()) for c in tree.components] == [[0, 1, 4, 5], [0, 1, 3, 4], [0, 1, 2, 3]]
        assert tree.parent_chain(0) == [0, 1, 2]
        assert tree.depth() == 3
        assert tree.leaves() == [0]
        assert [sorted(link.face) for link in tree.links] == [[0, 1, 4], [0, 1, 3]]

    def test_vertex_count_identity(self, canon7):
        tree, ordered, n, _ = _decompose(canon7)
        assert sum(len(c.vertices) for c in tree.components) == n + 3 * len(ordered)

    def test_inner_faces_add_up(self):
        graph = gen_apollonian(40, seed=7)
        tree, ordered, n, _ = _decompose(graph)
        assert sum(c.inner_face_count() for c in tree.components) == 2 * n - 5 + len(ordered)

    def test_components_are_four_connected(self):
        graph = gen_apollonian(30, seed=2)
        tree, _, _, _ = _decompose(graph)
        assert all(is_four_connected_component(c) for c in tree.components)

    def test_transfers_are_bounded(self):
        graph = gen_apollonian(60, seed=9)
        counter = OperationCounter()
        tree, _, _, m = _decompose(graph, counter)
        assert tree.transfers == counter["transfers"] <= 2 * m
        assert graph.audit() == []

    def test_nested_chain_is_a_path(self):
        graph = gen_nested_chain(5)
        tree, _, _, _ = _decompose(graph)
        assert tree.node_count == 6
        assert tree.depth() == 6
        assert len(tree.leaves()) == 1

    def test_octahedron_between_two_triangles(self, octa_nested):
        tree, ordered, n, m = _decompose(octa_nested)
        assert [t.corners for t in ordered] == [(3, 4, 5), (0, 1, 2)]
        assert [sorted(c.origins()) for c in tree.components] == [[3, 4, 5, 7], [0, 1, 2, 3, 4, 5], [0, 1, 2, 6]]
        assert tree.root == 2
        assert tree.parent_chain(0) == [0, 1, 2]
        middle = tree.component(1)
        assert is_four_connected_component(middle)
        assert brute_is_four_connected(middle.subgraph())
        assert tree.transfers <= 2 * m

    def test_deep_nested_chain_stays_linear(self):
        k = 2**14
        graph = gen_nested_chain(k)
        tree, _, _, m = _decompose(graph)
        assert tree.node_count == k + 1
        assert tree.transfers <= 2 * m

    def test_outermost_first_order_is_rejected(self, canon7):
        ordered = _ordered(canon7)
        backwards = OrderedTriangleList(list(reversed(ordered.triangles)), ordered.edge_order)
        with pytest.raises(SplitError):
            decompose(canon7, backwards)

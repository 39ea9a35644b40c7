import pytest

from conftest import A, B, C, D, E, F
from models import EdgeKind, TriangleRecord
from services.errors import OrderingError
from services.oracle import brute_outermost_return_edges
from services.ordering import dfs1, dfs2, order_separating_triangles, sort_edges, sort_triangles
from services.triangles import separating_triangles
from utils.counters import OperationCounter

# (tail, head): (kind, lowpt, angle) after the first pass from root b
CANON5_EDGES = {
    (B, E): (EdgeKind.TREE, 0, 3),
    (E, A): (EdgeKind.TREE, 0, 3),
    (A, B): (EdgeKind.RIGHT_BACK, 0, 3),
    (A, D): (EdgeKind.TREE, 0, 2),
    (D, B): (EdgeKind.RIGHT_BACK, 0, 2),
    (D, C): (EdgeKind.TREE, 0, 1),
    (C, B): (EdgeKind.RIGHT_BACK, 0, 1),
    (C, E): (EdgeKind.RIGHT_BACK, 1, 1),
    (C, A): (EdgeKind.RIGHT_BACK, 2, 1),
}

CANON5_TIMES = [(B, E), (E, A), (A, D), (D, C), (C, A), (C, E), (C, B), (D, B), (A, B)]

CANON7_EDGES = {
    (B, C): (0, 4),
    (C, A): (0, 4),
    (A, B): (0, 4),
    (A, F): (0, 3),
    (F, B): (0, 3),
    (F, E): (0, 2),
    (E, B): (0, 2),
    (E, D): (0, 1),
    (D, B): (0, 1),
    (D, C): (1, 1),
    (D, A): (2, 2),
    (E, A): (2, 1),
}

CANON7_TIMES = [(B, C), (C, A), (A, F), (F, E), (E, A), (E, D), (D, A), (D, C), (D, B), (E, B), (F, B), (A, B)]


class TestDfs1:
    def test_canon5_depths(self, canon5):
        state = dfs1(canon5)
        assert state.root == B
        assert [state.depth[v] for v in (B, E, A, D, C)] == [0, 1, 2, 3, 4]
        assert state.active_child[D] == C

    def test_canon5_edge_table(self, canon5):
        state = dfs1(canon5)
        for (u, v), (kind, lowpt, angle) in CANON5_EDGES.items():
            view = state.edge_state(canon5.half_edge(u, v))
            assert (view.tail, view.head) == (u, v)
            assert (view.kind, view.lowpt, view.angle) == (kind, lowpt, angle), (u, v)

    def test_canon7_edge_table(self, canon7):
        state = dfs1(canon7)
        for (u, v), (lowpt, angle) in CANON7_EDGES.items():
            view = state.edge_state(canon7.half_edge(u, v))
            assert (view.tail, view.lowpt, view.angle) == (u, lowpt, angle), (u, v)

    def test_tree_edges_inherit_from_outermost_return_edge(self, canon7):
        state = dfs1(canon7)
        for h in state.oriented_half_edges():
            ore = state.outermost_return_edge[h]
            assert EdgeKind(state.kind[ore]).is_back
            assert (state.lowpt[h], state.angle[h]) == (state.lowpt[ore], state.angle[ore])

    def test_back_edge_bounds(self, canon7):
        state = dfs1(canon7)
        for h in state.oriented_half_edges():
            if EdgeKind(state.kind[h]).is_back:
                w = canon7.head(h)
                assert state.lowpt[h] == state.depth[w] < state.depth[canon7.tail(h)]
                assert 0 < state.angle[h] < canon7.degree(w)

    def test_single_triangle(self, triangle):
        state = dfs1(triangle)
        kinds = [EdgeKind(state.kind[h]) for h in state.oriented_half_edges()]
        assert kinds.count(EdgeKind.TREE) == 2
        back = [h for h in state.oriented_half_edges() if EdgeKind(state.kind[h]).is_back]
        assert [state.lowpt[h] for h in back] == [0]

    def test_root_must_be_outer_tail(self, canon5):
        with pytest.raises(OrderingError):
            dfs1(canon5, root=A)

    def test_vertex_state_view(self, canon5):
        view = dfs1(canon5).vertex_state(A)
        assert view.depth == 2
        assert canon5.head(view.parent_edge) == A

    @pytest.mark.parametrize("name", ["canon5", "canon7", "octa_nested"])
    def test_outermost_return_edges_match_cycle_walk(self, name, request):
        graph = request.getfixturevalue(name)
        state = dfs1(graph)
        best = brute_outermost_return_edges(state)
        tree_edges = [h for h in state.oriented_half_edges() if state.kind[h] == EdgeKind.TREE]
        assert sorted(best) == sorted(tree_edges)
        for h in tree_edges:
            assert state.outermost_return_edge[h] in best[h]


class TestSortEdges:
    def test_canon5_lists(self, canon5):
        edge_order = sort_edges(dfs1(canon5))
        heads = {v: [canon5.head(h) for h in edge_order[v]] for v in range(5)}
        assert heads == {A: [D, B], B: [E], C: [A, E, B], D: [C, B], E: [A]}

    def test_keys_are_sorted(self, canon7):
        state = dfs1(canon7)
        for hs in sort_edges(state):
            keys = [(-state.lowpt[h], state.angle[h]) for h in hs]
            assert keys == sorted(keys)

    @pytest.mark.parametrize("name", ["canon5", "canon7", "octa_nested"])
    def test_matches_comparison_sort(self, name, request):
        graph = request.getfixturevalue(name)
        state = dfs1(graph)
        outgoing = [[] for _ in range(graph.vertex_count)]
        for h in state.oriented_half_edges():
            outgoing[graph.tail(h)].append(h)
        expected = [sorted(hs, key=lambda h: (-state.lowpt[h], state.angle[h])) for hs in outgoing]
        assert sort_edges(state) == expected


class TestDfs2:
    def test_canon5_times(self, canon5):
        state = dfs1(canon5)
        times = dfs2(state, sort_edges(state))
        for t, (u, v) in enumerate(CANON5_TIMES):
            assert times[canon5.half_edge(u, v)] == t

    def test_canon7_times(self, canon7):
        state = dfs1(canon7)
        times = dfs2(state, sort_edges(state))
        for t, (u, v) in enumerate(CANON7_TIMES):
            assert times[canon7.half_edge(u, v)] == t

    def test_times_are_a_permutation(self, canon7):
        state = dfs1(canon7)
        dfs2(state, sort_edges(state))
        times = sorted(state.edge_time[h] for h in state.oriented_half_edges())
        assert times == list(range(canon7.edge_count))

    def test_same_partition_as_first_pass(self, canon7):
        state = dfs1(canon7)
        dfs2(state, sort_edges(state))
        for h in state.oriented_half_edges():
            assert state.discovered_by_second_pass[h] == (state.kind[h] == EdgeKind.TREE)

    def test_inconsistent_kinds_are_rejected(self, canon5):
        state = dfs1(canon5)
        edge_order = sort_edges(state)
        state.kind[canon5.half_edge(A, B)] = EdgeKind.TREE
        with pytest.raises(OrderingError):
            dfs2(state, edge_order)


class TestSortTriangles:
    def test_canon5_reference_edge(self, canon5):
        ordered = order_separating_triangles(canon5, separating_triangles(canon5))
        (t,) = ordered
        assert t.corners == (A, B, C)
        assert t.last_edge == canon5.half_edge(A, B)
        assert t.reference_edge == canon5.half_edge(A, B)
        assert (t.time, t.internal_angle) == (8, 2)

    def test_canon7_innermost_first(self, canon7):
        ordered = order_separating_triangles(canon7, separating_triangles(canon7))
        assert [t.corners for t in ordered] == [(A, B, E), (A, B, D)]
        assert [t.internal_angle for t in ordered] == [2, 3]
        assert [t.time for t in ordered] == [11, 11]
        assert {t.reference_edge for t in ordered} == {canon7.half_edge(A, B)}

    def test_empty_input(self, k4):
        assert len(order_separating_triangles(k4, [])) == 0

    def test_needs_second_pass(self, canon5):
        with pytest.raises(OrderingError):
            sort_triangles(dfs1(canon5), [TriangleRecord(corners=(A, B, C))])

    def test_counters_are_linear(self, canon7):
        counter = OperationCounter()
        order_separating_triangles(canon7, separating_triangles(canon7), counter)
        n, m = canon7.vertex_count, canon7.edge_count
        assert counter.total <= 20 * (n + m)

    def test_positions(self, canon7):
        ordered = order_separating_triangles(canon7, separating_triangles(canon7))
        assert ordered.positions() == {(A, B, E): 0, (A, B, D): 1}

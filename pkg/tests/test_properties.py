from hypothesis import given
from hypothesis import strategies as st

from models import EdgeKind
from services.generators import gen_apollonian, gen_flipped, gen_nested_chain
from services.oracle import (
    brute_4block_tree,
    brute_outermost_return_edges,
    brute_separating_triangles,
    containment_relation,
    interior_faces,
    region_left_of,
    tree_diff,
    trees_isomorphic,
)
from services.ordering import dfs1, order_separating_triangles, sort_edges
from services.splitting import decompose, is_four_connected_component
from services.triangles import separating_triangles

apollonian = st.builds(gen_apollonian, n=st.integers(min_value=5, max_value=60), seed=st.integers(0, 2**32))
chains = st.builds(gen_nested_chain, k=st.integers(min_value=1, max_value=12))
flipped = st.builds(gen_flipped, n=st.integers(min_value=6, max_value=40), seed=st.integers(0, 2**32))
graphs = st.one_of(apollonian, chains, flipped)


@given(graphs)
def test_separating_triangles_match_oracle(graph):
    assert {t.corners for t in separating_triangles(graph)} == brute_separating_triangles(graph)


@given(graphs)
def test_order_respects_containment(graph):
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    position = ordered.positions()
    for inner, outer in containment_relation(graph, set(position)).pairs():
        assert position[inner] < position[outer]


@given(graphs)
def test_reference_edge_has_interior_to_its_left(graph):
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    relation = containment_relation(graph, set(ordered.positions()))
    for t in ordered:
        assert region_left_of(graph, t.reference_edge, t.corners) == relation.interiors[t.corners]


@given(graphs)
def test_triangles_sharing_a_last_edge_are_grouped_by_angle(graph):
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    seen = set()
    previous = None
    for t in ordered:
        if t.last_edge != previous:
            assert t.last_edge not in seen
            seen.add(t.last_edge)
        else:
            assert t.internal_angle > last_angle
        previous, last_angle = t.last_edge, t.internal_angle


@given(graphs)
def test_last_edge_is_latest_and_not_a_tree_edge(graph):
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    state = ordered.state
    for t in ordered:
        a, b, c = t.corners
        times = [state.edge_state(graph.half_edge(u, v)).edge_time for u, v in ((a, b), (b, c), (a, c))]
        assert t.time == max(times)
        assert EdgeKind(state.kind[t.last_edge]).is_back


@given(graphs)
def test_interior_edges_are_timestamped_before_the_triangle(graph):
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    state = ordered.state
    for t in ordered:
        corners = set(t.corners)
        for face in interior_faces(graph, t.corners):
            for u, v in ((face[0], face[1]), (face[1], face[2]), (face[0], face[2])):
                if {u, v} <= corners:
                    continue
                assert state.edge_state(graph.half_edge(u, v)).edge_time < t.time


@given(graphs)
def test_outermost_return_edges_match_cycle_walk(graph):
    state = dfs1(graph)
    best = brute_outermost_return_edges(state)
    for h in state.oriented_half_edges():
        if state.kind[h] == EdgeKind.TREE:
            assert state.outermost_return_edge[h] in best[h]


@given(graphs)
def test_edge_sort_matches_comparison_sort(graph):
    state = dfs1(graph)
    outgoing = [[] for _ in range(graph.vertex_count)]
    for h in state.oriented_half_edges():
        outgoing[graph.tail(h)].append(h)
    assert sort_edges(state) == [sorted(hs, key=lambda h: (-state.lowpt[h], state.angle[h])) for hs in outgoing]


@given(graphs)
def test_first_pass_is_deterministic(graph):
    first, second = dfs1(graph), dfs1(graph)
    assert (first.kind, first.lowpt, first.angle) == (second.kind, second.lowpt, second.angle)


@given(graphs)
def test_decomposition_matches_oracle(graph):
    oracle = brute_4block_tree(graph)
    ordered = order_separating_triangles(graph, separating_triangles(graph))
    m = graph.edge_count
    tree = decompose(graph, ordered)
    assert tree.node_count == len(ordered) + 1
    assert tree.transfers <= 2 * m
    assert graph.audit() == []
    assert all(is_four_connected_component(c) for c in tree.components)
    assert trees_isomorphic(tree, oracle)
    assert tree_diff(tree, oracle) == []


@given(graphs)
def test_angle_sums(graph):
    for v in range(graph.vertex_count):
        nbrs = graph.neighbors(v)
        for u, w in zip(nbrs, nbrs[1:] + nbrs[:1]):
            assert graph.angle_size(v, u, w) + graph.angle_size(v, w, u) == graph.degree(v)

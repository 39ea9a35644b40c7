"""
Innermost-to-outermost ordering of separating triangles

Two annotated depth-first searches with counting sorts in between:
dfs1 orients and classifies the edges and computes lowpoints and angles,
sort_edges orders the outgoing edges of each vertex by (-lowpt, angle),
dfs2 timestamps the edges in that order, and sort_triangles turns the
timestamps into the final order and the reference edges.
"""

import logging
from typing import List, Optional, Sequence

from models import DfsState, EdgeKind, OrderedTriangleList, TriangleRecord
from services.embedding import RotationGraph
from services.errors import OrderingError
from utils.counters import OperationCounter, bump
from utils.counting_sort import counting_sort

logger = logging.getLogger(__name__)

UNSET = -1


def _better_return_edge(lowpt: List[int], angle: List[int], candidate: int, current: int) -> bool:
    """True when ``candidate`` beats ``current`` on (-lowpt, angle)"""
    if current == UNSET:
        return True
    if lowpt[candidate] != lowpt[current]:
        return lowpt[candidate] < lowpt[current]
    return angle[candidate] > angle[current]


def dfs1(graph: RotationGraph, root: Optional[int] = None, counter: Optional[OperationCounter] = None) -> DfsState:
    """
    First DFS: orient edges, split them into tree and back edges, and compute
    depth, lowpoint, angle and outermost return edge.

    Neighbors of the root are scanned starting after the outer half-edge; any
    other vertex starts after the twin of its parent edge. The root's virtual
    parent edge sits inside its outer-face corner.

    Raises:
        OrderingError: a vertex is unreachable from the root.
    """
    if root is None:
        root = graph.root
    elif root != graph.root:
        raise OrderingError(f"DFS root must be the tail of the outer half-edge ({graph.root}), got {root}")

    n = graph.vertex_count
    half = graph.half_edge_count
    tails, nxt, degrees = graph.tails, graph.next_table, graph.degrees
    index = graph.index_table()
    virtual = half
    outer = graph.outer_half_edge
    virtual_position = 2 * index[outer] + 1

    depth = [UNSET] * n
    parent_edge = [UNSET] * n
    active_child = [UNSET] * n
    kind = [int(EdgeKind.UNSET)] * (half + 1)
    lowpt = [UNSET] * (half + 1)
    angle = [UNSET] * (half + 1)
    ore = [UNSET] * (half + 1)

    depth[root] = 0
    parent_edge[root] = virtual

    # explicit stack: vertex, next half-edge to scan, entries left
    stack_v = [root]
    stack_h = [nxt[outer]]
    stack_left = [degrees[root]]
    steps = 0

    while stack_v:
        v = stack_v[-1]
        remaining = stack_left[-1]
        if remaining == 0:
            stack_v.pop()
            stack_h.pop()
            stack_left.pop()
            pe = parent_edge[v]
            o = ore[pe]
            if o != UNSET:
                lowpt[pe] = lowpt[o]
                angle[pe] = angle[o]
            if stack_v and o != UNSET:
                u_edge = parent_edge[stack_v[-1]]
                if _better_return_edge(lowpt, angle, o, ore[u_edge]):
                    ore[u_edge] = o
            continue

        h = stack_h[-1]
        stack_h[-1] = nxt[h]
        stack_left[-1] = remaining - 1
        steps += 1

        if kind[h] != EdgeKind.UNSET or kind[h ^ 1] != EdgeKind.UNSET:
            continue
        w = tails[h ^ 1]

        if depth[w] == UNSET:
            kind[h] = EdgeKind.TREE
            depth[w] = depth[v] + 1
            parent_edge[w] = h
            active_child[v] = w
            stack_v.append(w)
            stack_h.append(nxt[h ^ 1])
            stack_left.append(degrees[w] - 1)
            continue

        # back edge v -> w, w an ancestor of v
        deg_w = degrees[w]
        idx_v = index[h ^ 1]
        idx_c = index[parent_edge[active_child[w]]]
        if w == root:
            p = virtual_position
        else:
            p = 2 * index[parent_edge[w] ^ 1]
        span = 2 * deg_w
        if (2 * idx_v - p) % span < (2 * idx_c - p) % span:
            kind[h] = EdgeKind.LEFT_BACK
            angle[h] = (idx_c - idx_v) % deg_w
        else:
            kind[h] = EdgeKind.RIGHT_BACK
            angle[h] = (idx_v - idx_c) % deg_w
        lowpt[h] = depth[w]
        ore[h] = h

        pe = parent_edge[v]
        if _better_return_edge(lowpt, angle, h, ore[pe]):
            ore[pe] = h

    bump(counter, "dfs1", steps)

    unreached = sum(1 for d in depth if d == UNSET)
    if unreached:
        raise OrderingError(f"{unreached} vertices are unreachable from the root {root}")

    logger.debug(f"dfs1 finished from root {root}: {steps} incidence steps")
    return DfsState(
        graph=graph,
        root=root,
        virtual_edge=virtual,
        depth=depth,
        parent_edge=parent_edge,
        active_child=active_child,
        kind=kind,
        lowpt=lowpt,
        angle=angle,
        outermost_return_edge=ore,
    )


def sort_edges(state: DfsState, counter: Optional[OperationCounter] = None) -> List[List[int]]:
    """
    Per-vertex outgoing oriented edges sorted by (-lowpt, angle).

    Two stable counting sorts over all oriented edges (angle, then n - lowpt),
    then a stable partition by tail. Ties keep edge-id order.
    """
    graph = state.graph
    n = graph.vertex_count
    tails = graph.tails
    max_degree = max(graph.degrees) if n else 0

    edges = state.oriented_half_edges()
    by_angle = counting_sort(edges, lambda h: state.angle[h], max_degree + 1, counter, "sort_edges")
    by_lowpt = counting_sort(by_angle, lambda h: n - state.lowpt[h], n + 1, counter, "sort_edges")
    by_tail = counting_sort(by_lowpt, lambda h: tails[h], max(n, 1), counter, "sort_edges")

    edge_order: List[List[int]] = [[] for _ in range(n)]
    for h in by_tail:
        edge_order[tails[h]].append(h)
    return edge_order


def dfs2(state: DfsState, edge_order: Sequence[Sequence[int]], counter: Optional[OperationCounter] = None) -> List[int]:
    """
    Second DFS following ``edge_order``; fills ``state.edge_time`` and
    ``state.discovered_by_second_pass``.

    An edge is a tree edge iff the head is one level deeper than the tail.

    Raises:
        OrderingError: the second pass disagrees with the first on the
            tree/back partition.
    """
    graph = state.graph
    n = graph.vertex_count
    tails = graph.tails
    depth = state.depth
    kind = state.kind

    edge_time = [UNSET] * (graph.half_edge_count + 1)
    discovered = [False] * (graph.half_edge_count + 1)
    visited = [False] * n
    now = 0

    visited[state.root] = True
    stack_v = [state.root]
    stack_i = [0]

    while stack_v:
        v = stack_v[-1]
        i = stack_i[-1]
        out = edge_order[v]
        if i == len(out):
            stack_v.pop()
            stack_i.pop()
            continue
        stack_i[-1] = i + 1

        h = out[i]
        edge_time[h] = now
        now += 1
        w = tails[h ^ 1]
        is_tree = depth[w] == depth[v] + 1
        if is_tree != (kind[h] == EdgeKind.TREE):
            raise OrderingError(f"edge {v}->{w} changes tree/back kind between the two passes")
        if is_tree:
            if visited[w]:
                raise OrderingError(f"tree edge {v}->{w} reaches the already visited vertex {w}")
            visited[w] = True
            discovered[h] = True
            stack_v.append(w)
            stack_i.append(0)

    if now != graph.edge_count:
        raise OrderingError(f"second pass traversed {now} of {graph.edge_count} edges")
    if not all(visited):
        raise OrderingError("second pass did not reach every vertex")

    bump(counter, "dfs2", now)
    state.edge_time = edge_time
    state.discovered_by_second_pass = discovered
    return edge_time


def sort_triangles(
    state: DfsState,
    triangles: Sequence[TriangleRecord],
    counter: Optional[OperationCounter] = None,
) -> List[TriangleRecord]:
    """
    Fill time, internal angle and reference edge of every triangle, then order
    them by time with internal angle as tie-breaker (two stable counting sorts).

    Raises:
        OrderingError: the last traversed edge of a triangle is not a back edge.
    """
    graph = state.graph
    index = graph.index_table()
    degrees = graph.degrees
    edge_time = state.edge_time
    kind = state.kind
    if not edge_time:
        raise OrderingError("sort_triangles needs the edge times of the second pass")

    def oriented(x: int, y: int) -> int:
        h = graph.half_edge(x, y)
        return h if kind[h] != EdgeKind.UNSET else h ^ 1

    for t in triangles:
        a, b, c = t.corners
        last = max((oriented(a, b), oriented(b, c), oriented(c, a)), key=lambda h: edge_time[h])
        if not EdgeKind(kind[last]).is_back:
            raise OrderingError(f"last traversed edge of triangle {t.corners} is a tree edge")
        v, w = graph.tail(last), graph.head(last)
        u = t.third_corner(v, w)
        at_w_v = index[last ^ 1]
        at_w_u = index[graph.half_edge(w, u)]
        if kind[last] == EdgeKind.LEFT_BACK:
            t.reference_edge = last ^ 1
            t.internal_angle = (at_w_u - at_w_v) % degrees[w]
        else:
            t.reference_edge = last
            t.internal_angle = (at_w_v - at_w_u) % degrees[w]
        t.last_edge = last
        t.time = edge_time[last]

    max_degree = max(degrees) if degrees else 0
    by_angle = counting_sort(list(triangles), lambda t: t.internal_angle, max_degree + 1, counter, "sort_triangles")
    return counting_sort(by_angle, lambda t: t.time, max(graph.edge_count, 1), counter, "sort_triangles")


def order_separating_triangles(
    graph: RotationGraph,
    triangles: Sequence[TriangleRecord],
    counter: Optional[OperationCounter] = None,
) -> OrderedTriangleList:
    """Run dfs1, sort_edges, dfs2 and sort_triangles on the intact triangulation"""
    state = dfs1(graph, counter=counter)
    edge_order = sort_edges(state, counter)
    dfs2(state, edge_order, counter)
    ordered = sort_triangles(state, triangles, counter)
    logger.info(f"Ordered {len(ordered)} separating triangles innermost-first")
    return OrderedTriangleList(triangles=ordered, edge_order=edge_order, state=state)

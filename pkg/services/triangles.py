"""
Triangle enumeration and separating-triangle filtering
"""

import logging
from typing import List, Optional, Sequence, Tuple

from models import TriangleRecord, Triple
from services.embedding import RotationGraph
from services.errors import EmbeddingError
from utils.counters import OperationCounter, bump
from utils.counting_sort import counting_sort

logger = logging.getLogger(__name__)


def _sorted_triple(a: int, b: int, c: int) -> Triple:
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    return (a, b, c)


def list_all_triangles(graph: RotationGraph, counter: Optional[OperationCounter] = None) -> List[Triple]:
    """
    List every 3-clique once, as a sorted vertex triple.

    Degree-ordered neighbor marking: vertices are processed by non-increasing
    degree; processed vertices are deleted through a flag, so the graph itself
    is never modified.
    """
    n = graph.vertex_count
    tails, nxt, degrees = graph.tails, graph.next_table, graph.degrees

    order = counting_sort(
        list(range(n)),
        key=lambda v: n - 1 - min(degrees[v], n - 1),
        key_range=max(n, 1),
        counter=counter,
        counter_key="triangles",
    )

    marked = [False] * n
    deleted = [False] * n
    out: List[Triple] = []

    def incident(v: int):
        start = graph.first(v)
        if start < 0:
            return
        h = start
        while True:
            yield h
            h = nxt[h]
            if h == start:
                break

    for v in order:
        steps = 0
        for h in incident(v):
            w = tails[h ^ 1]
            if not deleted[w]:
                marked[w] = True
            steps += 1
        for h in incident(v):
            u = tails[h ^ 1]
            steps += 1
            if not marked[u]:
                continue
            for k in incident(u):
                w = tails[k ^ 1]
                steps += 1
                if marked[w]:
                    out.append(_sorted_triple(v, u, w))
            marked[u] = False
        deleted[v] = True
        bump(counter, "triangles", steps)

    logger.debug(f"Listed {len(out)} triangles on n={n}")
    return out


def is_facial(graph: RotationGraph, triangle: Sequence[int]) -> bool:
    """True iff at some corner the edges to the other two corners are CCW-adjacent"""
    a, b, c = triangle
    if len({a, b, c}) != 3:
        raise EmbeddingError(f"{tuple(triangle)} does not have three distinct corners")
    for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
        h_v = graph.half_edge(u, v)
        h_w = graph.half_edge(u, w)
        if graph.ccw_next(h_v) == h_w or graph.ccw_prev(h_v) == h_w:
            return True
    # all three half-edge lookups succeeded, so it is a triangle
    return False


def separating_triangles(
    graph: RotationGraph, counter: Optional[OperationCounter] = None
) -> List[TriangleRecord]:
    records = [TriangleRecord(corners=t) for t in list_all_triangles(graph, counter) if not is_facial(graph, t)]
    logger.info(f"Found {len(records)} separating triangles (n={graph.vertex_count}, m={graph.edge_count})")
    return records


def triangle_count_identity(graph: RotationGraph) -> Tuple[int, int, int]:
    """(all triangles, faces, separating triangles); on n >= 4 the first equals the sum of the others"""
    triangles = list_all_triangles(graph)
    separating = sum(1 for t in triangles if not is_facial(graph, t))
    return len(triangles), len(graph.faces()), separating

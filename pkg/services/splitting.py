"""
Splitting along separating triangles and 4-block tree assembly
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from models import ChildLink, Component, FourBlockTree, OrderedTriangleList, TriangleRecord, Triple
from services.embedding import RotationGraph, validate_triangulation
from services.errors import SplitError
from services.triangles import separating_triangles
from utils.counters import OperationCounter, bump

logger = logging.getLogger(__name__)


class _Decomposition:
    """Mutable state of one decomposition run over a single graph"""

    def __init__(self, graph: RotationGraph, counter: Optional[OperationCounter]) -> None:
        self.graph = graph
        self.counter = counter
        self.components: List[Component] = []
        self.links: List[ChildLink] = []
        # reference half-edge (face to its left) -> child component id
        self.pending: Dict[int, int] = {}
        self.transfers = 0

    def _walk_to(self, start: int, target: int) -> int:
        """First half-edge CCW after ``start`` whose head is ``target``"""
        g = self.graph
        h = g.ccw_next(start)
        while g.head(h) != target:
            if h == start:
                raise SplitError(
                    f"walk around vertex {g.tail(start)} did not reach an edge to {target}; "
                    "triangles are not in innermost-first order"
                )
            h = g.ccw_next(h)
        return h

    def _transfer(self, v: int, from_h: int, to_h: int, target: int) -> None:
        moved = self.graph.transfer_arc(v, from_h, to_h, target)
        self.transfers += moved
        bump(self.counter, "transfers", moved)

    def _collect(self, start: int) -> Tuple[List[int], List[int]]:
        """Vertices reachable from ``start`` and all of their half-edges"""
        g = self.graph
        seen = {start}
        vertices = [start]
        half_edges: List[int] = []
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for h in g.rotation(x):
                half_edges.append(h)
                w = g.head(h)
                if w not in seen:
                    seen.add(w)
                    vertices.append(w)
                    queue.append(w)
        bump(self.counter, "materialize", len(half_edges))
        return vertices, half_edges

    def _face_triple(self, h: int) -> Triple:
        g = self.graph
        return tuple(g.origin(g.tail(x)) for x in g.face_walk(h))

    def _resolve(self, key: int, parent: int, anchor: int) -> None:
        child = self.pending.pop(key)
        face = self._face_triple(anchor)
        component = self.components[child]
        component.parent = parent
        component.parent_face = face
        component.parent_half_edge = anchor
        self.links.append(ChildLink(parent=parent, child=child, face=face, parent_half_edge=anchor))
        logger.debug(f"Component {child} attached to {parent} at face {face}")

    def _absorb(self, component_id: int, half_edges: List[int]) -> None:
        if not self.pending:
            return
        for h in half_edges:
            if h in self.pending:
                self._resolve(h, component_id, h)

    def split(self, triangle: TriangleRecord) -> Component:
        g = self.graph
        h12 = triangle.reference_edge
        if h12 < 0:
            raise SplitError(f"triangle {triangle.corners} has no reference edge")
        v1, v2 = g.tail(h12), g.head(h12)
        if v1 not in triangle.corners or v2 not in triangle.corners or v1 == v2:
            raise SplitError(f"reference edge of triangle {triangle.corners} is no longer live")
        v3 = triangle.third_corner(v1, v2)

        # interior lies CCW after h12 at v1, after h31^1 at v3, after h23^1 at v2
        h13 = self._walk_to(h12, v3)
        c1 = g.add_vertex(origin=g.origin(v1))
        self._transfer(v1, h12, h13, c1)

        h32 = self._walk_to(h13 ^ 1, v2)
        c3 = g.add_vertex(origin=g.origin(v3))
        self._transfer(v3, h13 ^ 1, h32, c3)

        h21 = self._walk_to(h32 ^ 1, v1)
        if h21 != h12 ^ 1:
            raise SplitError(f"walk around {v2} ended at {h21}, expected the twin of reference edge {h12}")
        c2 = g.add_vertex(origin=g.origin(v2))
        self._transfer(v2, h32 ^ 1, h21, c2)

        # copy lists become <other copy, interval, other copy> in the original CCW sense
        e13 = g.add_edge(c1, c3)
        e12 = g.add_edge(c1, c2)
        e23 = g.add_edge(c2, c3, after_v=g.ccw_prev(e13 ^ 1))

        component_id = len(self.components)
        vertices, half_edges = self._collect(c1)
        component = Component(
            id=component_id,
            graph=g,
            vertices=vertices,
            outer_half_edge=e12 ^ 1,
            triangle=triangle,
        )
        self.components.append(component)

        self._absorb(component_id, half_edges)
        for original, copy in ((h12, e12), (h32 ^ 1, e23), (h13 ^ 1, e13 ^ 1)):
            if original in self.pending:
                self._resolve(original, component_id, copy)

        self.pending[h12] = component_id
        logger.debug(f"Split triangle {triangle.corners} into component {component_id} ({len(vertices)} vertices)")
        return component

    def finish(self) -> FourBlockTree:
        g = self.graph
        root_id = len(self.components)
        vertices, half_edges = self._collect(g.root)
        self.components.append(Component(id=root_id, graph=g, vertices=vertices, outer_half_edge=g.outer_half_edge))
        self._absorb(root_id, half_edges)
        if self.pending:
            dangling = ", ".join(str(h) for h in sorted(self.pending))
            raise SplitError(f"pending child links were never resolved (reference half-edges {dangling})")
        self.links.sort(key=lambda link: link.child)
        return FourBlockTree(components=self.components, root=root_id, links=self.links, transfers=self.transfers)


def split_triangle(
    graph: RotationGraph, triangle: TriangleRecord, counter: Optional[OperationCounter] = None
) -> Component:
    """
    Cut ``triangle`` out of ``graph`` and return the new component.

    The interior, left of the reference edge, moves to three new copy vertices
    joined by a copy of the triangle; the triangle stays behind as a face.
    """
    return _Decomposition(graph, counter).split(triangle)


def decompose(
    graph: RotationGraph, ordered: OrderedTriangleList, counter: Optional[OperationCounter] = None
) -> FourBlockTree:
    """
    Split ``graph`` along every separating triangle, innermost first, and
    assemble the 4-block tree.

    The graph is modified in place; components are views over it. Children are
    attached through pending links keyed by reference half-edges.

    Raises:
        SplitError: an interval walk fails or a pending link stays unresolved.
    """
    run = _Decomposition(graph, counter)
    for triangle in ordered:
        run.split(triangle)
    tree = run.finish()

    limit = 2 * (graph.edge_count - 3 * len(ordered))
    if tree.transfers > limit:
        raise SplitError(f"moved {tree.transfers} half-edges, more than twice the {limit // 2} original edges")
    logger.info(f"Decomposed into {tree.node_count} components with {tree.transfers} half-edge transfers")
    return tree


def is_four_connected_component(component: Component) -> bool:
    """A valid triangulation without separating triangles (K4 and the single triangle included)"""
    sub = component.subgraph()
    if not validate_triangulation(sub).ok:
        return False
    return not separating_triangles(sub)

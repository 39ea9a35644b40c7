"""
Brute-force reference implementations

Slow, independent versions of triangle filtering, containment and the
4-block tree, used to cross-check the linear-time pipeline at test scale.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

import networkx as nx

from models import ChildLink, Component, DfsState, EdgeKind, FourBlockTree, Triple
from services.embedding import RotationGraph

logger = logging.getLogger(__name__)

Face = Triple


@dataclass
class ContainmentRelation:
    """Interior face sets of separating triangles and the induced nesting"""

    interiors: Dict[Triple, FrozenSet[Face]] = field(default_factory=dict)
    parent: Dict[Triple, Optional[Triple]] = field(default_factory=dict)

    def contains(self, outer: Triple, inner: Triple) -> bool:
        """True iff the interior of ``inner`` is strictly inside the interior of ``outer``"""
        return outer != inner and self.interiors[inner] < self.interiors[outer]

    def pairs(self) -> List[Tuple[Triple, Triple]]:
        """All (inner, outer) pairs of strictly nested triangles"""
        return [(a, b) for a in self.interiors for b in self.interiors if self.contains(b, a)]

    def innermost_first(self) -> List[Triple]:
        return sorted(self.interiors, key=lambda t: (len(self.interiors[t]), t))


def to_networkx(graph: RotationGraph) -> nx.Graph:
    """Abstract graph over vertex indices"""
    g = nx.Graph()
    g.add_nodes_from(range(graph.vertex_count))
    for h in range(0, graph.half_edge_count, 2):
        g.add_edge(graph.tail(h), graph.head(h))
    return g


def _face_of(graph: RotationGraph, h: int) -> Face:
    return tuple(sorted(graph.face_vertices(h)))


def brute_separating_triangles(graph: RotationGraph) -> Set[Triple]:
    """Non-facial 3-cliques, by exhaustive clique scan against the face set"""
    adjacency = [set(graph.neighbors(v)) for v in range(graph.vertex_count)]
    facial = {_face_of(graph, walk[0]) for walk in graph.faces()}
    out: Set[Triple] = set()
    for u in range(graph.vertex_count):
        for v in adjacency[u]:
            if v <= u:
                continue
            for w in adjacency[u] & adjacency[v]:
                if w > v and (u, v, w) not in facial:
                    out.add((u, v, w))
    return out


def separating_by_removal(graph: RotationGraph) -> Set[Triple]:
    """3-cliques whose removal disconnects the graph"""
    g = to_networkx(graph)
    out: Set[Triple] = set()
    for clique in (c for c in nx.enumerate_all_cliques(g) if len(c) == 3):
        rest = g.copy()
        rest.remove_nodes_from(clique)
        if rest.number_of_nodes() and not nx.is_connected(rest):
            out.add(tuple(sorted(clique)))
    return out


def brute_is_four_connected(graph: RotationGraph) -> bool:
    """At least five vertices and no vertex triple whose removal disconnects the graph"""
    if graph.vertex_count < 5:
        return False
    g = to_networkx(graph)
    if not nx.is_connected(g):
        return False
    for triple in combinations(g.nodes, 3):
        rest = g.copy()
        rest.remove_nodes_from(triple)
        if not nx.is_connected(rest):
            return False
    return True


def _dual_graph(graph: RotationGraph, cut: Set[FrozenSet[int]]) -> Tuple[nx.Graph, List[int], List[List[int]]]:
    """Face adjacency graph that does not cross the edges in ``cut``, with the face id of each half-edge"""
    face_id = [-1] * graph.half_edge_count
    faces = graph.faces()
    for i, walk in enumerate(faces):
        for h in walk:
            face_id[h] = i
    dual = nx.Graph()
    dual.add_nodes_from(range(len(faces)))
    for h in range(0, graph.half_edge_count, 2):
        if frozenset((graph.tail(h), graph.head(h))) in cut:
            continue
        dual.add_edge(face_id[h], face_id[h ^ 1])
    return dual, face_id, faces


def region_left_of(graph: RotationGraph, h: int, triangle: Triple) -> FrozenSet[Face]:
    """Faces reachable from the face left of ``h`` without crossing an edge of ``triangle``"""
    a, b, c = triangle
    cut = {frozenset((a, b)), frozenset((b, c)), frozenset((c, a))}
    dual, face_id, faces = _dual_graph(graph, cut)
    region = nx.node_connected_component(dual, face_id[h])
    return frozenset(_face_of(graph, faces[f][0]) for f in region)


def interior_faces(graph: RotationGraph, triangle: Triple) -> FrozenSet[Face]:
    """Faces inside ``triangle``: the side of it that does not hold the outer face"""
    a, b, _ = triangle
    h = graph.half_edge(a, b)
    outer = _face_of(graph, graph.outer_half_edge)
    region = region_left_of(graph, h, triangle)
    if outer in region:
        region = region_left_of(graph, h ^ 1, triangle)
    return region


def containment_relation(graph: RotationGraph, triangles: Optional[Set[Triple]] = None) -> ContainmentRelation:
    if triangles is None:
        triangles = brute_separating_triangles(graph)
    relation = ContainmentRelation()
    for t in triangles:
        relation.interiors[tuple(sorted(t))] = interior_faces(graph, tuple(sorted(t)))
    order = relation.innermost_first()
    for i, t in enumerate(order):
        relation.parent[t] = next((o for o in order[i + 1:] if relation.contains(o, t)), None)
    return relation


def brute_outermost_return_edges(state: DfsState) -> Dict[int, Set[int]]:
    """
    Tree edge -> the back edges that may serve as its outermost return edge.

    Walks the fundamental cycle of every back edge v -> w from v up to w and
    keeps, per tree edge on the way, the back edges that maximize (-lowpt, angle).
    """
    graph = state.graph
    cycles: Dict[int, List[int]] = {}
    for h in state.oriented_half_edges():
        if not EdgeKind(state.kind[h]).is_back:
            continue
        w, x = graph.head(h), graph.tail(h)
        while x != w:
            pe = state.parent_edge[x]
            cycles.setdefault(pe, []).append(h)
            x = graph.tail(pe)
    best: Dict[int, Set[int]] = {}
    for pe, backs in cycles.items():
        top = max((-state.lowpt[b], state.angle[b]) for b in backs)
        best[pe] = {b for b in backs if (-state.lowpt[b], state.angle[b]) == top}
    return best


def _restricted_component(
    graph: RotationGraph, vertices: Set[int], outer: Tuple[int, int], cid: int
) -> Component:
    ordered = sorted(vertices)
    rotation = {v: [w for w in graph.neighbors(v) if w in vertices] for v in ordered}
    origins = {v: graph.origin(v) for v in ordered}
    sub = RotationGraph.from_rotation(rotation, outer, origins=origins)
    return Component(
        id=cid,
        graph=sub,
        vertices=list(range(sub.vertex_count)),
        outer_half_edge=sub.outer_half_edge,
    )


def brute_4block_tree(graph: RotationGraph) -> FourBlockTree:
    """
    4-block tree rebuilt from face sets, quadratic time.

    Each component is the vertex-induced subgraph on the corners of the faces
    it owns, with rotations restricted to that vertex set.
    """
    relation = containment_relation(graph)
    order = relation.innermost_first()
    children: Dict[Optional[Triple], List[Triple]] = {}
    for t in order:
        children.setdefault(relation.parent[t], []).append(t)

    def owned_vertices(inside: FrozenSet[Face], kids: List[Triple]) -> Set[int]:
        faces = set(inside)
        for kid in kids:
            faces -= relation.interiors[kid]
            faces.add(kid)
        return {v for face in faces for v in face}

    components: List[Component] = []
    cid_of: Dict[Optional[Triple], int] = {}
    for t in order:
        a, b, _ = t
        h = graph.half_edge(a, b)
        # outer face of the child is the triangle itself, opposite its interior
        outer = (b, a) if _face_of(graph, h) in relation.interiors[t] else (a, b)
        vertices = owned_vertices(relation.interiors[t], children.get(t, []))
        component = _restricted_component(graph, vertices, outer, len(components))
        cid_of[t] = component.id
        components.append(component)

    all_faces = frozenset(_face_of(graph, walk[0]) for walk in graph.faces())
    root_vertices = owned_vertices(all_faces, children.get(None, []))
    root_outer = (graph.tail(graph.outer_half_edge), graph.head(graph.outer_half_edge))
    root = _restricted_component(graph, root_vertices, root_outer, len(components))
    components.append(root)
    cid_of[None] = root.id

    links: List[ChildLink] = []
    for t in order:
        child = components[cid_of[t]]
        parent = components[cid_of[relation.parent[t]]]
        sub = parent.graph
        a, b, c = (sub.vertex_of(graph.origin(x)) for x in t)
        anchor = sub.half_edge(a, b)
        if sorted(sub.face_vertices(anchor)) != sorted((a, b, c)):
            anchor ^= 1
        face = tuple(sub.origin(x) for x in sub.face_vertices(anchor))
        child.parent = parent.id
        child.parent_face = face
        child.parent_half_edge = anchor
        links.append(ChildLink(parent=parent.id, child=child.id, face=face, parent_half_edge=anchor))

    logger.debug(f"Oracle tree: {len(components)} components")
    return FourBlockTree(components=components, root=root.id, links=links)


def _signature(tree: FourBlockTree, cid: int) -> Tuple:
    component = tree.component(cid)
    parent_face = tuple(sorted(component.parent_face)) if component.parent_face is not None else None
    return (
        tuple(sorted(component.origins())),
        tuple(sorted(component.outer_face())),
        parent_face,
    )


def _canonical_labels(tree: FourBlockTree) -> Dict[int, Tuple]:
    """Bottom-up canonical label of every subtree"""
    children = {c.id: tree.children(c.id) for c in tree.components}
    order = [tree.root]
    for cid in order:
        order.extend(children[cid])
    labels: Dict[int, Tuple] = {}
    for cid in reversed(order):
        labels[cid] = (_signature(tree, cid), tuple(sorted(labels[k] for k in children[cid])))
    return labels


def trees_isomorphic(a: FourBlockTree, b: FourBlockTree) -> bool:
    """Root-preserving isomorphism matching vertex origins, outer faces and parent faces"""
    if a.node_count != b.node_count or a.edge_count != b.edge_count:
        return False
    return _canonical_labels(a)[a.root] == _canonical_labels(b)[b.root]


def _describe(signature: Tuple) -> str:
    origins, outer, parent_face = signature
    where = "root" if parent_face is None else f"child at face {parent_face}"
    return f"{where} with vertices {list(origins)} and outer face {outer}"


def tree_diff(a: FourBlockTree, b: FourBlockTree, names: Tuple[str, str] = ("pipeline", "oracle")) -> List[str]:
    """Human-readable differences between two trees, empty when they match"""
    out: List[str] = []
    if a.node_count != b.node_count:
        out.append(f"{names[0]} has {a.node_count} components, {names[1]} has {b.node_count}")
    sig_a = Counter(_signature(a, c.id) for c in a.components)
    sig_b = Counter(_signature(b, c.id) for c in b.components)
    for signature in sorted((sig_a - sig_b).elements(), key=repr):
        out.append(f"only in {names[0]}: {_describe(signature)}")
    for signature in sorted((sig_b - sig_a).elements(), key=repr):
        out.append(f"only in {names[1]}: {_describe(signature)}")
    if not out and not trees_isomorphic(a, b):
        out.append("components match but the nesting differs")
    return out

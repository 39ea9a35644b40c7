from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import TYPE_CHECKING, Dict, Iterator, List, Optional, Tuple

if TYPE_CHECKING:
    from services.embedding import RotationGraph

Triple = Tuple[int, int, int]


class DiagnosticKind(str, Enum):
    TOO_SMALL = "too_small"
    NOT_SIMPLE = "not_simple"
    NOT_CONNECTED = "not_connected"
    NON_TRIANGULAR_FACE = "non_triangular_face"
    BAD_OUTER_EDGE = "bad_outer_edge"
    EULER_VIOLATION = "euler_violation"


@dataclass(frozen=True)
class Finding:
    kind: DiagnosticKind
    message: str


@dataclass
class Diagnostics:
    """Validation findings; empty iff the input is a valid embedded triangulation"""

    findings: List[Finding] = field(default_factory=list)

    def add(self, kind: DiagnosticKind, message: str) -> None:
        self.findings.append(Finding(kind, message))

    @property
    def ok(self) -> bool:
        return not self.findings

    @property
    def flags(self) -> set:
        return {f.kind for f in self.findings}

    def messages(self) -> List[str]:
        return [f"{f.kind.value}: {f.message}" for f in self.findings]

    def __repr__(self):
        return f"<Diagnostics(findings={len(self.findings)}, flags={sorted(k.value for k in self.flags)})>"


class EdgeKind(IntEnum):
    UNSET = 0
    TREE = 1
    LEFT_BACK = 2
    RIGHT_BACK = 3

    @property
    def is_back(self) -> bool:
        return self in (EdgeKind.LEFT_BACK, EdgeKind.RIGHT_BACK)


@dataclass(frozen=True)
class DfsVertexState:
    depth: int
    parent_edge: int
    active_child: int


@dataclass(frozen=True)
class DfsEdgeState:
    half_edge: int
    tail: int
    head: int
    kind: EdgeKind
    lowpt: int
    angle: int
    outermost_return_edge: int
    edge_time: int


@dataclass
class DfsState:
    """Struct-of-arrays DFS annotations.

    Vertex tables are indexed by vertex, edge tables by half-edge. Only the
    half-edge chosen as orientation of an edge carries a kind other than
    UNSET. Slot ``virtual_edge`` (one past the last half-edge) is the virtual
    parent edge of the root.
    """

    graph: "RotationGraph"
    root: int
    virtual_edge: int
    depth: List[int]
    parent_edge: List[int]
    active_child: List[int]
    kind: List[int]
    lowpt: List[int]
    angle: List[int]
    outermost_return_edge: List[int]
    edge_time: List[int] = field(default_factory=list)
    discovered_by_second_pass: List[bool] = field(default_factory=list)

    def vertex_state(self, v: int) -> DfsVertexState:
        return DfsVertexState(self.depth[v], self.parent_edge[v], self.active_child[v])

    def edge_state(self, h: int) -> DfsEdgeState:
        """Annotations of an oriented half-edge (or of its twin, resolved to the oriented one)"""
        if self.kind[h] == EdgeKind.UNSET and h != self.virtual_edge:
            h ^= 1
        time = self.edge_time[h] if self.edge_time else -1
        if h == self.virtual_edge:
            tail = head = self.root
        else:
            tail, head = self.graph.tail(h), self.graph.head(h)
        return DfsEdgeState(
            half_edge=h,
            tail=tail,
            head=head,
            kind=EdgeKind(self.kind[h]),
            lowpt=self.lowpt[h],
            angle=self.angle[h],
            outermost_return_edge=self.outermost_return_edge[h],
            edge_time=time,
        )

    def oriented_half_edges(self) -> List[int]:
        """The oriented half-edge of every edge, in edge-id order"""
        kind = self.kind
        return [h if kind[h] != EdgeKind.UNSET else h ^ 1 for h in range(0, self.virtual_edge, 2)]


@dataclass
class TriangleRecord:
    corners: Triple
    last_edge: int = -1
    time: int = -1
    internal_angle: int = -1
    reference_edge: int = -1

    def third_corner(self, u: int, v: int) -> int:
        for c in self.corners:
            if c != u and c != v:
                return c
        raise ValueError(f"{u}, {v} are not two corners of {self.corners}")

    def __repr__(self):
        return (
            f"<TriangleRecord(corners={self.corners}, time={self.time}, "
            f"angle={self.internal_angle}, ref={self.reference_edge})>"
        )


@dataclass
class OrderedTriangleList:
    """Separating triangles innermost-to-outermost plus the per-vertex edge order"""

    triangles: List[TriangleRecord]
    edge_order: List[List[int]]
    state: Optional[DfsState] = None

    def __iter__(self) -> Iterator[TriangleRecord]:
        return iter(self.triangles)

    def __len__(self) -> int:
        return len(self.triangles)

    def __getitem__(self, i: int) -> TriangleRecord:
        return self.triangles[i]

    def positions(self) -> Dict[Triple, int]:
        return {t.corners: i for i, t in enumerate(self.triangles)}


@dataclass
class Component:
    """A 4-connected component: a view over a half-edge arena.

    ``vertices`` are vertex indices of ``graph``; ``outer_half_edge`` has the
    component's outer face to its left.
    """

    id: int
    graph: "RotationGraph"
    vertices: List[int]
    outer_half_edge: int
    parent: Optional[int] = None
    parent_face: Optional[Triple] = None
    parent_half_edge: Optional[int] = None
    triangle: Optional[TriangleRecord] = None

    @property
    def is_root(self) -> bool:
        return self.parent is None

    def origins(self) -> List[int]:
        return [self.graph.origin(v) for v in self.vertices]

    def outer_face(self) -> Triple:
        walk = self.graph.face_walk(self.outer_half_edge)
        return tuple(self.graph.origin(self.graph.tail(h)) for h in walk)

    def local_index(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def rotation(self) -> Dict[int, List[int]]:
        """CCW neighbor lists keyed and valued by local index"""
        local = self.local_index()
        return {local[v]: [local[w] for w in self.graph.neighbors(v)] for v in self.vertices}

    def edge_count(self) -> int:
        return sum(self.graph.degree(v) for v in self.vertices) // 2

    def inner_face_count(self) -> int:
        # Euler on a triangulated sphere, minus the outer face
        return 2 - len(self.vertices) + self.edge_count() - 1

    def subgraph(self) -> "RotationGraph":
        return self.graph.subgraph(self.vertices, self.outer_half_edge)

    def __repr__(self):
        return f"<Component(id={self.id}, n={len(self.vertices)}, parent={self.parent})>"


@dataclass(frozen=True)
class ChildLink:
    parent: int
    child: int
    face: Triple
    parent_half_edge: int


@dataclass
class FourBlockTree:
    components: List[Component]
    root: int
    links: List[ChildLink] = field(default_factory=list)
    transfers: int = 0

    @property
    def node_count(self) -> int:
        return len(self.components)

    @property
    def edge_count(self) -> int:
        return len(self.links)

    def component(self, cid: int) -> Component:
        return self.components[cid]

    def children(self, cid: int) -> List[int]:
        return [link.child for link in self.links if link.parent == cid]

    def leaves(self) -> List[int]:
        parents = {link.parent for link in self.links}
        return [c.id for c in self.components if c.id not in parents]

    def parent_chain(self, cid: int) -> List[int]:
        """Component ids from ``cid`` up to the root, inclusive"""
        chain = [cid]
        while self.components[chain[-1]].parent is not None:
            chain.append(self.components[chain[-1]].parent)
        return chain

    def depth(self) -> int:
        """Number of nodes on the longest root-to-leaf path"""
        if not self.components:
            return 0
        return max(len(self.parent_chain(c.id)) for c in self.components)

    def __repr__(self):
        return f"<FourBlockTree(nodes={self.node_count}, root={self.root})>"

"""
Embedded graph substrate
Half-edge rotation system, angle arithmetic, face traversal, validation and text I/O
"""

import logging
from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from models import DiagnosticKind, Diagnostics
from services.errors import EmbeddingError, RotationFormatError

logger = logging.getLogger(__name__)

NO_EDGE = -1


class RotationGraph:
    """
    Embedded simple graph stored as half-edges with cyclic CCW incidence lists.

    Half-edges come in pairs: ``h`` and ``h ^ 1`` are twins and ``h >> 1`` is the
    undirected edge id. Every half-edge sits in the incidence list of its tail,
    kept as a doubly linked cycle (``ccw_next`` / ``ccw_prev``), so arcs can be
    cut and moved in time proportional to their length.

    The face to the left of ``u -> v`` continues with ``v -> p`` where ``p`` is
    the CCW predecessor of ``u`` at ``v``.
    """

    def __init__(self) -> None:
        self._tail: List[int] = []
        self._next: List[int] = []
        self._prev: List[int] = []
        self._index: List[int] = []
        self._first: List[int] = []
        self._degree: List[int] = []
        self._origin: List[int] = []
        self._index_valid: List[bool] = []
        self._lookup: Optional[Dict[Tuple[int, int], int]] = None
        self._by_origin: Dict[int, int] = {}
        self.outer_half_edge: int = NO_EDGE

    # ------------------------------------------------------------------
    # Sizes and accessors
    # ------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._first)

    @property
    def edge_count(self) -> int:
        return len(self._tail) // 2

    @property
    def half_edge_count(self) -> int:
        return len(self._tail)

    @property
    def root(self) -> int:
        """DFS root: tail of the designated outer half-edge"""
        return self._tail[self.outer_half_edge]

    def tail(self, h: int) -> int:
        return self._tail[h]

    def head(self, h: int) -> int:
        return self._tail[h ^ 1]

    @staticmethod
    def twin(h: int) -> int:
        return h ^ 1

    def ccw_next(self, h: int) -> int:
        return self._next[h]

    def ccw_prev(self, h: int) -> int:
        return self._prev[h]

    def degree(self, v: int) -> int:
        return self._degree[v]

    def origin(self, v: int) -> int:
        return self._origin[v]

    def first(self, v: int) -> int:
        return self._first[v]

    def vertex_of(self, origin: int) -> int:
        """Vertex index of an original (non-copy) vertex id"""
        try:
            return self._by_origin[origin]
        except KeyError:
            raise EmbeddingError(f"Unknown vertex id {origin}")

    def rotation(self, v: int) -> List[int]:
        """Outgoing half-edges of ``v`` in CCW order, starting at its first entry"""
        start = self._first[v]
        if start == NO_EDGE:
            return []
        out = [start]
        h = self._next[start]
        while h != start:
            out.append(h)
            h = self._next[h]
        return out

    def neighbors(self, v: int) -> List[int]:
        tail = self._tail
        return [tail[h ^ 1] for h in self.rotation(v)]

    def half_edge(self, u: int, v: int) -> int:
        """The half-edge ``u -> v``"""
        if self._lookup is None:
            self._lookup = {(self._tail[h], self._tail[h ^ 1]): h for h in range(len(self._tail))}
        h = self._lookup.get((u, v))
        if h is None:
            raise EmbeddingError(f"Vertices {u} and {v} are not adjacent")
        return h

    # Raw tables for the hot loops of the ordering and splitting phases.
    # Callers must not mutate them.

    @property
    def tails(self) -> List[int]:
        return self._tail

    @property
    def next_table(self) -> List[int]:
        return self._next

    @property
    def degrees(self) -> List[int]:
        return self._degree

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    def add_vertex(self, origin: Optional[int] = None) -> int:
        v = len(self._first)
        self._first.append(NO_EDGE)
        self._degree.append(0)
        self._index_valid.append(False)
        if origin is None:
            origin = v
            self._by_origin.setdefault(origin, v)
        self._origin.append(origin)
        return v

    def _new_edge(self, u: int, v: int) -> int:
        h = len(self._tail)
        self._tail.extend((u, v))
        self._next.extend((NO_EDGE, NO_EDGE))
        self._prev.extend((NO_EDGE, NO_EDGE))
        self._index.extend((0, 0))
        return h

    def _append(self, v: int, h: int) -> None:
        """Place ``h`` at the end of ``v``'s cyclic list, just before its first entry"""
        f = self._first[v]
        if f == NO_EDGE:
            self._next[h] = self._prev[h] = h
            self._first[v] = h
        else:
            last = self._prev[f]
            self._next[last] = h
            self._prev[h] = last
            self._next[h] = f
            self._prev[f] = h
        self._tail[h] = v
        self._degree[v] += 1
        self._index_valid[v] = False

    def _insert_after(self, anchor: int, h: int) -> None:
        v = self._tail[anchor]
        nxt = self._next[anchor]
        self._next[anchor] = h
        self._prev[h] = anchor
        self._next[h] = nxt
        self._prev[nxt] = h
        self._tail[h] = v
        self._degree[v] += 1
        self._index_valid[v] = False

    def add_edge(self, u: int, v: int, after_u: Optional[int] = None, after_v: Optional[int] = None) -> int:
        """
        Add edge {u, v} and return the half-edge ``u -> v``.

        Args:
            u, v: endpoints.
            after_u: half-edge at ``u`` that the new entry follows CCW; appended if None.
            after_v: half-edge at ``v`` that the twin follows CCW; appended if None.
        """
        h = self._new_edge(u, v)
        if after_u is None:
            self._append(u, h)
        else:
            self._insert_after(after_u, h)
        if after_v is None:
            self._append(v, h ^ 1)
        else:
            self._insert_after(after_v, h ^ 1)
        if self._lookup is not None:
            self._lookup[(u, v)] = h
            self._lookup[(v, u)] = h ^ 1
        return h

    @classmethod
    def from_rotation(
        cls,
        rotation: Mapping[int, Sequence[int]],
        outer: Tuple[int, int],
        origins: Optional[Mapping[int, int]] = None,
        line_of: Optional[Mapping[int, int]] = None,
    ) -> "RotationGraph":
        """
        Build a graph from CCW neighbor lists.

        Args:
            rotation: vertex id -> neighbor ids in CCW order. Vertex indices follow
                the mapping's iteration order.
            outer: directed edge (u, v) whose left face is the outer face.
            origins: optional vertex id -> original vertex id (defaults to the id).
            line_of: optional vertex id -> source line, for error messages.

        Raises:
            RotationFormatError: unknown vertex, self-loop, duplicate neighbor,
                asymmetric adjacency, or absent outer edge.
        """
        line_of = line_of or {}
        ids = list(rotation.keys())
        index_of = {vid: i for i, vid in enumerate(ids)}

        neighbor_sets: Dict[int, set] = {}
        for vid, nbrs in rotation.items():
            seen = set()
            for w in nbrs:
                if w not in index_of:
                    raise RotationFormatError(f"unknown vertex id {w} in the list of {vid}", line_of.get(vid))
                if w == vid:
                    raise RotationFormatError(f"vertex {vid} lists itself", line_of.get(vid))
                if w in seen:
                    raise RotationFormatError(f"duplicate neighbor {w} in the list of {vid}", line_of.get(vid))
                seen.add(w)
            neighbor_sets[vid] = seen
        for vid, seen in neighbor_sets.items():
            for w in seen:
                if vid not in neighbor_sets[w]:
                    raise RotationFormatError(
                        f"asymmetric adjacency: {w} is listed at {vid} but {vid} is not listed at {w}",
                        line_of.get(vid),
                    )

        graph = cls()
        for vid in ids:
            origin = origins[vid] if origins is not None else vid
            graph.add_vertex(origin=origin)
            graph._by_origin.setdefault(origin, index_of[vid])

        pair: Dict[Tuple[int, int], int] = {}
        for vid in ids:
            for w in rotation[vid]:
                if (vid, w) not in pair:
                    h = graph._new_edge(index_of[vid], index_of[w])
                    pair[(vid, w)] = h
                    pair[(w, vid)] = h ^ 1
        for vid in ids:
            v = index_of[vid]
            for w in rotation[vid]:
                graph._append(v, pair[(vid, w)])

        if tuple(outer) not in pair:
            raise RotationFormatError(f"declared outer edge ({outer[0]}, {outer[1]}) is not an edge")
        graph.outer_half_edge = pair[tuple(outer)]
        graph._lookup = {(index_of[a], index_of[b]): h for (a, b), h in pair.items()}
        return graph

    # ------------------------------------------------------------------
    # Angles
    # ------------------------------------------------------------------

    def _rebuild_index(self, v: int) -> None:
        h = start = self._first[v]
        i = 0
        if start != NO_EDGE:
            while True:
                self._index[h] = i
                i += 1
                h = self._next[h]
                if h == start:
                    break
        self._index_valid[v] = True

    def index(self, h: int) -> int:
        """CCW position of ``h`` in its tail's incidence list"""
        v = self._tail[h]
        if not self._index_valid[v]:
            self._rebuild_index(v)
        return self._index[h]

    def index_table(self) -> List[int]:
        """CCW positions of every half-edge, rebuilding stale vertices first"""
        for v in range(len(self._first)):
            if not self._index_valid[v]:
                self._rebuild_index(v)
        return self._index

    def angle_between(self, h_from: int, h_to: int) -> int:
        """CCW turn count from ``h_from`` to ``h_to``, both leaving the same vertex"""
        v = self._tail[h_from]
        if self._tail[h_to] != v:
            raise EmbeddingError(f"Half-edges {h_from} and {h_to} do not share a tail")
        return (self.index(h_to) - self.index(h_from)) % self._degree[v]

    def angle_size(self, v: int, u: int, w: int) -> int:
        """Size of the angle from edge {v,u} counter-clockwise to edge {v,w}"""
        return self.angle_between(self.half_edge(v, u), self.half_edge(v, w))

    # ------------------------------------------------------------------
    # Faces
    # ------------------------------------------------------------------

    def face_next(self, h: int) -> int:
        return self._prev[h ^ 1]

    def face_walk(self, h: int) -> List[int]:
        """Boundary of the face to the left of ``h``, starting with ``h``"""
        walk = [h]
        limit = len(self._tail)
        cur = self._prev[h ^ 1]
        while cur != h:
            walk.append(cur)
            if len(walk) > limit:
                raise EmbeddingError(f"Face walk from half-edge {h} does not close")
            cur = self._prev[cur ^ 1]
        return walk

    def faces(self) -> List[List[int]]:
        seen = [False] * len(self._tail)
        out: List[List[int]] = []
        for h in range(len(self._tail)):
            if seen[h]:
                continue
            walk = self.face_walk(h)
            for x in walk:
                seen[x] = True
            out.append(walk)
        return out

    def face_vertices(self, h: int) -> Tuple[int, ...]:
        return tuple(self._tail[x] for x in self.face_walk(h))

    # ------------------------------------------------------------------
    # Surgery
    # ------------------------------------------------------------------

    def transfer_arc(self, v: int, from_h: int, to_h: int, target: int) -> int:
        """
        Move the half-edges strictly CCW-between ``from_h`` and ``to_h`` at ``v``
        to the end of ``target``'s incidence list, order preserved.

        Twins are not touched, so the moved edges' far endpoints now see ``target``.

        Returns:
            The number of half-edges moved.
        """
        tail, nxt, prv = self._tail, self._next, self._prev
        if tail[from_h] != v or tail[to_h] != v:
            raise EmbeddingError(f"Half-edges {from_h}, {to_h} are not both incident to vertex {v}")
        if from_h == to_h:
            raise EmbeddingError("transfer_arc needs two distinct half-edges")
        if target == v:
            raise EmbeddingError("transfer_arc target must differ from the source vertex")

        start = nxt[from_h]
        if start == to_h:
            return 0
        end = prv[to_h]

        nxt[from_h] = to_h
        prv[to_h] = from_h

        moved = 0
        first_moved = False
        h = start
        while True:
            tail[h] = target
            moved += 1
            if h == self._first[v]:
                first_moved = True
            if h == end:
                break
            h = nxt[h]
        if first_moved:
            self._first[v] = from_h
        self._degree[v] -= moved

        f = self._first[target]
        if f == NO_EDGE:
            nxt[end] = start
            prv[start] = end
            self._first[target] = start
        else:
            last = prv[f]
            nxt[last] = start
            prv[start] = last
            nxt[end] = f
            prv[f] = end
        self._degree[target] += moved

        self._index_valid[v] = False
        self._index_valid[target] = False
        self._lookup = None
        return moved

    # ------------------------------------------------------------------
    # Whole-structure queries
    # ------------------------------------------------------------------

    def reachable_vertices(self, v: int) -> List[int]:
        tail, nxt = self._tail, self._next
        seen = {v}
        order = [v]
        queue = deque([v])
        while queue:
            x = queue.popleft()
            start = self._first[x]
            if start == NO_EDGE:
                continue
            h = start
            while True:
                w = tail[h ^ 1]
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    queue.append(w)
                h = nxt[h]
                if h == start:
                    break
        return order

    def audit(self) -> List[str]:
        """Full-structure consistency check; returns the problems found"""
        problems: List[str] = []
        n_half = len(self._tail)
        if n_half % 2:
            problems.append("odd number of half-edges")
        owner = [NO_EDGE] * n_half
        for v in range(len(self._first)):
            start = self._first[v]
            if start == NO_EDGE:
                if self._degree[v] != 0:
                    problems.append(f"vertex {v} has degree {self._degree[v]} but an empty list")
                continue
            count = 0
            h = start
            while True:
                if owner[h] != NO_EDGE:
                    problems.append(f"half-edge {h} appears in lists of {owner[h]} and {v}")
                    break
                owner[h] = v
                if self._tail[h] != v:
                    problems.append(f"half-edge {h} is in the list of {v} but has tail {self._tail[h]}")
                if self._prev[self._next[h]] != h:
                    problems.append(f"broken links around half-edge {h}")
                    break
                count += 1
                h = self._next[h]
                if h == start or count > n_half:
                    break
            if count != self._degree[v]:
                problems.append(f"vertex {v} lists {count} half-edges but has degree {self._degree[v]}")
        for h in range(n_half):
            if owner[h] == NO_EDGE:
                problems.append(f"half-edge {h} is in no incidence list")
            if self._tail[h] == self._tail[h ^ 1]:
                problems.append(f"half-edge {h} is a loop")
        return problems

    def subgraph(self, vertices: Sequence[int], outer_half_edge: int) -> "RotationGraph":
        """Deep copy of a closed vertex set as a standalone graph with local ids"""
        local = {v: i for i, v in enumerate(vertices)}
        rotation = {local[v]: [local[w] for w in self.neighbors(v)] for v in vertices}
        origins = {local[v]: self._origin[v] for v in vertices}
        outer = (local[self.tail(outer_half_edge)], local[self.head(outer_half_edge)])
        return RotationGraph.from_rotation(rotation, outer, origins=origins)

    def __repr__(self):
        return f"<RotationGraph(n={self.vertex_count}, m={self.edge_count}, outer={self.outer_half_edge})>"


# ----------------------------------------------------------------------
# Text I/O
# ----------------------------------------------------------------------

def _meaningful_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _parse_ints(tokens: Sequence[str], lineno: int) -> List[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise RotationFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno)
    if any(x < 0 for x in values):
        raise RotationFormatError("vertex ids must be non-negative", lineno)
    return values


def parse_rotation_graph(text: str) -> RotationGraph:
    """
    Parse a rotation-format document.

    Format: ``n m`` / ``outer u v`` / n lines ``<id>: w1 ... wk`` (CCW order);
    lines starting with ``#`` are comments.
    """
    lines = _meaningful_lines(text)
    if len(lines) < 2:
        raise RotationFormatError("document needs a header line and an outer line")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise RotationFormatError(f"header must be 'n m', got {header!r}", lineno)
    n, m = _parse_ints(parts, lineno)

    lineno, outer_line = lines[1]
    parts = outer_line.split()
    if len(parts) != 3 or parts[0] != "outer":
        raise RotationFormatError(f"expected 'outer u v', got {outer_line!r}", lineno)
    u, v = _parse_ints(parts[1:], lineno)

    body = lines[2:]
    if len(body) != n:
        raise RotationFormatError(f"header declares {n} vertices but {len(body)} vertex lines follow")

    rotation: Dict[int, List[int]] = {}
    line_of: Dict[int, int] = {}
    for lineno, line in body:
        head, sep, rest = line.partition(":")
        if not sep:
            raise RotationFormatError(f"expected '<id>: neighbors', got {line!r}", lineno)
        if not head.strip():
            raise RotationFormatError("missing vertex id", lineno)
        (vid,) = _parse_ints([head.strip()], lineno)
        if vid in rotation:
            raise RotationFormatError(f"vertex {vid} declared twice", lineno)
        rotation[vid] = _parse_ints(rest.split(), lineno)
        line_of[vid] = lineno

    degree_sum = sum(len(nbrs) for nbrs in rotation.values())
    if degree_sum != 2 * m:
        raise RotationFormatError(f"header declares {m} edges but the lists describe {degree_sum / 2:g}")
    if u not in rotation or v not in rotation:
        raise RotationFormatError(f"declared outer edge ({u}, {v}) uses an unknown vertex")

    graph = RotationGraph.from_rotation(rotation, (u, v), line_of=line_of)
    logger.debug(f"Parsed rotation document: n={graph.vertex_count}, m={graph.edge_count}")
    return graph


def serialize_rotation_graph(
    graph: RotationGraph,
    vertices: Optional[Sequence[int]] = None,
    outer_half_edge: Optional[int] = None,
) -> str:
    """
    Render ``graph`` (or the closed vertex set ``vertices``) in rotation format.

    The full graph is written with its origin ids when those are unique; a
    vertex subset is written with local indices.
    """
    if vertices is None:
        vertices = list(range(graph.vertex_count))
        origins = [graph.origin(v) for v in vertices]
        if len(set(origins)) == len(origins):
            label = {v: graph.origin(v) for v in vertices}
        else:
            label = {v: v for v in vertices}
    else:
        label = {v: i for i, v in enumerate(vertices)}
    if outer_half_edge is None:
        outer_half_edge = graph.outer_half_edge

    m = sum(graph.degree(v) for v in vertices) // 2
    out = [
        f"{len(vertices)} {m}",
        f"outer {label[graph.tail(outer_half_edge)]} {label[graph.head(outer_half_edge)]}",
    ]
    for v in vertices:
        nbrs = " ".join(str(label[w]) for w in graph.neighbors(v))
        out.append(f"{label[v]}: {nbrs}".rstrip())
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# Validation
# ----------------------------------------------------------------------

def validate_triangulation(graph: RotationGraph) -> Diagnostics:
    """Check simplicity, connectivity, triangular faces, outer edge and Euler's formula"""
    diagnostics = Diagnostics()
    n, m = graph.vertex_count, graph.edge_count

    if n < 3:
        diagnostics.add(DiagnosticKind.TOO_SMALL, f"a triangulation needs at least 3 vertices, got {n}")

    if not 0 <= graph.outer_half_edge < graph.half_edge_count:
        diagnostics.add(DiagnosticKind.BAD_OUTER_EDGE, f"outer half-edge {graph.outer_half_edge} does not exist")

    # Simplicity
    loops = duplicates = 0
    for v in range(n):
        heads = set()
        for h in graph.rotation(v):
            w = graph.head(h)
            if w == v:
                loops += 1
            elif w in heads:
                duplicates += 1
            heads.add(w)
    if loops:
        diagnostics.add(DiagnosticKind.NOT_SIMPLE, f"{loops} loop half-edges")
    if duplicates:
        diagnostics.add(DiagnosticKind.NOT_SIMPLE, f"{duplicates} parallel half-edges")

    # Connectivity
    if n and len(graph.reachable_vertices(0)) != n:
        reached = len(graph.reachable_vertices(0))
        diagnostics.add(DiagnosticKind.NOT_CONNECTED, f"only {reached} of {n} vertices reachable from vertex 0")

    # Faces
    faces = graph.faces()
    bad_faces = [walk for walk in faces if len(walk) != 3]
    if bad_faces:
        sizes = ", ".join(str(len(walk)) for walk in bad_faces[:5])
        diagnostics.add(
            DiagnosticKind.NON_TRIANGULAR_FACE,
            f"{len(bad_faces)} faces are not triangles (sizes {sizes}{', ...' if len(bad_faces) > 5 else ''})",
        )

    f = len(faces)
    if n - m + f != 2:
        diagnostics.add(DiagnosticKind.EULER_VIOLATION, f"n - m + f = {n} - {m} + {f} = {n - m + f}, expected 2")

    if not diagnostics.ok:
        logger.info(f"Validation found {len(diagnostics.findings)} problems: {diagnostics.messages()}")
    return diagnostics

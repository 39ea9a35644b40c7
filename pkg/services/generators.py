"""
Triangulation instance generators

Random instances draw from numpy's PCG64 bit generator seeded with the
64-bit seed of a GenSpec, so a (kind, size, seed) triple names one document.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from config.fixtures import get_fixture, validate_fixture_name
from schemas.generator import GenSpec
from services.embedding import RotationGraph, parse_rotation_graph
from services.errors import GeneratorError

logger = logging.getLogger(__name__)


def gen_canonical(name: str) -> RotationGraph:
    """Frozen fixture by name (triangle, k4, canon5, canon7, octa_nested)"""
    if not validate_fixture_name(name):
        raise GeneratorError(f"Unknown fixture {name!r}")
    return parse_rotation_graph(get_fixture(name))


def _base_triangle() -> Tuple[RotationGraph, int]:
    """Triangle 0,1,2 with outer half-edge 1->0; returns the graph and the inner face's half-edge 0->1"""
    graph = RotationGraph()
    a, b, c = graph.add_vertex(), graph.add_vertex(), graph.add_vertex()
    h_ab = graph.add_edge(a, b)
    graph.add_edge(b, c)
    graph.add_edge(c, a)
    graph.outer_half_edge = h_ab ^ 1
    return graph, h_ab


def _stack_into(graph: RotationGraph, h: int) -> Tuple[int, int, int]:
    """
    Insert a degree-3 vertex into the face left of ``h``.

    Returns:
        Half-edges representing the three new faces, ``h`` first.
    """
    h2 = graph.face_next(h)
    h3 = graph.face_next(h2)
    x = graph.add_vertex()
    graph.add_edge(x, graph.tail(h), after_v=h)
    graph.add_edge(x, graph.tail(h2), after_v=h2)
    graph.add_edge(x, graph.tail(h3), after_v=h3)
    return h, h2, h3


def gen_apollonian(n: int, seed: int) -> RotationGraph:
    """Stacked triangulation on ``n`` vertices, each insertion into a uniform inner face"""
    if n < 4:
        raise GeneratorError(f"apollonian instances need n >= 4, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    graph, inner = _base_triangle()
    faces: List[int] = [inner]
    for _ in range(n - 3):
        i = int(rng.integers(len(faces)))
        h, h2, h3 = _stack_into(graph, faces[i])
        faces[i] = h
        faces.append(h2)
        faces.append(h3)
    logger.debug(f"Generated apollonian instance n={n}, seed={seed}")
    return graph


def gen_nested_chain(k: int) -> RotationGraph:
    """
    ``k`` nested separating triangles sharing the edge {0, 1}.

    Vertex 3 is stacked into the inner face, then each new vertex into the
    face formed by 0, 1 and the previous one, giving n = k + 4.
    """
    if k < 1:
        raise GeneratorError(f"nested-chain instances need k >= 1, got {k}")
    graph, inner = _base_triangle()
    for _ in range(k + 1):
        _stack_into(graph, inner)
    logger.debug(f"Generated nested chain k={k}, n={graph.vertex_count}")
    return graph


def _flip(rotation: Dict[int, List[int]], u: int, v: int, outer_face: Set[int]) -> Optional[Tuple[int, int]]:
    """
    Replace edge {u, v} by the opposite diagonal {x, y} of its two faces.

    Returns None, leaving ``rotation`` untouched, when the diagonal already
    exists or one of the two faces is the outer face.
    """
    ru, rv = rotation[u], rotation[v]
    x = rv[rv.index(u) - 1]
    y = ru[ru.index(v) - 1]
    if x == y or y in rotation[x] or {u, v, x} == outer_face or {u, v, y} == outer_face:
        return None
    ru.remove(v)
    rv.remove(u)
    rx, ry = rotation[x], rotation[y]
    rx.insert(rx.index(u) + 1, y)
    ry.insert(ry.index(v) + 1, x)
    return x, y


def gen_flipped(n: int, seed: int, flips: Optional[int] = None) -> RotationGraph:
    """
    Stacked triangulation followed by random edge flips.

    Flips break the stacked structure, so components with five or more
    vertices appear. ``flips`` defaults to 2n attempts; illegal ones are skipped.
    """
    base = gen_apollonian(n, seed)
    flips = 2 * n if flips is None else flips
    if flips < 0:
        raise GeneratorError(f"flip count must be non-negative, got {flips}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 1])))
    rotation = {v: base.neighbors(v) for v in range(base.vertex_count)}
    outer = base.outer_half_edge
    outer_face = set(base.face_vertices(outer))
    edges = [(u, v) for u in rotation for v in rotation[u] if u < v]
    done = 0
    for _ in range(flips):
        i = int(rng.integers(len(edges)))
        flipped = _flip(rotation, *edges[i], outer_face)
        if flipped is not None:
            edges[i] = flipped
            done += 1
    logger.debug(f"Generated flipped instance n={n}, seed={seed}: {done} of {flips} flips applied")
    return RotationGraph.from_rotation(rotation, (base.tail(outer), base.head(outer)))


def generate(spec: GenSpec) -> RotationGraph:
    if spec.kind == "canonical":
        return gen_canonical(spec.name)
    if spec.kind == "apollonian":
        return gen_apollonian(spec.n, spec.seed)
    if spec.kind == "nested-chain":
        return gen_nested_chain(spec.k)
    if spec.kind == "flipped":
        return gen_flipped(spec.n, spec.seed, spec.flips)
    raise GeneratorError(f"Unknown generator kind {spec.kind!r}")

import pytest
from hypothesis import HealthCheck, settings

from services.embedding import RotationGraph, parse_rotation_graph
from services.generators import gen_canonical

settings.register_profile(
    "quadblock",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("quadblock")

# Vertex names used in the fixture comments: a=0 b=1 c=2 d=3 e=4 f=5
A, B, C, D, E, F = range(6)

K4_MINUS_EDGE = "4 5\nouter 1 0\n0: 1 3 2\n1: 2 3 0\n2: 0 1\n3: 0 1\n"

TWO_TRIANGLES = "6 6\nouter 1 0\n0: 1 2\n1: 2 0\n2: 0 1\n3: 4 5\n4: 5 3\n5: 3 4\n"

# outer triangle 0,1,2 and inner triangle 3,4,5, each inner vertex joined to two outer ones
OCTAHEDRON = "6 12\nouter 1 0\n0: 1 5 4 2\n1: 2 3 5 0\n2: 0 4 3 1\n3: 4 5 1 2\n4: 0 5 3 2\n5: 4 0 1 3\n"


@pytest.fixture
def triangle() -> RotationGraph:
    return gen_canonical("triangle")


@pytest.fixture
def k4() -> RotationGraph:
    return gen_canonical("k4")


@pytest.fixture
def canon5() -> RotationGraph:
    return gen_canonical("canon5")


@pytest.fixture
def canon7() -> RotationGraph:
    return gen_canonical("canon7")


@pytest.fixture
def octahedron() -> RotationGraph:
    return parse_rotation_graph(OCTAHEDRON)


@pytest.fixture
def fixture_file(tmp_path):
    """Write a rotation document to a temporary file and return its path"""

    def write(text: str, name: str = "graph.rot") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def octa_nested() -> RotationGraph:
    return gen_canonical("octa_nested")

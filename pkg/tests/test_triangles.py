import pytest

from conftest import A, B, C, D, E
from services.errors import EmbeddingError
from services.generators import gen_apollonian
from services.triangles import is_facial, list_all_triangles, separating_triangles, triangle_count_identity
from utils.counters import OperationCounter


class TestListAllTriangles:
    def test_k4(self, k4):
        assert sorted(list_all_triangles(k4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def test_canon5(self, canon5):
        expected = {(A, B, C), (A, B, D), (A, C, D), (B, C, D), (A, B, E), (A, C, E), (B, C, E)}
        found = list_all_triangles(canon5)
        assert len(found) == 7
        assert set(found) == expected

    def test_canon7_count(self, canon7):
        assert len(list_all_triangles(canon7)) == 10

    def test_each_triangle_once(self):
        graph = gen_apollonian(120, seed=3)
        found = list_all_triangles(graph)
        assert len(found) == len(set(found))

    def test_work_is_linear(self):
        graph = gen_apollonian(300, seed=11)
        counter = OperationCounter()
        list_all_triangles(graph, counter)
        assert counter["triangles"] <= 16 * (graph.vertex_count + graph.edge_count)


class TestFacial:
    def test_face_triangle(self, canon5):
        assert is_facial(canon5, (A, B, D))

    def test_separating_triangle(self, canon5):
        assert not is_facial(canon5, (A, B, C))

    def test_single_triangle(self, triangle):
        assert is_facial(triangle, (0, 1, 2))

    def test_outer_face_is_facial(self, canon5):
        assert is_facial(canon5, (A, B, E))

    def test_not_a_triangle(self, canon5):
        with pytest.raises(EmbeddingError):
            is_facial(canon5, (A, D, E))


class TestSeparatingTriangles:
    def test_k4_has_none(self, k4):
        assert separating_triangles(k4) == []

    def test_octahedron_has_none(self, octahedron):
        assert separating_triangles(octahedron) == []

    def test_canon5(self, canon5):
        assert [t.corners for t in separating_triangles(canon5)] == [(A, B, C)]

    def test_canon7(self, canon7):
        assert {t.corners for t in separating_triangles(canon7)} == {(A, B, D), (A, B, E)}

    def test_records_carry_only_corners(self, canon7):
        for t in separating_triangles(canon7):
            assert (t.time, t.internal_angle, t.reference_edge, t.last_edge) == (-1, -1, -1, -1)

    def test_count_identity(self, canon7):
        assert triangle_count_identity(canon7) == (10, 8, 2)
        all_triangles, faces, separating = triangle_count_identity(gen_apollonian(80, seed=5))
        assert all_triangles == faces + separating

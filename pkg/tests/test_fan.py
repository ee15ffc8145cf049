import pytest

from helpers import GENERIC
from helpers import k_triangulations

CATALAN = {4: 2, 5: 5, 6: 14, 7: 42, 8: 132}


def worked_example():
    from pypfaff import EdgeSet
    return EdgeSet.boundary(8).union([(1, 4), (1, 5), (1, 6), (2, 4), (6, 8)])


def seeds(n, rng, count=None):
    found = k_triangulations(n, 1)
    return found if count is None else rng.sample(found, count)


class TestTriangulations(object):

    @pytest.mark.parametrize("n", sorted(CATALAN))
    def test_counts(self, n):
        from pypfaff import triangulations
        assert len(triangulations(n)) == CATALAN[n]

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_flips(self, n):
        from pypfaff import flips
        found = list(flips(n))
        assert len(found) == CATALAN[n] * (n - 3) // 2
        for T, other, removed, added in found:
            assert removed < added
            assert removed in T and removed not in other
            assert added in other and added not in T


class TestCrossingSigns(object):

    @pytest.mark.parametrize("delta, sign", [
        ((2, 4), 1),
        ((1, 6), 1),
        ((1, 4), -1),
        ((1, 5), 0),
        ((6, 8), 0),
    ])
    def test_worked_example(self, delta, sign):
        from pypfaff import crossing_sign
        assert crossing_sign(worked_example(), delta, (2, 6)) == sign

    def test_worked_example_g_vector(self):
        from pypfaff import g_vector
        g = g_vector(worked_example(), (2, 6))
        assert g.coords == (-1, 0, 1, 1, 0)
        assert len(g) == 5
        assert tuple(-g) == (1, 0, -1, -1, 0)

    def test_delta_must_be_a_diagonal(self):
        from pypfaff import PreconditionError
        from pypfaff import crossing_sign
        with pytest.raises(PreconditionError) as error:
            crossing_sign(worked_example(), (1, 2), (2, 6))
        assert "not a diagonal" in str(error.value)

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_boundary_labels_give_zero(self, n):
        from pypfaff import EdgeSet
        from pypfaff import g_vector
        for T in k_triangulations(n, 1):
            for e in EdgeSet.boundary(n):
                assert set(g_vector(T, e)) == {0}

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_seed_diagonals_and_their_opposites(self, n):
        from pypfaff import g_vector
        from pypfaff import parallel_label
        for T in k_triangulations(n, 1):
            diagonals = list(T.diagonals())
            for position, delta in enumerate(diagonals):
                unit = tuple(int(i == position) for i in range(len(diagonals)))
                assert g_vector(T, delta).coords == unit
                assert g_vector(T, parallel_label(n, delta)).coords == tuple(-x for x in unit)

    def test_not_a_triangulation(self):
        from pypfaff import EdgeSet
        from pypfaff import PreconditionError
        from pypfaff import g_vector
        with pytest.raises(PreconditionError) as error:
            g_vector(EdgeSet.boundary(6).with_edge((1, 4)), (2, 5))
        assert "not a triangulation" in str(error.value)

    def test_b_values(self):
        from pypfaff import EdgeSet
        from pypfaff import b_value
        assert b_value(5, (1, 3)) == 6
        assert b_value(8, (2, 6)) == 16
        for e in EdgeSet.complete(8):
            assert b_value(8, e.shift(8, 3)) == b_value(8, e)


class TestProjection(object):

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_projection_is_g_vector(self, n):
        from pypfaff import EdgeSet
        from pypfaff import g_vector
        from pypfaff import project
        from pypfaff import w_unit_in_v
        for T in k_triangulations(n, 1):
            for e in EdgeSet.complete(n):
                assert tuple(project(w_unit_in_v(n, e), T)) == g_vector(T, e).coords

    def test_projection_on_random_octagon_seeds(self, rng):
        from pypfaff import EdgeSet
        from pypfaff import g_vector
        from pypfaff import project
        from pypfaff import w_unit_in_v
        for T in seeds(8, rng, 10):
            for e in EdgeSet.complete(8).diagonals():
                assert tuple(project(w_unit_in_v(8, e), T)) == g_vector(T, e).coords

    def test_lineality_projects_to_zero(self):
        from pypfaff import lineality_basis
        from pypfaff import project
        T = k_triangulations(7, 1)[5]
        for star in lineality_basis(7):
            assert set(project(star, T)) == {0}

    def test_opposite_rays(self):
        from pypfaff import parallel_label
        from pypfaff import project
        from pypfaff import w_unit_in_v
        for T in k_triangulations(6, 1):
            for delta in T.diagonals():
                here = project(w_unit_in_v(6, delta), T)
                there = project(w_unit_in_v(6, parallel_label(6, delta)), T)
                assert there == [-x for x in here]

    def test_linear_on_a_face(self, rng):
        from pypfaff import WeightVector
        from pypfaff import g_vector
        from pypfaff import project
        T = k_triangulations(7, 1)[11]
        other = k_triangulations(7, 1)[30]
        weights = {e: rng.randint(1, 50) for e in other.diagonals()}
        v = WeightVector(7, weights, "w").to_v()
        expected = [sum(x * g_vector(T, e).coords[i] for e, x in weights.items()) for i in range(4)]
        assert project(v, T) == expected

    def test_outside_prevariety(self):
        from pypfaff import PreconditionError
        from pypfaff import WeightVector
        from pypfaff import project
        v = WeightVector(5, {(1, 3): 1, (2, 4): 1}, "w").to_v()
        with pytest.raises(PreconditionError) as error:
            project(v, k_triangulations(5, 1)[0])
        assert "crossing-free part" in str(error.value)


class TestFan(object):

    @pytest.mark.parametrize("n, rays", [(4, 2), (5, 5), (6, 9), (7, 14)])
    def test_sizes(self, n, rays):
        from pypfaff import build_fan
        for T in k_triangulations(n, 1)[:3]:
            F = build_fan(T)
            assert F.dim == n - 3
            assert len(F.rays) == rays
            assert len(F.cones) == CATALAN[n]
            assert all(len(cone) == n - 3 for cone in F.cones)

    def test_seed_cone_is_positive_orthant(self):
        from pypfaff import build_fan
        from pypfaff import triangulations
        T = k_triangulations(6, 1)[4]
        F = build_fan(T)
        index = triangulations(6).index(T)
        assert sorted(F.cone_rays(index), reverse=True) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    @pytest.mark.parametrize("n", [4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_every_seed_validates(self, n):
        from pypfaff import build_fan
        from pypfaff import validate_fan
        for T in k_triangulations(n, 1):
            report = validate_fan(build_fan(T), T)
            assert report.valid
            assert report.polytopal
            assert report.flips == CATALAN[n] * (n - 3) // 2

    @pytest.mark.parametrize("n, count", [(7, 4), (8, 1), pytest.param(8, 10, marks=pytest.mark.slow)])
    def test_larger_seeds_validate(self, n, count, rng):
        from pypfaff import build_fan
        from pypfaff import validate_fan
        for T in seeds(n, rng, count):
            report = validate_fan(build_fan(T), T)
            assert report.valid and report.polytopal
            for circuit in report.circuits:
                assert circuit.coefficients[circuit.removed] == "1"
                assert circuit.exchanged_positive
                assert circuit.rhs_positive

    def test_overlapping_cones_are_reported(self):
        from pypfaff import FanDescription
        from pypfaff import validate_fan
        F = FanDescription(2, [(1, 0), (0, 1), (1, 1)], [(0, 1), (1, 2)])
        report = validate_fan(F, k_triangulations(5, 1)[0])
        assert not report.valid
        assert not report.polytopal
        assert "rhs_sum" not in report.circuits[0]

    def test_degenerate_cone(self):
        from pypfaff import FanDescription
        from pypfaff import PreconditionError
        from pypfaff import validate_fan
        F = FanDescription(2, [(1, 0), (2, 0), (0, 1)], [(0, 1), (0, 2)])
        with pytest.raises(PreconditionError) as error:
            validate_fan(F, k_triangulations(5, 1)[0])
        assert "not full-dimensional" in str(error.value)

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_complete(self, n, rng):
        from pypfaff import build_fan
        from pypfaff import locate
        F = build_fan(rng.choice(k_triangulations(n, 1)))
        for _ in range(20):
            x = [rng.randint(-GENERIC, GENERIC) for _ in range(n - 3)]
            assert len(locate(F, x)) == 1

    def test_locate_cone_interior_and_ray(self):
        from pypfaff import build_fan
        from pypfaff import locate
        F = build_fan(k_triangulations(6, 1)[0])
        for index in range(len(F.cones)):
            centre = [sum(column) for column in zip(*F.cone_rays(index))]
            assert locate(F, centre) == [index]
        found = locate(F, F.rays[0])
        assert len(found) == sum(1 for cone in F.cones if 0 in cone)

    def test_locate_dimension(self):
        from pypfaff import PreconditionError
        from pypfaff import build_fan
        from pypfaff import locate
        with pytest.raises(PreconditionError):
            locate(build_fan(k_triangulations(5, 1)[0]), [1, 2, 3])


class TestPolytope(object):

    def test_pentagon(self):
        from pypfaff import associahedron_polytope
        P = associahedron_polytope(k_triangulations(5, 1)[2])
        assert P.dim == 2
        assert len(P.inequalities) == 5
        assert {rhs for _, rhs in P.inequalities} == {6}
        assert len(P.vertices) == 5

    @pytest.mark.parametrize("n, facets, vertices", [(6, 9, 14), (7, 14, 42)])
    def test_sizes(self, n, facets, vertices):
        from pypfaff import associahedron_polytope
        P = associahedron_polytope(k_triangulations(n, 1)[0])
        assert len(P.inequalities) == facets
        assert len(P.vertices) == vertices
        assert len(set(P.vertices)) == vertices

    def test_normals_and_parallel_facets(self):
        from pypfaff import associahedron_polytope
        from pypfaff import parallel_label
        for T in k_triangulations(6, 1):
            P = associahedron_polytope(T)
            normals = dict(zip(P.labels, (normal for normal, _ in P.inequalities)))
            assert all(set(normal) <= {-1, 0, 1} for normal in normals.values())
            for delta in T.diagonals():
                assert normals[parallel_label(6, delta)] == tuple(-x for x in normals[delta])

    def test_seed_vertex(self):
        from pypfaff import associahedron_polytope
        from pypfaff import b_value
        T = k_triangulations(7, 1)[3]
        P = associahedron_polytope(T)
        vertex = P.vertices[P.vertex_labels.index(T)]
        assert list(vertex) == [b_value(7, delta) for delta in T.diagonals()]

    def test_vertices_are_simple(self):
        from pypfaff import associahedron_polytope
        P = associahedron_polytope(k_triangulations(6, 1)[7])
        for vertex in P.vertices:
            slack = P.slack(vertex)
            assert sum(1 for s in slack if s == 0) == 3
            assert all(s >= 0 for s in slack)

    def test_off(self):
        from pypfaff import associahedron_polytope
        from pypfaff import to_off
        text = to_off(associahedron_polytope(k_triangulations(6, 1)[0]))
        lines = text.splitlines()
        assert lines[0] == "OFF"
        assert lines[1] == "14 9 0"
        faces = [list(map(int, line.split())) for line in lines[16:]]
        assert sorted(face[0] for face in faces) == [4, 4, 4, 5, 5, 5, 5, 5, 5]
        assert all(len(face) == face[0] + 1 for face in faces)

    def test_off_needs_three_dimensions(self):
        from pypfaff import PreconditionError
        from pypfaff import associahedron_polytope
        from pypfaff import to_off
        with pytest.raises(PreconditionError) as error:
            to_off(associahedron_polytope(k_triangulations(5, 1)[0]))
        assert "three-dimensional" in str(error.value)

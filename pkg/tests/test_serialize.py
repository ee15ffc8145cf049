import json

import pytest

from helpers import k_triangulations


class TestLoads(object):

    def test_reports_position(self):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import loads
        with pytest.raises(MalformedInput) as error:
            loads('{\n  "n": 5,\n  "edges": [[1, 2]\n}')
        assert error.value.line == 4
        assert "line 4" in str(error.value)

    def test_is_a_precondition_error(self):
        from pypfaff import PreconditionError
        from pypfaff.serialize import loads
        with pytest.raises(PreconditionError) as error:
            loads("{")
        assert error.value.line == 1
        assert error.value.column == 2

    def test_compact_line(self):
        from pypfaff.serialize import dumps_line
        assert dumps_line({"n": 4, "edges": [[1, 3]]}) == '{"n":4,"edges":[[1,3]]}'


class TestEdgeSets(object):

    def test_to_json(self):
        from pypfaff import EdgeSet
        from pypfaff.serialize import edge_set_to_json
        G = EdgeSet(5, [(3, 1), (1, 2)])
        assert edge_set_to_json(G) == {"n": 5, "edges": [[1, 2], [1, 3]]}
        assert edge_set_to_json(G, index_base=0) == {"n": 5, "edges": [[0, 1], [0, 2]]}

    def test_from_json_accepts_both_edge_forms(self):
        from pypfaff import EdgeSet
        from pypfaff.serialize import edge_set_from_json
        G = edge_set_from_json({"n": 5, "edges": [[0, 1], "2,4"]}, index_base=0)
        assert G == EdgeSet(5, [(1, 2), (3, 5)])

    def test_triangulation_through_text(self):
        from pypfaff.serialize import dumps
        from pypfaff.serialize import edge_set_from_json
        from pypfaff.serialize import edge_set_to_json
        from pypfaff.serialize import loads
        T = k_triangulations(7, 2)[3]
        assert edge_set_from_json(loads(dumps(edge_set_to_json(T)))) == T

    @pytest.mark.parametrize("data, message", [
        ({"n": 5}, "missing field 'edges'"),
        ({"edges": []}, "missing field 'n'"),
        ({"n": 4, "edges": [[1, 5]]}, "4-gon"),
        ({"n": 4, "edges": [[2, 2]]}, "distinct"),
        ({"n": 4, "edges": ["1;2"]}, "'i,j'"),
    ])
    def test_malformed(self, data, message):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import edge_set_from_json
        with pytest.raises(MalformedInput) as error:
            edge_set_from_json(data)
        assert message in str(error.value)


class TestWeightVectors(object):

    def test_to_json(self):
        from fractions import Fraction

        from pypfaff import WeightVector
        from pypfaff.serialize import weight_vector_to_json
        w = WeightVector(5, {(1, 3): Fraction(1, 2), (2, 4): -3, (2, 5): 0}, "w")
        assert weight_vector_to_json(w) == {"n": 5, "basis": "w", "entries": {"1,3": "1/2", "2,4": "-3"}}

    def test_from_json(self):
        from fractions import Fraction

        from pypfaff.serialize import weight_vector_from_json
        v = weight_vector_from_json({"n": 4, "entries": {"0,2": "2/3", "1,3": 4}}, index_base=0)
        assert v.basis == "v"
        assert v[(1, 3)] == Fraction(2, 3)
        assert v[(2, 4)] == 4

    @pytest.mark.parametrize("data, message", [
        ({"n": 4, "entries": [["1,2", 1]]}, "object keyed by"),
        ({"n": 4, "entries": {"1,2": "x"}}, ""),
        ({"n": 4, "basis": "u", "entries": {}}, "basis"),
    ])
    def test_malformed(self, data, message):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import weight_vector_from_json
        with pytest.raises(MalformedInput) as error:
            weight_vector_from_json(data)
        assert message in str(error.value)


class TestMatrices(object):

    def test_tropical_matrix(self):
        from pypfaff.serialize import tropical_matrix_from_json
        from pypfaff.serialize import tropical_matrix_to_json
        M = tropical_matrix_from_json({"rows": 2, "cols": 3, "entries": [[0, "-inf", "1/2"], [3, 4, 5]]})
        assert M.rows == 2 and M.cols == 3
        assert M[0, 1].is_bottom
        assert tropical_matrix_to_json(M)["entries"] == [["0", "-inf", "1/2"], ["3", "4", "5"]]

    def test_tropical_shape_mismatch(self):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import tropical_matrix_from_json
        with pytest.raises(MalformedInput) as error:
            tropical_matrix_from_json({"rows": 3, "entries": [[0, 1], [1, 0]]})
        assert "2x2" in str(error.value)

    def test_ragged_tropical_matrix(self):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import tropical_matrix_from_json
        with pytest.raises(MalformedInput) as error:
            tropical_matrix_from_json({"entries": [[0, 1], [1]]})
        assert "equal length" in str(error.value)

    def test_antisymmetric(self):
        from pypfaff import pfaffian
        from pypfaff.serialize import antisymmetric_from_json
        from pypfaff.serialize import antisymmetric_to_json
        data = {"n": 4, "upper": {"1,2": 2, "1,3": 3, "1,4": 5, "2,3": 7, "2,4": 11, "3,4": 13}}
        A = antisymmetric_from_json(data)
        assert pfaffian(A) == 2 * 13 - 3 * 11 + 5 * 7
        assert antisymmetric_to_json(A, index_base=0)["upper"]["0,1"] == "2"

    def test_band(self):
        from pypfaff.serialize import band_from_json
        known, n, k = band_from_json({"n": 4, "k": 1, "known": {"1,2": 2, "1,3": "1/2"}})
        assert (n, k) == (4, 1)
        assert known == {(1, 2): "2", (1, 3): "1/2"}

    @pytest.mark.parametrize("data, message", [
        ({"n": 4, "k": 1, "known": [["1,2", 2]]}, "object keyed by"),
        ({"n": 4, "k": "1", "known": {}}, "integers"),
        ({"n": 4.0, "k": 1, "known": {}}, "integers"),
        ({"n": 4, "k": True, "known": {}}, "integers"),
        ({"n": 4, "known": {}}, "missing field 'k'"),
    ])
    def test_malformed_band(self, data, message):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import band_from_json
        with pytest.raises(MalformedInput) as error:
            band_from_json(data)
        assert message in str(error.value)


class TestDescriptions(object):

    def test_cone(self):
        from pypfaff import grobner_cone
        from pypfaff.serialize import cone_to_json
        data = json.loads(json.dumps(cone_to_json(grobner_cone(7, 2))))
        assert (data["n"], data["k"]) == (7, 2)
        assert len(data["facets"]) == 14
        assert len(data["rays"]) == 14
        assert len(data["lineality"]) == 7
        assert {f["kind"] for f in data["facets"]} <= {"long", "short"}

    def test_fan(self):
        from pypfaff import build_fan
        from pypfaff.serialize import fan_from_json
        from pypfaff.serialize import fan_to_json
        T = k_triangulations(6, 1)[2]
        F = build_fan(T)
        data = json.loads(json.dumps(fan_to_json(F, T, index_base=0)))
        assert data["dim"] == 3
        assert len(data["labels"]) == 9
        G, seed = fan_from_json(data, index_base=0)
        assert seed == T
        assert (G.rays, G.cones, G.labels) == (F.rays, F.cones, F.labels)

    def test_fan_missing_seed(self):
        from pypfaff.serialize import MalformedInput
        from pypfaff.serialize import fan_from_json
        with pytest.raises(MalformedInput) as error:
            fan_from_json({"dim": 2, "rays": [], "cones": []})
        assert "seed" in str(error.value)

    def test_polytope(self):
        from pypfaff import associahedron_polytope
        from pypfaff.serialize import polytope_from_json
        from pypfaff.serialize import polytope_to_json
        P = associahedron_polytope(k_triangulations(5, 1)[0])
        data = polytope_to_json(P)
        assert {row["rhs"] for row in data["inequalities"]} == {"6"}
        assert len(data["vertices"]) == 5
        assert all(len(vertex["triangulation"]) == 2 for vertex in data["vertices"])
        Q = polytope_from_json(data)
        assert Q.inequalities == P.inequalities
        assert Q.labels == P.labels

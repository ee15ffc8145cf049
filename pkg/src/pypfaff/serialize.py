"""
JSON forms of the library's values.

Rationals are written as strings ``"p"`` or ``"p/q"``, bottom as ``"-inf"``
and edges as ``"i,j"`` keys or ``[i, j]`` pairs. Vertex labels are shifted by
``index_base`` on the way in and out, so ``index_base=0`` reads and writes
labels ``0..n-1``.
"""
import json
import logging

from ._linalg import format_fraction
from .algebra import AntisymmetricMatrix
from .combinatorics import Edge
from .combinatorics import EdgeSet
from .coords import WeightVector
from .exceptions import PreconditionError
from .fan import FanDescription
from .fan import PolytopeH
from .tropical import TropicalMatrix

logger = logging.getLogger(__name__)


class MalformedInput(PreconditionError):
    """Raised for input that is not valid JSON or does not have the expected fields."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise MalformedInput(f"malformed JSON: {error.msg}", error.lineno, error.colno) from None


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=False)


def dumps_line(data):
    return json.dumps(data, separators=(",", ":"))


def _field(data, name):
    try:
        return data[name]
    except (KeyError, TypeError):
        raise MalformedInput(f"missing field {name!r}") from None


def _shift_in(label, index_base):
    return int(label) - index_base + 1


def _shift_out(label, index_base):
    return int(label) + index_base - 1


def edge_from_json(value, index_base=1):
    try:
        a, b = Edge.parse(value) if isinstance(value, str) else value
        return Edge.of(_shift_in(a, index_base), _shift_in(b, index_base))
    except (TypeError, ValueError) as error:
        raise MalformedInput(f"bad edge {value!r}: {error}") from None


def edge_key(edge, index_base=1):
    return f"{_shift_out(edge.i, index_base)},{_shift_out(edge.j, index_base)}"


def edge_set_to_json(G, index_base=1):
    return {"n": G.n, "edges": [[_shift_out(x, index_base) for x in e] for e in G]}


def edge_set_from_json(data, index_base=1):
    n = _field(data, "n")
    try:
        return EdgeSet(n, [edge_from_json(e, index_base) for e in _field(data, "edges")])
    except ValueError as error:
        raise MalformedInput(str(error)) from None


def weight_vector_to_json(v, index_base=1):
    return {
        "n": v.n,
        "basis": v.basis,
        "entries": {edge_key(e, index_base): format_fraction(x) for e, x in v.items()},
    }


def weight_vector_from_json(data, index_base=1):
    entries = _field(data, "entries")
    if not isinstance(entries, dict):
        raise MalformedInput("entries must be an object keyed by 'i,j'")
    try:
        return WeightVector(
            _field(data, "n"),
            {edge_from_json(key, index_base): str(value) for key, value in entries.items()},
            data.get("basis", "v"),
        )
    except ValueError as error:
        raise MalformedInput(str(error)) from None


def tropical_matrix_to_json(M):
    return {"rows": M.rows, "cols": M.cols, "entries": [[str(x) for x in row] for row in M.entries]}


def tropical_matrix_from_json(data):
    entries = _field(data, "entries")
    try:
        M = TropicalMatrix([[str(x) for x in row] for row in entries])
    except (TypeError, ValueError) as error:
        raise MalformedInput(f"bad tropical matrix: {error}") from None
    if (M.rows, M.cols) != (data.get("rows", M.rows), data.get("cols", M.cols)):
        raise MalformedInput(f"declared shape does not match the {M.rows}x{M.cols} entries")
    return M


def antisymmetric_to_json(A, index_base=1):
    return {"n": A.n, "upper": {edge_key(e, index_base): format_fraction(x) for e, x in sorted(A.upper.items())}}


def antisymmetric_from_json(data, index_base=1):
    upper = _field(data, "upper")
    try:
        return AntisymmetricMatrix(
            _field(data, "n"),
            {tuple(edge_from_json(key, index_base)): str(value) for key, value in upper.items()},
        )
    except (AttributeError, ValueError) as error:
        raise MalformedInput(f"bad antisymmetric matrix: {error}") from None


def band_from_json(data, index_base=1):
    """``{"n": .., "k": .., "known": {"i,j": "p/q"}}`` as ``(known, n, k)``."""
    known = _field(data, "known")
    if not isinstance(known, dict):
        raise MalformedInput(f"known must be an object keyed by 'i,j', not {type(known).__name__}")
    n, k = _field(data, "n"), _field(data, "k")
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (n, k)):
        raise MalformedInput(f"n and k must be integers, got n={n!r}, k={k!r}")
    return {edge_from_json(key, index_base): str(value) for key, value in known.items()}, n, k


def cone_to_json(cone, index_base=1):
    def form(f):
        if f.kind == "cycle":
            label = [_shift_out(x, index_base) for x in f.label]
        else:
            label = edge_key(f.label, index_base)
        return {
            "label": label,
            "kind": f.kind,
            "coeffs": {edge_key(e, index_base): format_fraction(c) for e, c in sorted(f.coeffs.items())},
        }

    return {
        "n": cone.n,
        "k": cone.k,
        "lineality": [weight_vector_to_json(v, index_base) for v in cone.lineality],
        "rays": [
            {"label": edge_key(r.label, index_base), "vector": weight_vector_to_json(r.vector, index_base)}
            for r in cone.rays
        ],
        "facets": [form(f) for f in cone.facets],
    }


def fan_to_json(F, T, index_base=1):
    return {
        "seed": edge_set_to_json(T, index_base),
        "dim": F.dim,
        "rays": [list(ray) for ray in F.rays],
        "labels": [edge_key(label, index_base) for label in F.labels],
        "cones": [list(cone) for cone in F.cones],
    }


def fan_from_json(data, index_base=1):
    T = edge_set_from_json(_field(data, "seed"), index_base)
    labels = [edge_from_json(label, index_base) for label in data.get("labels", [])] or None
    try:
        F = FanDescription(_field(data, "dim"), _field(data, "rays"), _field(data, "cones"), labels)
    except (TypeError, ValueError) as error:
        raise MalformedInput(f"bad fan: {error}") from None
    return F, T


def polytope_to_json(P, index_base=1):
    return {
        "dim": P.dim,
        "inequalities": [
            {"label": edge_key(label, index_base), "normal": list(normal), "rhs": format_fraction(rhs)}
            for label, (normal, rhs) in zip(P.labels, P.inequalities)
        ],
        "vertices": [
            {
                "triangulation": [edge_key(e, index_base) for e in T.diagonals()],
                "point": [format_fraction(x) for x in vertex],
            }
            for T, vertex in zip(P.vertex_labels, P.vertices)
        ],
    }


def polytope_from_json(data, index_base=1):
    inequalities = _field(data, "inequalities")
    return PolytopeH(
        _field(data, "dim"),
        [(_field(row, "normal"), str(_field(row, "rhs"))) for row in inequalities],
        [edge_from_json(_field(row, "label"), index_base) for row in inequalities],
    )


__all__ = [
    "MalformedInput",
    "antisymmetric_from_json",
    "antisymmetric_to_json",
    "band_from_json",
    "cone_to_json",
    "dumps",
    "dumps_line",
    "edge_set_from_json",
    "edge_set_to_json",
    "fan_from_json",
    "fan_to_json",
    "loads",
    "polytope_from_json",
    "polytope_to_json",
    "tropical_matrix_from_json",
    "tropical_matrix_to_json",
    "weight_vector_from_json",
    "weight_vector_to_json",
]

"""
The g-vector fan of a seed triangulation and its polytopal realization.

Everything here is for ordinary triangulations (``k = 1``). A pair ``{a, b}``
used as a label of a ray stands for the chord through the midpoints of the
boundary edges ``{a, a+1}`` and ``{b, b+1}``; it cuts off the vertices
``a+1..b``.
"""
import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import networkx as nx
from munch import munchify

from . import _linalg
from ._linalg import format_fraction
from ._linalg import to_fraction
from .combinatorics import Edge
from .combinatorics import EdgeSet
from .combinatorics import enumerate_k_triangulations
from .combinatorics import flip
from .combinatorics import is_k_triangulation
from .combinatorics import quadrilateral
from .coords import lineality_basis
from .coords import w_unit_in_v
from .exceptions import InternalError
from .exceptions import PreconditionError
from .tropical import in_pv_plus

logger = logging.getLogger(__name__)


def _triangulation_validate(T):
    if T.n < 4:
        raise PreconditionError(f"fans need n >= 4, got n={T.n}")
    if not is_k_triangulation(T, 1):
        raise PreconditionError(f"{T!r} is not a triangulation")


def triangulations(n):
    return list(enumerate_k_triangulations(n, 1))


def flips(n):
    """
    Pairs of triangulations related by one flip, each pair once.

    Yields ``(T, T', removed, added)`` with ``removed < added``.
    """
    for T in triangulations(n):
        for delta in T.diagonals():
            other = flip(T, delta)
            added = next(e for e in other if e not in T)
            if delta < added:
                yield T, other, delta, added


def _cut_side(e):
    return set(range(e.i + 1, e.j + 1))


def crossing_sign(T, delta, e):
    """
    Sign of the diagonal ``delta`` of ``T`` against the label ``e``.

    With the quadrilateral of ``delta`` written ``(p, r, q, s)``, the sign is
    ``+1`` when the chord of ``e`` crosses the sides ``{p, r}`` and
    ``{q, s}``, ``-1`` when it crosses ``{r, q}`` and ``{s, p}``, and ``0``
    otherwise.
    """
    delta = Edge.of(*delta)
    if delta not in T.diagonals():
        raise PreconditionError(f"{{{delta}}} is not a diagonal of the triangulation")
    e = Edge.of(*e).validate(T.n)
    p, r, q, s = quadrilateral(T, delta)
    side = _cut_side(e)

    def crossed(x, y):
        return (x in side) != (y in side)

    pattern = (crossed(p, r), crossed(r, q), crossed(q, s), crossed(s, p))
    if pattern == (True, False, True, False):
        return 1
    if pattern == (False, True, False, True):
        return -1
    return 0


@dataclass(frozen=True)
class GVector:
    seed: EdgeSet
    coords: Tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __neg__(self):
        return GVector(self.seed, tuple(-x for x in self.coords))


def _g_coords(T, e):
    return tuple(crossing_sign(T, delta, e) for delta in T.diagonals())


def g_vector(T, e):
    _triangulation_validate(T)
    return GVector(T, _g_coords(T, e))


@functools.lru_cache(maxsize=None)
def _projection_inverse(T):
    n = T.n
    edges = list(T)
    generators = [w_unit_in_v(n, delta) for delta in T.diagonals()] + lineality_basis(n)
    columns = [[g[e] for e in edges] for g in generators]
    rows = [list(row) for row in zip(*columns)]
    if _linalg.rank(rows) != len(edges):
        raise InternalError(f"projected generators are not a basis for {T!r}")
    logger.debug("cached projection basis for %r", T)
    return _linalg.inverse(rows)


def project(v, T):
    """
    Coordinates of ``v`` restricted to the edges of ``T``, in the basis of the
    projected W-units of its diagonals, after dropping the lineality part.
    """
    _triangulation_validate(T)
    v = v.to_v()
    if v.n != T.n:
        raise PreconditionError(f"vector on n={v.n} and triangulation on n={T.n}")
    if not in_pv_plus(v, 1):
        raise PreconditionError("the vector is not in the crossing-free part of the prevariety")
    inverse = _projection_inverse(T)
    solution = _linalg.mat_vec(inverse, [v[e] for e in T])
    return solution[:len(T.diagonals())]


class FanDescription(object):
    """Simplicial fan: integer rays with edge labels and cones as sorted ray indices."""

    def __init__(self, dim, rays, cones, labels=None):
        self.dim = dim
        self.rays = [tuple(int(x) for x in ray) for ray in rays]
        self.cones = [tuple(sorted(cone)) for cone in cones]
        self.labels = list(labels) if labels is not None else [None] * len(self.rays)

    def cone_rays(self, index):
        return [self.rays[i] for i in self.cones[index]]

    def __repr__(self):
        return "FanDescription(dim=%d, %d rays, %d cones)" % (self.dim, len(self.rays), len(self.cones))


def b_value(n, e):
    i, j = Edge.of(*e)
    return (j - i) * (n + i - j)


def build_fan(T):
    _triangulation_validate(T)
    n = T.n
    normals = {e: _g_coords(T, e) for e in EdgeSet.complete(n).diagonals()}
    labels = []
    rays = []
    for e, ray in normals.items():
        if ray not in rays:
            rays.append(ray)
            labels.append(e)
    position = {ray: index for index, ray in enumerate(rays)}
    cones = [
        [position[normals[delta]] for delta in other.diagonals()]
        for other in triangulations(n)
    ]
    logger.debug("fan of %r: %d rays, %d cones", T, len(rays), len(cones))
    return FanDescription(n - 3, rays, cones, labels)


def _circuit(F, first, second):
    """The linear dependence among the rays of two adjacent cones, normalized on the removed ray."""
    union = sorted(set(F.cones[first]) | set(F.cones[second]))
    columns = [F.rays[i] for i in union]
    rows = [list(row) for row in zip(*columns)]
    kernel = _linalg.nullspace(rows)
    if len(kernel) != 1:
        raise PreconditionError(f"not a circuit: cones {first} and {second} have a {len(kernel)}-dimensional dependence")
    (removed,) = set(F.cones[first]) - set(F.cones[second])
    (added,) = set(F.cones[second]) - set(F.cones[first])
    coefficients = dict(zip(union, kernel[0]))
    if not coefficients[removed] or not coefficients[added]:
        raise PreconditionError(f"not a circuit: the exchanged rays of cones {first} and {second} are not both involved")
    scale = 1 / coefficients[removed]
    return removed, added, {i: c * scale for i, c in coefficients.items() if c}


def _adjacent_cones(F):
    for first, second in itertools.combinations(range(len(F.cones)), 2):
        if len(set(F.cones[first]) & set(F.cones[second])) == F.dim - 1:
            yield first, second


def validate_fan(F, T):
    """
    Check every pair of adjacent cones of ``F`` through its unique circuit.

    Returns
    -------
    Munch
        One entry per flip with the circuit coefficients, whether both
        exchanged rays have positive coefficients, and the circuit sum of the
        right-hand sides ``b_ij = (j-i)(n+i-j)`` attached to the ray labels.
    """
    n = T.n
    for index in range(len(F.cones)):
        if _linalg.rank(F.cone_rays(index)) != F.dim:
            raise PreconditionError(f"cone {index} is not full-dimensional and simplicial")
    circuits = []
    for first, second in _adjacent_cones(F):
        removed, added, coefficients = _circuit(F, first, second)
        exchanged_positive = coefficients[added] > 0
        circuit = {
            "cones": [first, second],
            "removed": str(F.labels[removed]),
            "added": str(F.labels[added]),
            "coefficients": {str(F.labels[i]): format_fraction(c) for i, c in sorted(coefficients.items())},
            "exchanged_positive": exchanged_positive,
        }
        if all(label is not None for label in F.labels):
            total = sum((c * b_value(n, F.labels[i]) for i, c in coefficients.items()), Fraction(0))
            circuit["rhs_sum"] = format_fraction(total)
            circuit["rhs_positive"] = total > 0
        circuits.append(circuit)
    valid = all(c["exchanged_positive"] for c in circuits)
    polytopal = all(c.get("rhs_positive", False) for c in circuits)
    logger.debug("validated %d circuits, valid=%s, polytopal=%s", len(circuits), valid, polytopal)
    return munchify({
        "n": n,
        "dim": F.dim,
        "rays": len(F.rays),
        "cones": len(F.cones),
        "flips": len(circuits),
        "valid": valid,
        "polytopal": polytopal,
        "circuits": circuits,
    })


def locate(F, x):
    """Indices of the cones of ``F`` that contain the direction ``x``."""
    x = [to_fraction(value) for value in x]
    if len(x) != F.dim:
        raise PreconditionError(f"direction of length {len(x)} in a fan of dimension {F.dim}")
    found = []
    for index in range(len(F.cones)):
        rows = [list(row) for row in zip(*F.cone_rays(index))]
        if all(c >= 0 for c in _linalg.solve(rows, x)):
            found.append(index)
    return found


class PolytopeH(object):
    """
    Inequalities ``normal . x <= rhs`` with labels, and the vertices found for them.

    ``vertex_labels[i]`` is the triangulation whose cone is the normal cone of
    ``vertices[i]``.
    """

    def __init__(self, dim, inequalities, labels=None, vertices=(), vertex_labels=()):
        self.dim = dim
        self.inequalities = [(tuple(int(x) for x in normal), to_fraction(rhs)) for normal, rhs in inequalities]
        self.labels = list(labels) if labels is not None else [None] * len(self.inequalities)
        self.vertices = [tuple(to_fraction(x) for x in vertex) for vertex in vertices]
        self.vertex_labels = list(vertex_labels)

    def slack(self, point):
        return [rhs - sum((a * x for a, x in zip(normal, point)), Fraction(0)) for normal, rhs in self.inequalities]

    def __repr__(self):
        return "PolytopeH(dim=%d, %d inequalities, %d vertices)" % (
            self.dim, len(self.inequalities), len(self.vertices)
        )


def parallel_label(n, e):
    """The label whose ray is opposite to that of the diagonal ``e`` of the seed."""
    a, b = Edge.of(*e)
    return Edge.of((a - 2) % n + 1, (b - 2) % n + 1)


def associahedron_polytope(T):
    """
    The polytope with normal fan ``build_fan(T)`` and right-hand sides ``b_ij = (j-i)(n+i-j)``.

    One vertex per triangulation, found from its tight inequalities. Every
    vertex must satisfy every other inequality strictly, and each diagonal of
    ``T`` must give a pair of parallel facets.
    """
    _triangulation_validate(T)
    n = T.n
    labels = list(EdgeSet.complete(n).diagonals())
    normals = {e: _g_coords(T, e) for e in labels}
    for delta in T.diagonals():
        if normals[parallel_label(n, delta)] != tuple(-x for x in normals[delta]):
            raise InternalError(f"facets of {{{delta}}} and {{{parallel_label(n, delta)}}} are not parallel")
    polytope = PolytopeH(n - 3, [(normals[e], b_value(n, e)) for e in labels], labels)
    for other in triangulations(n):
        tight = list(other.diagonals())
        vertex = _linalg.solve([list(normals[e]) for e in tight], [b_value(n, e) for e in tight])
        for label, slack in zip(labels, polytope.slack(vertex)):
            if (label in tight and slack != 0) or (label not in tight and slack <= 0):
                raise InternalError(f"vertex of {other!r} has slack {slack} on {{{label}}}")
        polytope.vertices.append(tuple(vertex))
        polytope.vertex_labels.append(other)
    logger.debug("polytope for %r: %d facets, %d vertices", T, len(labels), len(polytope.vertices))
    return polytope


def _off_number(x):
    x = to_fraction(x)
    return str(x.numerator) if x.denominator == 1 else repr(float(x))


def _facet_cycle(polytope, label):
    members = [i for i, other in enumerate(polytope.vertex_labels) if label in other]
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for i, j in itertools.combinations(members, 2):
        shared = set(polytope.vertex_labels[i]) & set(polytope.vertex_labels[j])
        if len(shared) == len(polytope.vertex_labels[i]) - 1:
            graph.add_edge(i, j)
    return [u for u, _ in nx.find_cycle(graph, source=members[0])]


def to_off(polytope):
    """OFF text for a three-dimensional polytope, facets listed as vertex cycles."""
    if polytope.dim != 3:
        raise PreconditionError(f"OFF output needs a three-dimensional polytope, got dimension {polytope.dim}")
    faces = [_facet_cycle(polytope, label) for label in polytope.labels]
    lines = ["OFF", f"{len(polytope.vertices)} {len(faces)} 0"]
    lines += [" ".join(_off_number(x) for x in vertex) for vertex in polytope.vertices]
    lines += [" ".join(str(x) for x in [len(face)] + face) for face in faces]
    return "\n".join(lines) + "\n"


__all__ = [
    "FanDescription",
    "GVector",
    "PolytopeH",
    "associahedron_polytope",
    "b_value",
    "build_fan",
    "crossing_sign",
    "flips",
    "g_vector",
    "locate",
    "parallel_label",
    "project",
    "to_off",
    "triangulations",
    "validate_fan",
]

"""
Weight vectors on the edges of the n-gon and the cones they live in.

A weight vector is stored in one of two bases. In the ``v`` basis the entry
``{a, b}`` is a coordinate of the ambient space. In the ``w`` basis the entry
``{i, j}`` counts towards every ``v_{a,b}`` whose pair ``a, b`` it separates;
:func:`separation_vector` and :func:`inverse_separation` move between the two.
"""
import functools
import itertools
import logging
from fractions import Fraction

from ._linalg import format_signed
from ._linalg import to_fraction
from .combinatorics import Edge
from .combinatorics import EdgeSet
from .combinatorics import crossing_matching
from .combinatorics import matchings
from .exceptions import ConeMembershipError
from .exceptions import InternalError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

BASES = ("v", "w")


def _edge_key(key):
    if isinstance(key, str):
        return Edge.parse(key)
    return Edge.of(*key)


class WeightVector(object):
    """
    An exact rational vector indexed by the edges of the n-gon.

    Absent entries are zero and zeros are never stored.
    """

    def __init__(self, n, entries=None, basis="v"):
        if basis not in BASES:
            raise ValueError(f"basis must be 'v' or 'w', not {basis!r}")
        if n < 2:
            raise ValueError(f"weight vectors need n >= 2, got {n}")
        self.n = int(n)
        self.basis = basis
        self.entries = {}
        for key, value in dict(entries or {}).items():
            edge = _edge_key(key).validate(self.n)
            value = to_fraction(value)
            if value:
                self.entries[edge] = self.entries.get(edge, Fraction(0)) + value
        self.entries = {edge: value for edge, value in sorted(self.entries.items()) if value}

    @classmethod
    def zero(cls, n, basis="v"):
        return cls(n, basis=basis)

    @classmethod
    def unit(cls, n, edge, basis="v", value=1):
        return cls(n, {Edge.of(*edge): value}, basis=basis)

    def __getitem__(self, edge):
        return self.entries.get(_edge_key(edge), Fraction(0))

    def items(self):
        return self.entries.items()

    def support(self):
        return EdgeSet(self.n, self.entries)

    def dense(self):
        """Entries of every edge in lexicographic order."""
        return [self[e] for e in EdgeSet.complete(self.n)]

    def _check_compatible(self, other):
        if not isinstance(other, WeightVector):
            raise TypeError(f"cannot combine a weight vector with {type(other).__name__}")
        if (self.n, self.basis) != (other.n, other.basis):
            raise ValueError(
                "weight vectors live in different spaces: n=%d/%s and n=%d/%s" % (self.n, self.basis, other.n, other.basis)
            )

    def __add__(self, other):
        self._check_compatible(other)
        entries = dict(self.entries)
        for edge, value in other.items():
            entries[edge] = entries.get(edge, Fraction(0)) + value
        return WeightVector(self.n, entries, self.basis)

    def __neg__(self):
        return WeightVector(self.n, {e: -x for e, x in self.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = to_fraction(scalar)
        return WeightVector(self.n, {e: scalar * x for e, x in self.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return (self.n, self.basis, self.entries) == (other.n, other.basis, other.entries)

    def __hash__(self):
        return hash((self.n, self.basis, tuple(self.entries.items())))

    def __repr__(self):
        body = ", ".join(f"{e}: {x}" for e, x in self.items())
        return f"WeightVector(n={self.n}, basis={self.basis!r}, {{{body}}})"

    def to_v(self):
        return self if self.basis == "v" else separation_vector(self)

    def to_w(self):
        return self if self.basis == "w" else inverse_separation(self)


def _separates(edge, a, b):
    """Whether ``edge`` separates sides ``a < b``: exactly one endpoint in ``[a, b-1]``."""
    return (a <= edge.i < b) != (a <= edge.j < b)


def separation_vector(w):
    if w.basis != "w":
        raise PreconditionError("separation_vector expects a vector in the w basis")
    n = w.n
    entries = {}
    for side in EdgeSet.complete(n):
        total = sum((x for edge, x in w.items() if _separates(edge, side.i, side.j)), Fraction(0))
        if total:
            entries[side] = total
    return WeightVector(n, entries, "v")


def _cyclic_entry(v, a, b):
    n = v.n
    a, b = (a - 1) % n + 1, (b - 1) % n + 1
    if a == b:
        return Fraction(0)
    return v[(a, b)]


def inverse_separation(v):
    if v.basis != "v":
        raise PreconditionError("inverse_separation expects a vector in the v basis")
    entries = {}
    for edge in EdgeSet.complete(v.n):
        a, b = edge
        twice = (_cyclic_entry(v, a, b) + _cyclic_entry(v, a + 1, b + 1)
                 - _cyclic_entry(v, a, b + 1) - _cyclic_entry(v, a + 1, b))
        if twice:
            entries[edge] = twice / 2
    return WeightVector(v.n, entries, "w")


def w_unit_in_v(n, edge):
    return separation_vector(WeightVector.unit(n, edge, "w"))


def lineality_basis(n):
    """Vertex-star indicators in the v basis; they span the space of vectors with w on consecutive edges only."""
    return [
        WeightVector(n, {Edge.of(x, y): 1 for y in range(1, n + 1) if y != x}, "v")
        for x in range(1, n + 1)
    ]


def matching_weight(v, M):
    v = v.to_v()
    return sum((v[pair] for pair in M), Fraction(0))


def four_point_violations(v):
    """
    Four-point inequalities that fail at ``v``.

    Returns pairs ``(quadruple, matching)`` where the non-crossing ``matching``
    of the quadruple outweighs its crossing one.
    """
    v = v.to_v()
    violations = []
    for a, b, c, d in itertools.combinations(range(1, v.n + 1), 4):
        crossing = v[(a, c)] + v[(b, d)]
        for first, second in (((a, b), (c, d)), ((a, d), (b, c))):
            if v[first] + v[second] > crossing:
                violations.append(((a, b, c, d), (Edge(*first), Edge(*second))))
    return violations


def is_fp_positive(v):
    v = v.to_v()
    w = inverse_separation(v)
    by_separation = all(x >= 0 for edge, x in w.items() if not edge.is_consecutive(v.n))
    by_four_points = not four_point_violations(v)
    if by_separation != by_four_points:
        raise InternalError(f"four-point and separation tests disagree on {v!r}")
    return by_separation


def monotone_matching(v, U):
    """Whether the crossing matching of ``U`` has maximum ``v``-weight."""
    best = max(matching_weight(v, M) for M in matchings(U))
    return matching_weight(v, crossing_matching(U)) == best


class LinearForm(object):
    """
    A linear form on weight vectors, with coefficients in the v basis.

    ``kind`` is ``long``, ``short`` or ``cycle``; ``label`` is the edge of a
    facet or the vertex sequence of a cycle.
    """

    def __init__(self, n, coeffs, label, kind):
        self.n = n
        self.coeffs = {}
        for edge, value in coeffs.items():
            value = to_fraction(value)
            if value:
                self.coeffs[Edge.of(*edge)] = value
        self.label = label
        self.kind = kind

    def __call__(self, v):
        v = v.to_v()
        if v.n != self.n:
            raise ValueError(f"form on n={self.n} evaluated on a vector with n={v.n}")
        return sum((c * v[e] for e, c in self.coeffs.items()), Fraction(0))

    @property
    def key(self):
        return frozenset(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    def __repr__(self):
        terms = " ".join("%s*v%s" % (format_signed(c), e) for e, c in sorted(self.coeffs.items()))
        return f"LinearForm({self.kind} {self.label}: {terms})"


def _w_coordinate(n, edge):
    """Coefficients, in the v basis, of the form ``v -> w_edge``."""
    a, b = edge
    coeffs = {}
    for (x, y), sign in (((a, b), 1), ((a + 1, b + 1), 1), ((a, b + 1), -1), ((a + 1, b), -1)):
        x, y = (x - 1) % n + 1, (y - 1) % n + 1
        if x != y:
            key = Edge.of(x, y)
            coeffs[key] = coeffs.get(key, Fraction(0)) + Fraction(sign, 2)
    return coeffs


def _add_into(target, coeffs):
    for edge, value in coeffs.items():
        target[edge] = target.get(edge, Fraction(0)) + value
    return target


def _short_arc(n, edge):
    """``(start, end)`` with ``end = start + length`` around the polygon."""
    i, j = edge
    return (i, j) if j - i == edge.length(n) else (j, i)


def _wrap(n, x):
    return (x - 1) % n + 1


class ConeRay(object):

    def __init__(self, label, vector):
        self.label = label
        self.vector = vector

    @property
    def w_form(self):
        return inverse_separation(self.vector)

    def __repr__(self):
        return f"ConeRay({self.label}, {self.vector!r})"


class ConeDescription(object):
    """
    A polyhedral cone given by a lineality basis, labelled rays and labelled facets.

    Rays and facets share labels: the ray labelled ``e`` is the generator
    opposite to the facet labelled ``e``.
    """

    def __init__(self, n, k, lineality, rays, facets):
        self.n = n
        self.k = k
        self.lineality = list(lineality)
        self.rays = list(rays)
        self.facets = list(facets)

    def facet(self, label):
        for form in self.facets:
            if form.label == label:
                return form
        raise KeyError(label)

    def contains(self, v):
        return all(form(v) >= 0 for form in self.facets)

    def violated(self, v):
        return [form.label for form in self.facets if form(v) < 0]

    def __repr__(self):
        return "ConeDescription(n=%d, k=%d, %d rays, %d facets, lineality %d)" % (
            self.n, self.k, len(self.rays), len(self.facets), len(self.lineality)
        )


def _simplicial_regime_validate(n, k):
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if n < 2 * k + 3:
        raise PreconditionError(
            f"the cone for n={n}, k={k} is not simplicial (n < 2k+3); "
            "use cycle_inequalities or the prevariety tools instead"
        )


@functools.lru_cache(maxsize=None)
def grobner_cone(n, k):
    """
    The cone of weights whose leading term in every sub-Pfaffian on ``2k+2``
    vertices is the crossing monomial.

    For ``n >= 2k+3`` it is simplicial modulo the lineality space, with one
    facet and one ray per edge of cyclic length at least two. Edges of length
    ``>= k+1`` give ``w_e >= 0``; shorter ones give the sum of ``w`` over the
    edges of length ``<= k+1`` that contain them.
    """
    _simplicial_regime_validate(n, k)
    facets = []
    rays = []
    for edge in EdgeSet.complete(n):
        length = edge.length(n)
        if length < 2:
            continue
        start, end = _short_arc(n, edge)
        if length >= k + 1:
            facets.append(LinearForm(n, _w_coordinate(n, edge), edge, "long"))
        else:
            coeffs = {}
            for outer in range(0, k + 2 - length):
                for inner in range(0, k + 2 - length - outer):
                    _add_into(coeffs, _w_coordinate(n, Edge.of(_wrap(n, start - outer), _wrap(n, end + inner))))
            facets.append(LinearForm(n, coeffs, edge, "short"))
        if length >= k + 2:
            rays.append(ConeRay(edge, w_unit_in_v(n, edge)))
        else:
            rays.append(ConeRay(edge, WeightVector.unit(n, (_wrap(n, start + 1), end), "v", -1)))
    logger.debug("cone for n=%d, k=%d: %d facets", n, k, len(facets))
    return ConeDescription(n, k, lineality_basis(n), rays, facets)


def _forms_for_membership(n, k):
    if n == 2 * k + 2:
        return cycle_inequalities(n, k)
    return grobner_cone(n, k).facets


def in_grobner_cone(v, k):
    """
    Whether the crossing is a maximum matching of every ``2k+2`` vertices under ``v``.

    Decided by the facet list for ``n >= 2k+3`` and by the cycle forms at ``n = 2k+2``.
    """
    n = v.n
    if k < 1 or n < 2 * k + 2:
        raise PreconditionError(f"membership needs n >= 2k+2, got n={n}, k={k}")
    return all(form(v) >= 0 for form in _forms_for_membership(n, k))


def violated_facets(v, k):
    n = v.n
    if k < 1 or n < 2 * k + 2:
        raise PreconditionError(f"membership needs n >= 2k+2, got n={n}, k={k}")
    return [form.label for form in _forms_for_membership(n, k) if form(v) < 0]


def cone_face_of(v, k):
    cone = grobner_cone(v.n, k)
    violated = cone.violated(v)
    if violated:
        raise ConeMembershipError(
            "vector is outside the cone; violated facets: %s" % ", ".join("{%s}" % e for e in violated),
            violated,
        )
    return EdgeSet(v.n, [form.label for form in cone.facets if form(v) > 0])


def _cycle_order(positive, negative):
    """Walk the alternating cycle formed by two disjoint matchings of the same vertices."""
    partner = [{}, {}]
    for side, pairs in enumerate((positive, negative)):
        for x, y in pairs:
            partner[side][x], partner[side][y] = y, x
    start = min(partner[0])
    order = [start]
    current, side = start, 0
    while True:
        current = partner[side][current]
        side = 1 - side
        if current == start:
            return tuple(order)
        order.append(current)


@functools.lru_cache(maxsize=None)
def _cycle_forms(n, k):
    seen = set()
    forms = []
    for U in itertools.combinations(range(1, n + 1), 2 * k + 2):
        crossing = crossing_matching(U).pairs
        for size in range(2, k + 2):
            for part in itertools.combinations(crossing, size):
                vertices = sorted(v for pair in part for v in pair)
                for M in matchings(vertices):
                    if set(M.pairs) & set(part):
                        continue
                    order = _cycle_order(part, M.pairs)
                    if len(order) != 2 * size:
                        continue
                    coeffs = {pair: 1 for pair in part}
                    coeffs.update({pair: -1 for pair in M.pairs})
                    form = LinearForm(n, coeffs, order, "cycle")
                    if form.key not in seen:
                        seen.add(form.key)
                        forms.append(form)
    logger.debug("%d cycle forms for n=%d, k=%d", len(forms), n, k)
    return tuple(forms)


def cycle_inequalities(n, k):
    """
    Alternating cycle forms: for each even cycle whose odd edges are part of a
    (k+1)-crossing, the crossing edges minus the others. Duplicates are dropped.
    """
    if k < 1 or n < 2 * k + 2:
        raise PreconditionError(f"cycle forms need n >= 2k+2, got n={n}, k={k}")
    return iter(_cycle_forms(n, k))


__all__ = [
    "ConeDescription",
    "ConeRay",
    "LinearForm",
    "WeightVector",
    "cone_face_of",
    "cycle_inequalities",
    "four_point_violations",
    "grobner_cone",
    "in_grobner_cone",
    "inverse_separation",
    "is_fp_positive",
    "lineality_basis",
    "matching_weight",
    "monotone_matching",
    "separation_vector",
    "violated_facets",
    "w_unit_in_v",
]

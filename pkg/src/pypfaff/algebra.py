"""
Exact classical algebra around Pfaffians of antisymmetric matrices.

Polynomials are written in the variables ``x_ij``, one per edge ``{i, j}``;
a monomial is the sorted tuple of its edges, repeated as often as the
exponent.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import List

from munch import munchify

from . import _linalg
from ._linalg import format_fraction
from ._linalg import format_signed
from ._linalg import to_fraction
from .combinatorics import Edge
from .combinatorics import EdgeSet
from .combinatorics import matchings
from .combinatorics import max_crossing_size
from .config import RunConfig
from .coords import WeightVector
from .exceptions import InternalError
from .exceptions import NotGenericError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

GENERIC_BOUND = 2 ** 20


class AntisymmetricMatrix(object):
    """
    An antisymmetric matrix stored by its entries above the diagonal.

    ``A[i, j]`` is ``-A[j, i]`` and the diagonal is zero; labels are ``1..n``.
    """

    def __init__(self, n, upper=None):
        self.n = int(n)
        if self.n < 0:
            raise ValueError(f"matrix size must be non-negative, got {n}")
        self.upper = {}
        for key, value in dict(upper or {}).items():
            if isinstance(key, str):
                edge = Edge.parse(key)
            else:
                i, j = key
                if int(i) >= int(j):
                    raise ValueError(f"upper entries need i < j, got {tuple(key)}")
                edge = Edge(int(i), int(j))
            edge.validate(self.n)
            value = to_fraction(value)
            if value:
                self.upper[edge] = value

    @classmethod
    def from_rows(cls, rows):
        rows = [[to_fraction(x) for x in row] for row in rows]
        n = len(rows)
        for i in range(n):
            if len(rows[i]) != n:
                raise PreconditionError("an antisymmetric matrix must be square")
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise PreconditionError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not opposite")
        return cls(n, {(i + 1, j + 1): rows[i][j] for i, j in itertools.combinations(range(n), 2)})

    def __getitem__(self, position):
        i, j = position
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper.get(Edge(i, j), Fraction(0))
        return -self.upper.get(Edge(j, i), Fraction(0))

    def rows(self):
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def __eq__(self, other):
        if not isinstance(other, AntisymmetricMatrix):
            return NotImplemented
        return self.n == other.n and self.upper == other.upper

    def __repr__(self):
        body = ", ".join(f"{e}: {format_fraction(x)}" for e, x in sorted(self.upper.items()))
        return f"AntisymmetricMatrix(n={self.n}, {{{body}}})"


def _pfaffian_validate(A):
    if A.n % 2:
        raise PreconditionError(f"the Pfaffian of an odd {A.n}x{A.n} antisymmetric matrix is undefined")


def pfaffian(A):
    """
    Pfaffian by expansion along the first row, memoized on the remaining labels.

    The sign of the term of a matching is ``(-1)`` to its number of crossings.
    """
    _pfaffian_validate(A)
    cache = {}

    def expand(vertices):
        if not vertices:
            return Fraction(1)
        if vertices in cache:
            return cache[vertices]
        first = vertices[0]
        total = Fraction(0)
        for position in range(1, len(vertices)):
            entry = A[first, vertices[position]]
            if entry:
                rest = vertices[1:position] + vertices[position + 1:]
                sign = 1 if position % 2 else -1
                total += sign * entry * expand(rest)
        cache[vertices] = total
        return total

    return expand(tuple(range(1, A.n + 1)))


def pfaffian_by_matchings(A):
    _pfaffian_validate(A)
    total = Fraction(0)
    for M in matchings(range(1, A.n + 1)):
        term = Fraction(M.parity.sign)
        for pair in M:
            term *= A[pair]
        total += term
    return total


def determinant(A):
    return _linalg.determinant(A.rows())


def rank(A):
    return _linalg.rank(A.rows())


def _monomial(edges):
    return tuple(sorted(Edge.of(*e) for e in edges))


def divides(first, second):
    """Whether monomial ``first`` divides monomial ``second``."""
    return not Counter(first) - Counter(second)


class SparsePolynomial(object):
    """
    A polynomial in the edge variables with exact rational coefficients.

    Zero coefficients are dropped on construction.
    """

    def __init__(self, terms=None):
        self.terms = {}
        for monomial, coefficient in dict(terms or {}).items():
            monomial = _monomial(monomial)
            coefficient = self.terms.get(monomial, Fraction(0)) + to_fraction(coefficient)
            if coefficient:
                self.terms[monomial] = coefficient
            else:
                self.terms.pop(monomial, None)

    @classmethod
    def monomial(cls, edges, coefficient=1):
        return cls({_monomial(edges): coefficient})

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def __add__(self, other):
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return SparsePolynomial(terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        terms = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            monomial = tuple(sorted(m1 + m2))
            terms[monomial] = terms.get(monomial, Fraction(0)) + c1 * c2
        return SparsePolynomial(terms)

    def scale(self, scalar):
        scalar = to_fraction(scalar)
        return SparsePolynomial({m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.terms == other.terms

    @staticmethod
    def weight(monomial, v):
        return sum((v[e] for e in monomial), Fraction(0))

    def leading_terms(self, v):
        """The terms of maximum ``v``-weight."""
        v = v.to_v()
        if not self.terms:
            return SparsePolynomial()
        weights = {m: self.weight(m, v) for m in self.terms}
        best = max(weights.values())
        return SparsePolynomial({m: c for m, c in self.terms.items() if weights[m] == best})

    def evaluate(self, point=None):
        """Value at ``point`` (a map from edges to rationals), or at all-ones by default."""
        if point is None:
            return sum(self.terms.values(), Fraction(0))
        point = {Edge.of(*e): to_fraction(x) for e, x in dict(point).items()}
        total = Fraction(0)
        for monomial, coefficient in self.terms.items():
            for e in monomial:
                coefficient *= point.get(e, Fraction(0))
            total += coefficient
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        return " ".join("%s*%s" % (format_signed(c), format_monomial(m)) for m, c in self.items())


def format_monomial(monomial):
    return "*".join(f"x{e.i}{e.j}" if max(e) < 10 else f"x{e.i}_{e.j}" for e in monomial) or "1"


def sub_pfaffian(U):
    """The Pfaffian of the generic antisymmetric matrix restricted to rows and columns ``U``."""
    return SparsePolynomial({M.pairs: M.parity.sign for M in matchings(U)})


def pfaffian_initial_form(v, U):
    return sub_pfaffian(U).leading_terms(v)


def _single_leading(polynomial, v, what):
    leading = polynomial.leading_terms(v)
    if len(leading) != 1:
        raise NotGenericError(f"not generic: {what} has {len(leading)} leading terms")
    ((monomial, coefficient),) = leading.items()
    return monomial, coefficient


def s_polynomial(f, g, v):
    """The S-polynomial of ``f`` and ``g`` for the weight ``v``, normalized by the leading coefficients."""
    mf, cf = _single_leading(f, v, "the first polynomial")
    mg, cg = _single_leading(g, v, "the second polynomial")
    lcm = Counter(mf) | Counter(mg)
    to_f = tuple((lcm - Counter(mf)).elements())
    to_g = tuple((lcm - Counter(mg)).elements())
    return (SparsePolynomial.monomial(to_f, 1 / cf) * f) - (SparsePolynomial.monomial(to_g, 1 / cg) * g)


def s_polynomial_leading_check(v, U1, U2, k):
    """
    Whether the leading term of the S-polynomial of two sub-Pfaffians contains a (k+1)-crossing.

    A vanishing S-polynomial, including ``U1 == U2``, counts as success.
    Raises :class:`~pypfaff.exceptions.NotGenericError` on ties between leading terms.
    """
    U1, U2 = tuple(sorted(U1)), tuple(sorted(U2))
    for U in (U1, U2):
        if len(U) != 2 * k + 2:
            raise PreconditionError(f"sub-Pfaffians here need 2k+2 = {2 * k + 2} vertices, got {list(U)}")
    if U1 == U2:
        return True
    h = s_polynomial(sub_pfaffian(U1), sub_pfaffian(U2), v)
    if not h:
        return True
    monomial, _ = _single_leading(h, v, "the S-polynomial")
    return max_crossing_size(EdgeSet(v.n, set(monomial))) >= k + 1


UGB_WEIGHTS = {
    (1, 2): 2, (3, 4): 2, (5, 6): 2, (4, 7): 2, (8, 9): 2,
    (5, 8): 1, (6, 9): 1,
    (1, 7): 10, (2, 8): 10, (3, 9): 10,
}


def ugb_counterexample():
    """
    A weight on nine points for which the six-point sub-Pfaffians are not a Gröbner basis.

    Builds ``h = x12*x34*g - x47*x89*f`` from the sub-Pfaffians ``f`` on
    ``1..6`` and ``g`` on ``4..9``, and checks that no leading monomial of a
    six-point sub-Pfaffian divides the leading monomial of ``h``.

    Returns
    -------
    Munch
        The certificate: weights, leading forms of ``f``, ``g`` and ``h``,
        the weight of ``in(h)`` and the number of subsets scanned.
    """
    n = 9
    v = WeightVector(n, UGB_WEIGHTS, "v")
    f = sub_pfaffian(range(1, 7))
    g = sub_pfaffian(range(4, 10))
    in_f = _single_leading(f, v, "f")
    in_g = _single_leading(g, v, "g")
    expected = [(in_f, [(1, 2), (3, 4), (5, 6)]), (in_g, [(4, 7), (5, 6), (8, 9)])]
    for found, wanted in expected:
        if found != (_monomial(wanted), 1):
            raise InternalError(f"unexpected leading term {format_monomial(found[0])}")
    h = SparsePolynomial.monomial([(1, 2), (3, 4)]) * g - SparsePolynomial.monomial([(4, 7), (8, 9)]) * f
    in_h, coefficient = _single_leading(h, v, "h")
    weight = SparsePolynomial.weight(in_h, v)
    if in_h != _monomial([(1, 2), (3, 4), (4, 7), (5, 8), (6, 9)]) or weight != 8:
        raise InternalError(f"leading term of h is {format_monomial(in_h)} with weight {weight}")
    scanned = 0
    divisors = []
    for W in itertools.combinations(range(1, n + 1), 6):
        scanned += 1
        for monomial, _ in pfaffian_initial_form(v, W).items():
            if divides(monomial, in_h):
                divisors.append((W, monomial))
    if divisors:
        raise InternalError("a sub-Pfaffian leading monomial divides in(h): %s" % format_monomial(divisors[0][1]))
    logger.debug("scanned %d six-point subsets, none divides in(h)", scanned)
    return munchify({
        "n": n,
        "subset_size": 6,
        "weights": {str(Edge(*e)): format_fraction(x) for e, x in UGB_WEIGHTS.items()},
        "f": {"subset": list(range(1, 7)), "leading": format_monomial(in_f[0]), "weight": 6},
        "g": {"subset": list(range(4, 10)), "leading": format_monomial(in_g[0]), "weight": 6},
        "h": "x12*x34*g - x47*x89*f",
        "leading_monomial": [str(e) for e in in_h],
        "leading_coefficient": format_fraction(coefficient),
        "weight": format_fraction(weight),
        "subsets_scanned": scanned,
        "divisors": [],
    })


def parametrize(vectors):
    """
    The antisymmetric matrix ``sum_l a_l b_l^T - b_l a_l^T`` from ``[a_1, b_1, ..., a_k, b_k]``.

    It has rank at most ``2k``.
    """
    vectors = [[to_fraction(x) for x in vector] for vector in vectors]
    if len(vectors) % 2:
        raise PreconditionError("vectors come in pairs a_l, b_l")
    lengths = {len(vector) for vector in vectors}
    if len(lengths) > 1:
        raise PreconditionError(f"all vectors need the same length, got {sorted(lengths)}")
    n = lengths.pop() if lengths else 0
    upper = {}
    for a, b in zip(vectors[::2], vectors[1::2]):
        for i, j in itertools.combinations(range(n), 2):
            upper[(i + 1, j + 1)] = upper.get((i + 1, j + 1), Fraction(0)) + a[i] * b[j] - a[j] * b[i]
    return AntisymmetricMatrix(n, upper)


@dataclass(frozen=True)
class PointConfiguration:
    dim: int
    points: List[tuple] = field(default_factory=list)

    def __post_init__(self):
        points = [tuple(to_fraction(x) for x in point) for point in self.points]
        if not points:
            raise PreconditionError("a configuration needs at least one point")
        for point in points:
            if len(point) != self.dim:
                raise PreconditionError(f"point {point} does not have dimension {self.dim}")
        object.__setattr__(self, "points", points)

    @property
    def n(self):
        return len(self.points)

    @classmethod
    def random(cls, n, dim, rng=None, bound=GENERIC_BOUND):
        rng = rng or RunConfig().rng()
        return cls(dim, [tuple(rng.randint(-bound, bound) for _ in range(dim)) for _ in range(n)])


def _hyperconnectivity_row(p, edge):
    d = p.dim
    row = [Fraction(0)] * (p.n * d)
    i, j = edge
    row[(i - 1) * d:i * d] = p.points[j - 1]
    row[(j - 1) * d:j * d] = [-x for x in p.points[i - 1]]
    return row


def hyperconnectivity_matrix(p, edges=None):
    """
    Rows indexed by edges in lexicographic order, ``n * dim`` columns.

    The row of ``{i, j}`` holds ``p_j`` in the block of ``i`` and ``-p_i`` in
    the block of ``j``. ``edges`` restricts the rows.
    """
    edges = EdgeSet.complete(p.n) if edges is None else EdgeSet(p.n, edges)
    return [_hyperconnectivity_row(p, edge) for edge in edges]


def matroid_rank(S, k, trials=8, rng=None):
    """
    Largest rank of the rows ``S`` of the hyperconnectivity matrix over
    ``trials`` random configurations in dimension ``2k``.

    A lower bound for the generic rank which equals it with high probability.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be positive, got {trials}")
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    rng = rng or RunConfig().rng()
    best = 0
    for trial in range(trials):
        p = PointConfiguration.random(S.n, 2 * k, rng)
        best = max(best, _linalg.rank(hyperconnectivity_matrix(p, S)))
        if best == len(S):
            break
    logger.debug("rank %d for %d edges after %d trials", best, len(S), trial + 1)
    return best


def matroid_rank_report(S, k, trials=8, rng=None):
    value = matroid_rank(S, k, trials, rng)
    return munchify({
        "n": S.n,
        "k": k,
        "edges": len(S),
        "rank": value,
        "trials": trials,
        "independent": value == len(S),
        "certificate": "lower bound from random configurations; equals the generic rank with high probability",
    })


def band_pattern(n, k):
    return EdgeSet(n, [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if i <= 2 * k])


def complete_band(known, n, k):
    """
    The antisymmetric matrix of rank at most ``2k`` with the given band entries.

    ``known`` must hold exactly the entries ``(i, j)`` with ``i <= 2k``. Every
    other entry solves the linear equation given by the Pfaffian of the rows
    ``1..2k, i, j``.
    """
    if k < 1 or n < 2 * k:
        raise PreconditionError(f"band completion needs n >= 2k, got n={n}, k={k}")
    pattern = band_pattern(n, k)
    known = {(Edge.parse(e) if isinstance(e, str) else Edge.of(*e)): to_fraction(x) for e, x in dict(known).items()}
    given = EdgeSet(n, known)
    if given != pattern:
        missing = pattern.difference(given)
        extra = given.difference(pattern)
        raise PreconditionError(
            "band data mismatch: missing %s, unexpected %s"
            % ([str(e) for e in missing] or "none", [str(e) for e in extra] or "none")
        )
    head = list(range(1, 2 * k + 1))
    lead = pfaffian(AntisymmetricMatrix(2 * k, {e: x for e, x in known.items() if e.j <= 2 * k}))
    if not lead:
        raise NotGenericError("non-generic band data: the leading Pfaffian minor vanishes")
    entries = dict(known)
    for i, j in itertools.combinations(range(2 * k + 1, n + 1), 2):
        labels = head + [i, j]
        relabel = {label: position + 1 for position, label in enumerate(labels)}
        local = {(relabel[e.i], relabel[e.j]): x for e, x in known.items() if e.i in relabel and e.j in relabel}
        constant = pfaffian(AntisymmetricMatrix(len(labels), local))
        local[(relabel[i], relabel[j])] = Fraction(1)
        slope = pfaffian(AntisymmetricMatrix(len(labels), local)) - constant
        entries[Edge(i, j)] = -constant / slope
    completed = AntisymmetricMatrix(n, entries)
    if rank(completed) > 2 * k:
        raise InternalError(f"completed matrix has rank {rank(completed)} > {2 * k}")
    return completed


__all__ = [
    "AntisymmetricMatrix",
    "PointConfiguration",
    "SparsePolynomial",
    "band_pattern",
    "complete_band",
    "determinant",
    "divides",
    "format_monomial",
    "hyperconnectivity_matrix",
    "matroid_rank",
    "matroid_rank_report",
    "parametrize",
    "pfaffian",
    "pfaffian_by_matchings",
    "pfaffian_initial_form",
    "rank",
    "s_polynomial",
    "s_polynomial_leading_check",
    "sub_pfaffian",
    "ugb_counterexample",
]

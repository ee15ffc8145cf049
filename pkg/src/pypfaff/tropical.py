"""
Tropical side: sub-Pfaffian hypersurfaces, the prevariety, its (k+1)-free part
and the tropical rank of matrices.

Tropical arithmetic is max-plus. Bottom (minus infinity) is represented by
``TropicalScalar.BOTTOM``.
"""
import functools
import itertools
import logging
from fractions import Fraction

from ._linalg import NEGATIVE_INFINITY
from ._linalg import format_fraction
from ._linalg import to_fraction
from .combinatorics import EdgeSet
from .combinatorics import consecutive_swaps
from .combinatorics import crossing_matching
from .combinatorics import is_k_free
from .combinatorics import matchings
from .coords import WeightVector
from .coords import in_grobner_cone
from .coords import inverse_separation
from .coords import matching_weight
from .exceptions import InternalError
from .exceptions import NotGenericError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)

K_DOUBLINGS = 16


@functools.total_ordering
class TropicalScalar(object):
    """An element of the max-plus semiring: an exact rational or bottom."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        if isinstance(value, TropicalScalar):
            value = value.value
        elif isinstance(value, str) and value.strip().lower() in NEGATIVE_INFINITY:
            value = None
        elif isinstance(value, float) and value == float("-inf"):
            value = None
        self.value = None if value is None else to_fraction(value)

    @property
    def is_bottom(self):
        return self.value is None

    def __add__(self, other):
        other = TropicalScalar(other)
        if self.is_bottom or other.is_bottom:
            return TropicalScalar.BOTTOM
        return TropicalScalar(self.value + other.value)

    __radd__ = __add__

    def max(self, other):
        other = TropicalScalar(other)
        return self if other < self else other

    def __eq__(self, other):
        if isinstance(other, TropicalScalar):
            return self.value == other.value
        try:
            return self == TropicalScalar(other)
        except ValueError:
            return NotImplemented

    def __lt__(self, other):
        other = TropicalScalar(other)
        if self.is_bottom:
            return not other.is_bottom
        if other.is_bottom:
            return False
        return self.value < other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"TropicalScalar({self})"

    def __str__(self):
        return "-inf" if self.is_bottom else format_fraction(self.value)


TropicalScalar.BOTTOM = TropicalScalar(None)


class TropicalMatrix(object):

    def __init__(self, entries):
        rows = [[TropicalScalar(x) for x in row] for row in entries]
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError(f"rows of a tropical matrix must have equal length, got {sorted(widths)}")
        self.entries = rows
        self.rows = len(rows)
        self.cols = widths.pop() if widths else 0

    def __getitem__(self, position):
        i, j = position
        return self.entries[i][j]

    @property
    def is_finite(self):
        return all(not x.is_bottom for row in self.entries for x in row)

    def minor(self, rows, cols):
        return TropicalMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __eq__(self, other):
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return "TropicalMatrix(%s)" % [[str(x) for x in row] for row in self.entries]


def max_matchings(v, U):
    """
    Matchings of ``U`` of maximum ``v``-weight, with their parities.

    The order is the lexicographic order of :func:`~pypfaff.combinatorics.matchings`.
    """
    weighted = [(M, matching_weight(v, M)) for M in matchings(U)]
    best = max(weight for _, weight in weighted)
    return [(M, M.parity) for M, weight in weighted if weight == best]


def _subsets_validate(v, k):
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if v.n < 2 * k + 2:
        raise PreconditionError(f"the prevariety needs n >= 2k+2, got n={v.n}, k={k}")


def _subsets(n, k):
    return itertools.combinations(range(1, n + 1), 2 * k + 2)


def in_prevariety(v, k):
    _subsets_validate(v, k)
    v = v.to_v()
    for U in _subsets(v.n, k):
        if len(max_matchings(v, U)) < 2:
            logger.debug("unique maximum matching on %s", U)
            return False
    return True


def _relevant_support_is_free(v, k):
    w = inverse_separation(v)
    support = EdgeSet(v.n, [e for e, x in w.items()]).relevant(k)
    return is_k_free(support, k)


@functools.lru_cache(maxsize=1024)
def in_pv_plus(v, k):
    """
    Whether ``v`` lies in both the Gröbner cone and the prevariety.

    For ``n >= 2k+3`` the answer is also computed from the support of the
    w-coordinates, which must be (k+1)-free exactly on that set; a disagreement
    raises :class:`~pypfaff.exceptions.InternalError`. At ``n = 2k+2`` only
    the direct test is available.
    """
    _subsets_validate(v, k)
    v = v.to_v()
    in_cone = in_grobner_cone(v, k)
    by_definition = in_cone and in_prevariety(v, k)
    if v.n == 2 * k + 2:
        return by_definition
    by_support = in_cone and _relevant_support_is_free(v, k)
    if by_definition != by_support:
        raise InternalError(
            f"prevariety test says {by_definition} but the support test says {by_support} for {v!r}"
        )
    return by_definition


def second_max_is_swap(v, k, U):
    """
    Whether the crossing of ``U`` and one of its consecutive swaps both have
    maximum weight.

    Only defined for ``v`` in the crossing-free part of the prevariety.
    """
    U = tuple(sorted(U))
    if len(U) != 2 * k + 2:
        raise PreconditionError(f"U must have 2k+2 = {2 * k + 2} vertices, got {len(U)}")
    if not in_pv_plus(v, k):
        raise PreconditionError("the vector is outside the crossing-free part of the prevariety")
    best = {M for M, _ in max_matchings(v, U)}
    if crossing_matching(U) not in best:
        return False
    return any(M in best for M in consecutive_swaps(U))


def is_balanced(v, k):
    """
    Whether every ``2k+2`` subset has as many even as odd maximum matchings.

    A positive answer certifies that every sub-Pfaffian's initial form
    vanishes at the all-ones point. It is a certificate, not a decision
    procedure for the positive tropical variety.
    """
    _subsets_validate(v, k)
    v = v.to_v()
    for U in _subsets(v.n, k):
        signs = sum(parity.sign for _, parity in max_matchings(v, U))
        if signs:
            logger.debug("unbalanced subset %s", U)
            return False
    return True


def tropical_determinant(M):
    """
    Maximum over permutations of the sum of the selected entries.

    Returns
    -------
    tuple
        ``(value, tie)`` where ``tie`` says the maximum is attained by at least
        two permutations. A matrix with no finite permutation gives
        ``(bottom, True)``.
    """
    if M.rows != M.cols:
        raise PreconditionError(f"tropical determinant of a non-square {M.rows}x{M.cols} matrix")
    best = TropicalScalar.BOTTOM
    count = 0
    for sigma in itertools.permutations(range(M.cols)):
        value = sum((M[i, j] for i, j in enumerate(sigma)), TropicalScalar(0))
        if value.is_bottom:
            continue
        if best < value:
            best, count = value, 1
        elif value == best:
            count += 1
    if best.is_bottom:
        return best, True
    return best, count >= 2


def tropical_rank(M):
    for size in range(min(M.rows, M.cols), 0, -1):
        for rows in itertools.combinations(range(M.rows), size):
            for cols in itertools.combinations(range(M.cols), size):
                _, tie = tropical_determinant(M.minor(rows, cols))
                if not tie:
                    return size
    return 0


def sym_matrix(M, K=None):
    """
    The symmetric ``(r+c) x (r+c)`` tropical matrix with ``M`` off the diagonal blocks.

    Rows of ``M`` become vertices ``1..r`` and columns become ``r+1..r+c``.
    Within a block the entries are ``m_i1 + m_j1 - K`` (rows) and
    ``m_1i + m_1j - K`` (columns); ``K=None`` stands for infinity and makes
    those blocks bottom. The diagonal is bottom.
    """
    r, c = M.rows, M.cols
    if r < 1 or c < 1:
        raise PreconditionError("the matrix needs at least one row and one column")
    size = r + c
    K = None if K is None else to_fraction(K)
    entries = [[TropicalScalar.BOTTOM] * size for _ in range(size)]
    for i in range(r):
        for j in range(c):
            entries[i][r + j] = entries[r + j][i] = M[i, j]
    if K is not None:
        for i, j in itertools.combinations(range(r), 2):
            entries[i][j] = entries[j][i] = M[i, 0] + M[j, 0] + TropicalScalar(-K)
        for i, j in itertools.combinations(range(c), 2):
            entries[r + i][r + j] = entries[r + j][r + i] = M[0, i] + M[0, j] + TropicalScalar(-K)
    return TropicalMatrix(entries)


def sym_construction(M, K):
    if K is None:
        raise PreconditionError("the weight vector needs a finite K; use sym_matrix for K = infinity")
    if not M.is_finite:
        raise PreconditionError("the weight vector needs a matrix with finite entries")
    S = sym_matrix(M, K)
    entries = {(i + 1, j + 1): S[i, j].value for i, j in itertools.combinations(range(S.rows), 2)}
    return WeightVector(S.rows, entries, "v")


def _balanced_subsets(r, c, k):
    for rows in itertools.combinations(range(1, r + 1), k + 1):
        for cols in itertools.combinations(range(r + 1, r + c + 1), k + 1):
            yield rows + cols


def _uses_block_edge(M, r):
    return any((e.i <= r) == (e.j <= r) for e in M)


def choose_K(M, k):
    """
    A value of K large enough that no maximum matching of a balanced subset uses a block edge.

    Starts from ``1 + 4(k+1)(1 + max |m_ij|)`` and doubles until the guarantee
    is checked on every balanced subset.
    """
    if not M.is_finite:
        raise PreconditionError("choose_K needs a matrix with finite entries")
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    largest = max((abs(x.value) for row in M.entries for x in row), default=Fraction(0))
    K = 1 + 4 * (k + 1) * (1 + largest)
    for _ in range(K_DOUBLINGS):
        v = sym_construction(M, K)
        offending = next(
            (U for U in _balanced_subsets(M.rows, M.cols, k)
             if any(_uses_block_edge(best, M.rows) for best, _ in max_matchings(v, U))),
            None,
        )
        if offending is None:
            return K
        logger.warning("K=%s lets a block edge into a maximum matching of %s; doubling", K, offending)
        K *= 2
    raise NotGenericError(f"no suitable K found after {K_DOUBLINGS} doublings")


def pv_rays(n):
    """
    Signed V-basis units and triangle indicators on ``n`` vertices.

    For ``n = 7`` these are the 77 ray directions of the tropical
    prevariety of sub-Pfaffians on six points.
    """
    rays = []
    for edge in EdgeSet.complete(n):
        rays.append(WeightVector.unit(n, edge, "v"))
        rays.append(WeightVector.unit(n, edge, "v", -1))
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        rays.append(WeightVector(n, {(a, b): 1, (a, c): 1, (b, c): 1}, "v"))
    return rays


def _inside(edge, U):
    return sum(1 for u in U if edge.i < u <= edge.j)


def length_profile_matches(v, U, M):
    """
    Whether every edge ``E`` in the support of the w-coordinates of ``v`` is
    crossed by as many pairs of ``M`` as there are points of ``U`` on its
    smaller side.

    A w-edge ``{x, y}`` cuts the vertices into ``x+1..y`` and the rest.
    """
    U = tuple(sorted(U))
    if tuple(sorted(M.ground)) != U:
        raise PreconditionError(f"matching {M} is not a matching of {list(U)}")
    w = inverse_separation(v.to_v())
    for edge, _ in w.items():
        inside = _inside(edge, U)
        length = min(inside, len(U) - inside)
        crossed = sum(1 for pair in M if (edge.i < pair.i <= edge.j) != (edge.i < pair.j <= edge.j))
        if length != crossed:
            return False
    return True


__all__ = [
    "TropicalMatrix",
    "TropicalScalar",
    "choose_K",
    "in_prevariety",
    "in_pv_plus",
    "is_balanced",
    "length_profile_matches",
    "max_matchings",
    "pv_rays",
    "second_max_is_swap",
    "sym_construction",
    "sym_matrix",
    "tropical_determinant",
    "tropical_rank",
]

"""
Circular-graph primitives.

Vertices are the labels ``1..n`` placed in convex position in cyclic order.
Edges are size-two subsets, stored as ``Edge(i, j)`` with ``i < j``.
"""
import itertools
import logging
from enum import Enum
from typing import NamedTuple

import networkx as nx

from .exceptions import InternalError
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    i: int
    j: int

    @classmethod
    def of(cls, a, b):
        a, b = int(a), int(b)
        if a == b:
            raise ValueError(f"an edge needs two distinct endpoints, got {a} twice")
        return cls(min(a, b), max(a, b))

    @classmethod
    def parse(cls, text):
        try:
            a, b = str(text).split(",")
        except ValueError:
            raise ValueError(f"an edge is written 'i,j', got {text!r}") from None
        return cls.of(a, b)

    def validate(self, n):
        if not 1 <= self.i < self.j <= n:
            raise ValueError(f"edge {self} is not an edge of the {n}-gon")
        return self

    def length(self, n):
        return min(self.j - self.i, n - self.j + self.i)

    def is_consecutive(self, n):
        return self.length(n) == 1

    def is_relevant(self, n, k):
        return self.length(n) >= k + 1

    def crosses(self, other):
        return crosses(self, other)

    def shift(self, n, offset):
        """Rotate both endpoints by ``offset`` positions around the n-gon."""
        return Edge.of((self.i - 1 + offset) % n + 1, (self.j - 1 + offset) % n + 1)

    def __str__(self):
        return f"{self.i},{self.j}"


def crosses(e, f):
    return e.i < f.i < e.j < f.j or f.i < e.i < f.j < e.j


class EdgeSet(object):
    """
    A graph on the vertices of the n-gon.

    The edges are kept sorted and duplicate-free; membership accepts plain
    tuples in either order.
    """

    def __init__(self, n, edges=()):
        self.n = int(n)
        unique = {Edge.of(*e) for e in edges}
        self.edges = tuple(sorted(e.validate(self.n) for e in unique))
        self._lookup = frozenset(self.edges)

    @classmethod
    def complete(cls, n):
        return cls(n, itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def boundary(cls, n):
        return cls(n, [(i, i % n + 1) for i in range(1, n + 1)])

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        try:
            return Edge.of(*edge) in self._lookup
        except (TypeError, ValueError):
            return False

    def __eq__(self, other):
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "EdgeSet(n=%d, edges=[%s])" % (self.n, ", ".join("{%s}" % e for e in self.edges))

    def relevant(self, k):
        return EdgeSet(self.n, [e for e in self.edges if e.is_relevant(self.n, k)])

    def irrelevant(self, k):
        return EdgeSet(self.n, [e for e in self.edges if not e.is_relevant(self.n, k)])

    def diagonals(self):
        return self.relevant(1)

    def union(self, other):
        return EdgeSet(self.n, self.edges + tuple(other))

    def difference(self, other):
        other = EdgeSet(self.n, other)
        return EdgeSet(self.n, [e for e in self.edges if e not in other])

    def with_edge(self, edge):
        return EdgeSet(self.n, self.edges + (Edge.of(*edge),))

    def without_edge(self, edge):
        edge = Edge.of(*edge)
        return EdgeSet(self.n, [e for e in self.edges if e != edge])


def _has_crossing(edges, size):
    """Whether ``edges`` contains ``size`` mutually crossing edges."""
    if size <= 0:
        return True
    if len(edges) < size:
        return False
    for position, edge in enumerate(edges):
        rest = [f for f in edges[position + 1:] if crosses(edge, f)]
        if _has_crossing(rest, size - 1):
            return True
    return False


def _crossing_graph(edges):
    graph = nx.Graph()
    graph.add_nodes_from(edges)
    graph.add_edges_from((e, f) for e, f in itertools.combinations(edges, 2) if crosses(e, f))
    return graph


def max_crossing_size(G):
    edges = list(G)
    if not edges:
        return 0
    _, size = nx.max_weight_clique(_crossing_graph(edges), weight=None)
    return size


def is_k_free(G, k):
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    return not _has_crossing(list(G), k + 1)


def is_k_triangulation(T, k):
    n = T.n
    return len(T) == k * (2 * n - 2 * k - 1) and is_k_free(T, k)


class Parity(Enum):
    EVEN = 0
    ODD = 1

    @property
    def sign(self):
        return 1 if self is Parity.EVEN else -1

    def __str__(self):
        return self.name.lower()


class Matching(object):
    """A perfect matching of an even vertex set, pairs kept sorted."""

    def __init__(self, pairs):
        self.pairs = tuple(sorted(Edge.of(*p) for p in pairs))
        vertices = [v for pair in self.pairs for v in pair]
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"pairs of a matching must be disjoint: {self}")
        self.ground = tuple(sorted(vertices))
        self._parity = None

    @property
    def crossings(self):
        return sum(1 for e, f in itertools.combinations(self.pairs, 2) if crosses(e, f))

    @property
    def parity(self):
        if self._parity is None:
            self._parity = Parity(self.crossings % 2)
        return self._parity

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, edge):
        return Edge.of(*edge) in self.pairs

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "Matching(%s)" % self

    def __str__(self):
        return "{%s}" % " ".join(f"{{{e}}}" for e in self.pairs)


def _ground(U):
    vertices = [int(u) for u in U]
    ground = tuple(sorted(set(vertices)))
    if len(ground) != len(vertices):
        raise PreconditionError(f"ground set has repeated vertices: {vertices}")
    if len(ground) % 2:
        raise PreconditionError(f"odd ground set: {list(ground)}")
    return ground


def _pairings(vertices):
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    for position, partner in enumerate(rest):
        remaining = rest[:position] + rest[position + 1:]
        for tail in _pairings(remaining):
            yield (Edge(first, partner),) + tail


def matchings(U):
    """
    Stream every perfect matching of ``U`` once.

    The first vertex is paired with each other vertex in increasing order and
    the rest is matched recursively, so the stream is lexicographic.
    """
    for pairs in _pairings(_ground(U)):
        yield Matching(pairs)


def parity(M):
    return M.parity


def permutation_sign(M):
    """Sign of the permutation that lists the pairs of ``M`` one after the other."""
    word = [v for pair in M.pairs for v in pair]
    inversions = sum(1 for x, y in itertools.combinations(word, 2) if x > y)
    return -1 if inversions % 2 else 1


def swap(M, e, f, variant=1):
    e, f = Edge.of(*e), Edge.of(*f)
    if e not in M or f not in M:
        raise PreconditionError(f"edges {{{e}}} and {{{f}}} must both belong to {M}")
    if e == f:
        raise PreconditionError("a swap needs two different pairs")
    if variant not in (1, 2):
        raise PreconditionError(f"variant must be 1 or 2, not {variant!r}")
    a, b, c, d = sorted(e + f)
    options = [
        option for option in ((Edge(a, b), Edge(c, d)), (Edge(a, c), Edge(b, d)), (Edge(a, d), Edge(b, c)))
        if set(option) != {e, f}
    ]
    kept = [pair for pair in M.pairs if pair not in (e, f)]
    return Matching(kept + list(options[variant - 1]))


def crossing_matching(U):
    ground = _ground(U)
    half = len(ground) // 2
    return Matching((ground[position], ground[position + half]) for position in range(half))


def consecutive_swaps(U):
    """
    Matchings obtained from the crossing of ``U`` by one swap of two
    cyclically consecutive crossing pairs.
    """
    ground = _ground(U)
    size = len(ground)
    half = size // 2
    if half < 2:
        return []
    crossing = crossing_matching(ground)
    result = []
    for position in range(half):
        removed = {Edge.of(ground[position], ground[position + half]),
                   Edge.of(ground[(position + 1) % size], ground[(position + 1 + half) % size])}
        inserted = [Edge.of(ground[position], ground[(position + half + 1) % size]),
                    Edge.of(ground[(position + 1) % size], ground[(position + half) % size])]
        result.append(Matching([p for p in crossing.pairs if p not in removed] + inserted))
    return result


def is_single_swap(first, second):
    if first.ground != second.ground:
        return False
    return len(set(first.pairs) - set(second.pairs)) == 2


def enumerate_k_triangulations(n, k):
    """
    Stream the k-triangulations of the n-gon.

    Depth-first over the relevant edges in lexicographic order; an edge is
    taken only when it closes no (k+1)-crossing with the edges already taken.
    Every output contains all irrelevant edges.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if n < 2 * k + 1:
        raise PreconditionError(f"k-triangulations need n >= 2k+1, got n={n}, k={k}")
    complete = EdgeSet.complete(n)
    irrelevant = complete.irrelevant(k).edges
    relevant = complete.relevant(k).edges
    target = k * (n - 2 * k - 1)
    chosen = []

    def backtrack(position):
        if len(chosen) == target:
            yield EdgeSet(n, irrelevant + tuple(chosen))
            return
        if len(chosen) + len(relevant) - position < target:
            return
        edge = relevant[position]
        if not _has_crossing([f for f in chosen if crosses(edge, f)], k):
            chosen.append(edge)
            yield from backtrack(position + 1)
            chosen.pop()
        yield from backtrack(position + 1)

    count = 0
    for triangulation in backtrack(0):
        count += 1
        yield triangulation
    logger.debug("enumerated %d %d-triangulations of the %d-gon", count, k, n)


def quadrilateral(T, delta):
    """
    Vertices ``(p, r, q, s)`` of the two triangles of ``T`` next to the diagonal
    ``delta = {p, q}``, in cyclic order, with ``p < r < q``.
    """
    delta = Edge.of(*delta)
    if delta not in T:
        raise PreconditionError(f"{{{delta}}} is not an edge of the triangulation")
    p, q = delta
    apexes = [x for x in range(1, T.n + 1) if x not in delta and (p, x) in T and (q, x) in T]
    inside = [x for x in apexes if p < x < q]
    outside = [x for x in apexes if not p < x < q]
    if len(inside) != 1 or len(outside) != 1:
        raise PreconditionError(f"{{{delta}}} does not bound two triangles of {T!r}")
    return p, inside[0], q, outside[0]


def flip(T, delta):
    """Replace a diagonal of a triangulation by the other diagonal of its quadrilateral."""
    _, r, _, s = quadrilateral(T, delta)
    return T.without_edge(delta).with_edge((r, s))


def _rotation(E, F, n):
    """Pick an endpoint of ``E`` as origin so that ``F`` sits inside the arc spanned by ``E``."""
    for origin, other in (E, E[::-1]):
        span = (other - origin) % n
        positions = sorted((x - origin) % n for x in F)
        if all(0 <= x <= span for x in positions):
            return origin, span, positions
    raise PreconditionError(f"edges {{{E}}} and {{{F}}} cross")


def _accordion(T, k, E, F):
    if E == F:
        return [E]
    if set(E) & set(F):
        return [E, F]
    n = T.n
    origin, _, (_, far) = _rotation(E, F, n)
    near_end = (origin - 1 + far) % n + 1
    shortcut = Edge.of(origin, near_end)
    if shortcut in T:
        return [E, shortcut, F]

    def rotated(edge):
        return sorted((x - origin) % n for x in edge)

    crossing = [g for g in T if crosses(g, shortcut)]
    candidates = set()
    for family in itertools.combinations(crossing, k):
        if all(crosses(g, h) for g, h in itertools.combinations(family, 2)):
            candidates.add(min(family, key=rotated))
    if not candidates:
        raise InternalError(f"no accordion from {{{E}}} to {{{F}}}")
    G = min(candidates)
    return _accordion(T, k, E, G) + _accordion(T, k, G, F)[1:]


def _accordion_validate(path):
    for previous, edge in zip(path, path[1:]):
        if len(set(previous) & set(edge)) != 1:
            raise InternalError(f"consecutive accordion edges {{{previous}}} and {{{edge}}} share no vertex")
    for previous, edge, following in zip(path, path[1:], path[2:]):
        (a,) = set(previous) - set(edge)
        (b,) = set(following) - set(edge)
        if a == b or not crosses(Edge.of(a, b), edge):
            raise InternalError(f"neighbours of {{{edge}}} in the accordion lie on the same side")


def accordion(T, E, F, k=None):
    """
    An accordion from ``E`` to ``F`` inside the k-triangulation ``T``.

    Parameters
    ----------
    T : EdgeSet
        A k-triangulation.
    E, F : Edge
        Two non-crossing edges of ``T``.
    k : int, optional
        Defaults to the largest crossing found in ``T``.

    Returns
    -------
    list of Edge
        ``E = E_1, ..., E_m = F``, consecutive edges sharing a vertex and the
        neighbours of every interior edge on opposite sides of it. When
        several intermediate edges are possible the smallest one is used.
    """
    k = max_crossing_size(T) if k is None else k
    if not is_k_triangulation(T, k):
        raise PreconditionError(f"{T!r} is not a {k}-triangulation")
    E, F = Edge.of(*E), Edge.of(*F)
    for edge in (E, F):
        if edge not in T:
            raise PreconditionError(f"{{{edge}}} is not an edge of the {k}-triangulation")
    if crosses(E, F):
        raise PreconditionError(f"edges {{{E}}} and {{{F}}} cross")
    path = _accordion(T, k, E, F)
    _accordion_validate(path)
    return path


__all__ = [
    "Edge",
    "EdgeSet",
    "Matching",
    "Parity",
    "accordion",
    "consecutive_swaps",
    "crosses",
    "crossing_matching",
    "enumerate_k_triangulations",
    "flip",
    "is_k_free",
    "is_k_triangulation",
    "is_single_swap",
    "matchings",
    "max_crossing_size",
    "parity",
    "permutation_sign",
    "quadrilateral",
    "swap",
]

"""Samplers shared by the test modules."""
import functools
import itertools

GENERIC = 2 ** 20


@functools.lru_cache(maxsize=None)
def k_triangulations(n, k):
    from pypfaff import enumerate_k_triangulations
    return tuple(enumerate_k_triangulations(n, k))


def generic_w_on(T, rng):
    """Positive generic w on the non-consecutive edges of ``T``, arbitrary on consecutive ones."""
    from pypfaff import WeightVector
    entries = {e: rng.randint(1, GENERIC) for e in T if not e.is_consecutive(T.n)}
    for i in range(1, T.n + 1):
        entries[(i, i % T.n + 1)] = rng.randint(-GENERIC, GENERIC)
    return WeightVector(T.n, entries, "w")


def generic_positive_w(n, rng):
    """Generic w, positive off the consecutive edges."""
    from pypfaff import EdgeSet
    return generic_w_on(EdgeSet.complete(n), rng)


def crossing_w(n, k, rng):
    """Positive w whose support contains a (k+1)-crossing."""
    from pypfaff import EdgeSet
    from pypfaff import WeightVector
    from pypfaff import crossing_matching
    U = sorted(rng.sample(range(1, n + 1), 2 * k + 2))
    support = set(crossing_matching(U).pairs)
    support |= {e for e in EdgeSet.complete(n) if rng.random() < 0.3}
    return WeightVector(n, {e: rng.randint(1, GENERIC) for e in support}, "w")


def random_v(n, rng, bound=20):
    from pypfaff import EdgeSet
    from pypfaff import WeightVector
    return WeightVector(n, {e: rng.randint(-bound, bound) for e in EdgeSet.complete(n)}, "v")


def subsets(n, size):
    return itertools.combinations(range(1, n + 1), size)

"""Bounded nondecreasing sequences and their exact counts.

A parking distribution here is a nondecreasing tuple of positive integers.
A bound family (m, k, r) assigns position i the ceiling m*(i+k-1) - r; the
canonical family (m, 1, m-1) gives the ceilings (1, m+1, 2m+1, ...) that
drive everything else in the package.  Counting is exact (Python integers),
enumeration is lexicographic and guarded by a configurable object cap.
"""

from dataclasses import dataclass
from math import comb

from catpark.errors import EnumerationCapError
from catpark import kernels

DEFAULT_MAX_OBJECTS = 10**8


@dataclass(frozen=True)
class BoundFamily:
    """Per-position ceilings u_i = m*(i+k-1) - r for i >= 1."""

    m: int
    k: int
    r: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0 <= self.r <= self.m - 1:
            raise ValueError(f"r must be in [0, m-1], got r={self.r} with m={self.m}")

    def bound(self, i):
        """Ceiling for position i (1-based)."""
        if i < 1:
            raise ValueError(f"position must be >= 1, got {i}")
        return self.m * (i + self.k - 1) - self.r

    def bounds(self, n):
        """Ceilings for positions 1..n as a list."""
        return [self.bound(i) for i in range(1, n + 1)]


def canonical_family(m):
    """The family (m, 1, m-1) with ceilings (1, m+1, 2m+1, ...)."""
    return BoundFamily(m, 1, m - 1)


@dataclass(frozen=True)
class CountTriple:
    """A length, the bound family used, and the exact count at that length."""

    n: int
    family: BoundFamily
    count: int


def is_nondecreasing_positive(seq):
    if any(x < 1 for x in seq):
        return False
    return all(a <= b for a, b in zip(seq, seq[1:]))


def is_u_pk(seq, family):
    """True iff seq is nondecreasing, positive, and within the family bounds.

    The empty sequence passes vacuously.
    """
    if not is_nondecreasing_positive(seq):
        return False
    return all(v <= family.bound(i) for i, v in enumerate(seq, start=1))


def count_for_bounds(bounds):
    """Exact number of nondecreasing sequences with 1 <= p[i] <= bounds[i].

    Rolling DP over (position, last value) with prefix sums; O(max bound)
    memory.  Tolerates arbitrary bounds, returning 0 when nothing fits.
    """
    n = len(bounds)
    if n == 0:
        return 1
    b0 = bounds[0]
    if b0 < 1:
        return 0
    # ending[v] = number of valid prefixes whose last entry is exactly v
    ending = [0] + [1] * b0
    for i in range(1, n):
        bi = bounds[i]
        if bi < 1:
            return 0
        prefix = [0] * len(ending)
        run = 0
        for v in range(1, len(ending)):
            run += ending[v]
            prefix[v] = run
        top = len(ending) - 1
        ending = [0] * (bi + 1)
        for v in range(1, bi + 1):
            ending[v] = prefix[min(v, top)]
    return sum(ending)


def count_u_pk(n, family):
    """Exact count of family-bounded distributions of length n."""
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    return count_for_bounds(family.bounds(n))


def count_u_pk_triple(n, family):
    return CountTriple(n, family, count_u_pk(n, family))


def enumerate_u_pk(n, family, max_objects=DEFAULT_MAX_OBJECTS):
    """Yield every family-bounded distribution of length n, lexicographically.

    The projected count is checked against max_objects before the first
    yield; EnumerationCapError is raised when it would be exceeded.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    bounds = family.bounds(n)
    if max_objects is not None:
        projected = count_for_bounds(bounds)
        if projected > max_objects:
            raise EnumerationCapError(projected, max_objects)
    return kernels.iter_bounded(bounds)


def fuss_catalan(m, n):
    """binom(m*n + n, n) // (m*n + 1); the division is always exact."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return comb(m * n + n, n) // (m * n + 1)

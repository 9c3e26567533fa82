"""Pure-Python enumeration kernels.

These are the hot inner loops: walking the tree of nondecreasing bounded
sequences, optionally folding statistics into histograms along the way.
A compiled twin lives in ``_fastcore.pyx``; both expose the same three
functions and must stay behaviourally identical (see tests/test_kernels.py).

Sequences are 1-indexed values packed into Python tuples.  ``bounds`` is the
per-position upper-bound list and must be nondecreasing with bounds[0] >= 1.
"""

BACKEND = "pure"


def iter_bounded(bounds):
    """Yield every nondecreasing tuple p with 1 <= p[i] <= bounds[i].

    Output is in strictly increasing lexicographic order.  The empty bound
    list yields the empty tuple once.
    """
    n = len(bounds)
    if n == 0:
        yield ()
        return
    if min(bounds) < 1:
        return
    p = [1] * n
    while True:
        yield tuple(p)
        j = n - 1
        while j >= 0 and p[j] >= bounds[j]:
            j -= 1
        if j < 0:
            return
        v = p[j] + 1
        for k in range(j, n):
            p[k] = v


def luck_histogram(m, n):
    """Histogram of the luck statistic over all length-n sequences bounded by
    (1, m+1, 2m+1, ...).

    Position i (1-based) is lucky when its value equals m*(i-1)+1, which for
    this bound family is exactly the positional bound.  Returns a list of
    length n+1 with hist[k] = number of sequences having k lucky positions.
    """
    hist = [0] * (n + 1)
    if n == 0:
        hist[0] = 1
        return hist

    def walk(i, lo, luck):
        if i == n:
            hist[luck] += 1
            return
        hi = m * i + 1
        for v in range(lo, hi):
            walk(i + 1, v, luck)
        walk(i + 1, hi, luck + 1)

    walk(0, 1, 0)
    return hist


def stat_quad_histogram(m, n):
    """Joint histogram of (luck, freq of 1, first window hit, first top hit).

    Runs over the same bounded sequences as luck_histogram.  The third
    statistic is the first position k > 1 whose value lands in
    [m(k-2)+2, m(k-1)+1]; the fourth is the first k > 1 hitting the window
    top m(k-1)+1 exactly.  Missing hits are encoded as n+1.  Returns a dict
    keyed by the 4-tuple of statistic values.
    """
    out = {}
    if n == 0:
        return out
    absent = n + 1

    def walk(i, lo, luck, ones, first_win, first_top):
        if i == n:
            key = (luck, ones, first_win or absent, first_top or absent)
            out[key] = out.get(key, 0) + 1
            return
        hi = m * i + 1  # bound and lucky value at 1-based position i+1
        win_lo = m * (i - 1) + 2  # window floor at 1-based position i+1
        for v in range(lo, hi + 1):
            nl = luck + 1 if v == hi else luck
            no = ones + 1 if v == 1 else ones
            fw, ft = first_win, first_top
            if i >= 1:
                if not fw and v >= win_lo:
                    fw = i + 1
                if not ft and v == hi:
                    ft = i + 1
            walk(i + 1, v, nl, no, fw, ft)

    walk(0, 1, 0, 0, 0, 0)
    return out

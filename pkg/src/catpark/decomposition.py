"""First-return decomposition and the bijections built on it.

Throughout, sequences live under the canonical bounds (1, m+1, 2m+1, ...).
For 1 <= l <= m, the first fixed point of type l is the smallest position
k > 1 whose value lands in the window [m(k-2)+1+l, m(k-1)+1]; absent fixed
points are reported as n+1.  Cutting a distribution at its m fixed-point
indices and shifting each block down to start at 1 yields m+1 shorter
distributions; recomposition inverts this exactly, which turns the defining
property of the cut points into a runtime check.

The involution tau swaps the first and last components (recursing into
each), exchanging the luck statistic with the multiplicity of 1.  The map
eta rebuilds a distribution from the per-component multiplicities of 1 and
transports every other entry upward by a component-dependent offset.
"""

from dataclasses import dataclass

from catpark.errors import InvalidCompositionError, NonMembershipError
from catpark.sequences import canonical_family, enumerate_u_pk, is_u_pk


def _require_member(seq, m):
    if not is_u_pk(seq, canonical_family(m)):
        raise ValueError(f"{seq} is not within the canonical bounds for m={m}")


@dataclass(frozen=True)
class FixedPointIndices:
    """First fixed-point index per type; index n+1 encodes absence."""

    m: int
    indices: tuple

    def __post_init__(self):
        if len(self.indices) != self.m:
            raise ValueError(f"need {self.m} indices, got {len(self.indices)}")
        if any(a > b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices must be nondecreasing, got {self.indices}")


@dataclass(frozen=True)
class FirstReturnDecomposition:
    components: tuple  # m+1 sequences, possibly empty
    fixed_points: FixedPointIndices


def first_fixed_point(seq, m, l):
    """Smallest k > 1 with m(k-2)+1+l <= seq[k] <= m(k-1)+1, else n+1."""
    _require_member(seq, m)
    n = len(seq)
    if n < 1:
        raise ValueError("sequence must be nonempty")
    if not 1 <= l <= m:
        raise ValueError(f"type must be in [1, {m}], got {l}")
    for k in range(2, n + 1):
        v = seq[k - 1]
        if m * (k - 2) + 1 + l <= v <= m * (k - 1) + 1:
            return k
    return n + 1


def fixed_point_indices(seq, m):
    n = len(seq)
    found = [n + 1] * m
    for k in range(2, n + 1):
        v = seq[k - 1]
        if v > m * (k - 1) + 1:
            continue
        # v is in the type-l window iff l <= v - m(k-2) - 1
        max_l = v - m * (k - 2) - 1
        for l in range(1, min(max_l, m) + 1):
            if found[l - 1] == n + 1:
                found[l - 1] = k
    return FixedPointIndices(m, tuple(found))


def decompose(seq, m):
    """Cut at the fixed points and shift every block down to start at 1.

    Block l covers positions i_(l-1) .. i_l - 1 (the first block starts at
    position 2, the last runs to the end); empty ranges give empty
    components.  The leading 1 at position 1 is implicit and dropped.
    """
    _require_member(seq, m)
    n = len(seq)
    if n < 1:
        raise ValueError("cannot decompose the empty sequence")
    fp = fixed_point_indices(seq, m)
    cuts = (2,) + fp.indices + (n + 1,)
    components = []
    for l in range(m + 1):
        start, stop = cuts[l], cuts[l + 1]
        if start >= stop:
            components.append(())
        else:
            shift = seq[start - 1] - 1
            components.append(tuple(seq[i - 1] - shift for i in range(start, stop)))
    return FirstReturnDecomposition(tuple(components), fp)


def recompose(components, m):
    """Inverse of decompose: rebuild the unique sequence with these blocks.

    The cut positions are forced by the block lengths; each block is shifted
    back up by the unique offset that makes its first entry a fresh fixed
    point of the right type.  The result is verified by decomposing again.
    """
    if len(components) != m + 1:
        raise InvalidCompositionError(
            f"need {m + 1} components, got {len(components)}"
        )
    for comp in components:
        if not is_u_pk(comp, canonical_family(m)):
            raise InvalidCompositionError(
                f"component {comp} is not within the canonical bounds for m={m}"
            )
    idx = [0] * (m + 1)  # idx[l] = i_l for l >= 1
    idx[0] = 2 + len(components[0])
    for l in range(2, m + 1):
        idx[l - 1] = idx[l - 2] + len(components[l - 1])
    n = idx[m - 1] - 1 + len(components[m])
    out = [0] * n
    out[0] = 1
    for pos, v in enumerate(components[0], start=2):
        out[pos - 1] = v
    for l in range(2, m + 1):
        start = idx[l - 2]
        shift = m * (start - 2) + l - 1
        for pos, v in enumerate(components[l - 1], start=start):
            out[pos - 1] = v + shift
    start = idx[m - 1]
    shift = m * (start - 1)
    for pos, v in enumerate(components[m], start=start):
        out[pos - 1] = v + shift
    result = tuple(out)
    if not is_u_pk(result, canonical_family(m)):
        raise InvalidCompositionError(f"recomposed {result} violates the bounds")
    if decompose(result, m).components != tuple(tuple(c) for c in components):
        raise InvalidCompositionError(
            f"recomposed {result} does not decompose back into {components}"
        )
    return result


def tau(seq, m):
    """Involution exchanging luck with the multiplicity of 1.

    tau of the empty sequence is empty; otherwise the first and last
    components are swapped, with tau applied inside each.  Evaluated with an
    explicit stack so deep inputs cannot hit the recursion limit.
    """
    seq = tuple(seq)
    _require_member(seq, m)
    done = {(): ()}
    parts = {}
    stack = [seq]
    while stack:
        s = stack.pop()
        if s in done:
            continue
        comps = parts.get(s)
        if comps is None:
            comps = parts[s] = decompose(s, m).components
        first, last = comps[0], comps[m]
        if first in done and last in done:
            swapped = (done[last],) + comps[1:m] + (done[first],)
            done[s] = recompose(swapped, m)
        else:
            stack.append(s)
            if last not in done:
                stack.append(last)
            if first not in done:
                stack.append(first)
    return done[seq]


def u_luck(seq, m):
    """Number of positions i with seq[i] = m*i - m + 1."""
    _require_member(seq, m)
    return sum(1 for i, v in enumerate(seq, start=1) if v == m * i - m + 1)


def u_omega(seq, j):
    """Number of entries equal to j."""
    return sum(1 for v in seq if v == j)


def f_stat(seq, m):
    """First fixed point of type 1."""
    return first_fixed_point(seq, m, 1)


def g_stat(seq, m):
    """First fixed point of type m."""
    return first_fixed_point(seq, m, m)


def eta(seq, m):
    """Rebuild a distribution from component data; a bijection on each
    length that sends the multiplicity of 1 inside component j to the
    multiplicity of j overall.

    Start from (1); add omega_1(component j) copies of j for every j; then,
    walking components right to left, re-insert each non-1 entry e of
    component j as e + m*(1 + total length of the components right of j).
    """
    seq = tuple(seq)
    _require_member(seq, m)
    if not seq:
        return ()
    comps = decompose(seq, m).components
    out = [1]
    for j, comp in enumerate(comps, start=1):
        out.extend([j] * u_omega(comp, 1))
    suffix = 0  # total length of components right of j
    for j in range(m + 1, 0, -1):
        comp = comps[j - 1]
        offset = m * (1 + suffix)
        for e in comp:
            if e != 1:
                out.append(e + offset)
        suffix += len(comp)
    result = tuple(sorted(out))
    if not is_u_pk(result, canonical_family(m)):
        raise NonMembershipError(f"eta image {result} violates the bounds")
    return result


def eta_inv(seq, m):
    """Invert eta by reconstructing the components.

    The multiplicity of j in the image fixes how many 1s component j holds
    (component 1 gets one less: the leading 1 is structural).  Remaining
    entries are processed in increasing order -- entries belonging to
    further-right components are provably smaller -- and each is shifted
    down and placed in the largest component index that keeps the component
    within bounds.
    """
    seq = tuple(seq)
    _require_member(seq, m)
    if not seq:
        return ()
    fam = canonical_family(m)
    counts = {}
    for v in seq:
        counts[v] = counts.get(v, 0) + 1
    if counts.get(1, 0) < 1:
        raise NonMembershipError(f"{seq} lacks the structural leading 1")
    comps = [[1] * (counts.get(1, 0) - 1)]
    for j in range(2, m + 2):
        comps.append([1] * counts.get(j, 0))
    rest = sorted(v for v in seq if v > m + 1)
    for e in rest:
        placed = False
        suffix = 0
        candidates = []
        for j in range(m + 1, 0, -1):
            candidates.append((j, e - m * (1 + suffix)))
            suffix += len(comps[j - 1])
        for j, val in candidates:
            if val <= 0:
                continue
            comp = comps[j - 1]
            trial = sorted(comp + [val])
            if is_u_pk(trial, fam):
                comps[j - 1] = trial
                placed = True
                break
        if not placed:
            raise NonMembershipError(f"entry {e} of {seq} fits no component")
    try:
        return recompose(tuple(tuple(c) for c in comps), m)
    except InvalidCompositionError as exc:
        raise NonMembershipError(str(exc)) from exc


@dataclass(frozen=True)
class CompatibilityReport:
    """Outcome of probing a statistic against the decomposition structure."""

    constant: int | None
    constant_holds: bool
    constant_counterexample: tuple | None
    equidistributed: bool
    equidistribution_counterexample: int | None  # offending length, if any


def check_statistic_compatibility(stat, const_index, m, n_max,
                                  max_objects=None):
    """Probe whether stat(p) = stat(component const_index+1 of p) + C for a
    single constant C over all lengths 1..n_max, and whether stat matches
    the luck statistic's histogram at every length.

    stat is a callable on sequences (it must also accept the empty one).
    """
    if not 0 <= const_index <= m:
        raise ValueError(f"const_index must be in [0, {m}], got {const_index}")
    fam = canonical_family(m)
    kwargs = {} if max_objects is None else {"max_objects": max_objects}
    constant = None
    constant_holds = True
    constant_example = None
    equid = True
    equid_example = None
    for n in range(1, n_max + 1):
        stat_hist = {}
        luck_hist = {}
        for p in enumerate_u_pk(n, fam, **kwargs):
            comp = decompose(p, m).components[const_index]
            diff = stat(p) - stat(comp)
            if constant is None:
                constant = diff
            elif constant_holds and diff != constant:
                constant_holds = False
                constant_example = p
            s = stat(p)
            stat_hist[s] = stat_hist.get(s, 0) + 1
            lk = u_luck(p, m)
            luck_hist[lk] = luck_hist.get(lk, 0) + 1
        if equid and stat_hist != luck_hist:
            equid = False
            equid_example = n
    return CompatibilityReport(
        constant=constant if constant_holds else None,
        constant_holds=constant_holds,
        constant_counterexample=constant_example,
        equidistributed=equid,
        equidistribution_counterexample=equid_example,
    )

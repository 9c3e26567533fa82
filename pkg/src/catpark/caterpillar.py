"""Regular caterpillar trees and parking on them.

A tree of regularity m and backbone length n has m*n - m + 1 nodes.  The
backbone nodes carry labels m*(j-1)+1 and point toward the sink (the largest
label); each backbone node past the first is fed by m-1 leaves, except the
second, which also receives backbone node 1.  Labels decrease with depth, so
every parent label exceeds all labels in its subtree -- several routines
exploit that by accumulating in a single ascending pass.

Parking: cars arrive in index order, drive to their preferred node, and roll
toward the sink until they find a free node or fall out.  A car is lucky when
it prefers a backbone node and parks exactly there.
"""

from collections import Counter
from dataclasses import dataclass, field

from catpark.errors import NonMembershipError
from catpark.sequences import canonical_family, enumerate_u_pk, is_u_pk


@dataclass(frozen=True)
class CaterpillarTree:
    m: int
    n: int
    node_count: int
    # parent[label] for labels 1..node_count; the sink maps to 0
    parent: tuple
    backbone_labels: tuple
    backbone_set: frozenset = field(repr=False)
    subtree_size: tuple = field(repr=False)


def build_caterpillar(m, n):
    """Construct the labelled tree for regularity m and backbone length n."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    count = m * n - m + 1
    backbone = tuple(m * (j - 1) + 1 for j in range(1, n + 1))
    backbone_set = frozenset(backbone)
    parent = [0] * (count + 1)
    for label in range(1, count + 1):
        if label == count:
            continue  # sink
        if label in backbone_set:
            parent[label] = label + m  # next backbone node up
        else:
            # nearest backbone label above: round up to the next 1 mod m
            parent[label] = ((label - 1) // m + 1) * m + 1
    sizes = [1] * (count + 1)
    sizes[0] = 0
    for label in range(1, count):
        sizes[parent[label]] += sizes[label]
    return CaterpillarTree(
        m=m,
        n=n,
        node_count=count,
        parent=tuple(parent),
        backbone_labels=backbone,
        backbone_set=backbone_set,
        subtree_size=tuple(sizes),
    )


def non_backbone_labels(m, n):
    """Leaf labels of the (m, n) tree, ascending."""
    count = m * n - m + 1
    backbone = frozenset(m * (j - 1) + 1 for j in range(1, n + 1))
    return tuple(j for j in range(1, count + 1) if j not in backbone)


def _validate_entries(tree, seq):
    for v in seq:
        if not 1 <= v <= tree.node_count:
            raise ValueError(
                f"preference {v} outside node range 1..{tree.node_count}"
            )


def is_tree_pk(tree, seq):
    """True iff every subtree receives at least as many preferences as nodes.

    seq must have exactly one entry per node; a length mismatch is an error,
    not a False.
    """
    if len(seq) != tree.node_count:
        raise ValueError(
            f"sequence length {len(seq)} != node count {tree.node_count}"
        )
    _validate_entries(tree, seq)
    received = [0] * (tree.node_count + 1)
    for v in seq:
        received[v] += 1
    # ascending labels = children before parents
    for label in range(1, tree.node_count + 1):
        if received[label] < tree.subtree_size[label]:
            return False
        p = tree.parent[label]
        if p:
            received[p] += received[label]
    return True


@dataclass(frozen=True)
class ParkingOutcome:
    """Where each car ended up (node label, or None if it exited) and which
    cars were lucky.  Car indices are 1-based."""

    assignment: tuple
    lucky_set: frozenset

    @property
    def all_parked(self):
        return all(node is not None for node in self.assignment)


def simulate(tree, seq):
    """Run the parking process for the given preferences, in index order."""
    _validate_entries(tree, seq)
    occupied = [False] * (tree.node_count + 1)
    assignment = []
    lucky = set()
    for car, pref in enumerate(seq, start=1):
        node = pref
        while node and occupied[node]:
            node = tree.parent[node]
        if node:
            occupied[node] = True
            assignment.append(node)
            if node == pref and pref in tree.backbone_set:
                lucky.add(car)
        else:
            assignment.append(None)
    return ParkingOutcome(tuple(assignment), frozenset(lucky))


def luck_tree(tree, seq):
    """Number of lucky cars; requires a full parking distribution."""
    if not is_tree_pk(tree, seq):
        raise ValueError("sequence is not a parking distribution on this tree")
    return len(simulate(tree, seq).lucky_set)


def omega_tree(tree, seq, j):
    """Number of cars preferring node j; 0 for labels the tree lacks."""
    if j < 1:
        raise ValueError(f"node label must be >= 1, got {j}")
    return sum(1 for v in seq if v == j)


def theta(seq, m, n):
    """Merge one copy of every leaf label into a (1, m+1, 2m+1, ...)-bounded
    distribution of length n, producing a tree parking distribution."""
    if len(seq) != n:
        raise ValueError(f"expected length {n}, got {len(seq)}")
    if not is_u_pk(seq, canonical_family(m)):
        raise ValueError(f"{seq} is not within the canonical bounds for m={m}")
    return tuple(sorted(tuple(seq) + non_backbone_labels(m, n)))


def theta_inv(seq, m, n):
    """Remove one copy of every leaf label; inverse of theta."""
    tree = build_caterpillar(m, n)
    if not is_tree_pk(tree, seq):
        raise ValueError(f"{seq} is not a parking distribution on the ({m},{n}) tree")
    counts = Counter(seq)
    for label in non_backbone_labels(m, n):
        if counts[label] < 1:
            raise NonMembershipError(f"leaf label {label} absent from {seq}")
        counts[label] -= 1
    out = []
    for label in sorted(counts):
        out.extend([label] * counts[label])
    return tuple(out)


def enumerate_caterpillar_pk(m, n, max_objects=None):
    """Yield all parking distributions on the (m, n) tree, as theta images of
    the bounded sequences, in the induced lexicographic order."""
    kwargs = {} if max_objects is None else {"max_objects": max_objects}
    leaves = non_backbone_labels(m, n)
    for seq in enumerate_u_pk(n, canonical_family(m), **kwargs):
        yield tuple(sorted(seq + leaves))


def to_lattice_path(seq, m):
    """Encode a canonically bounded distribution as an N/E step word.

    The word is E^(p1-1) N E^(p2-p1) N ... N E^(m(n-1)+1-pn); it runs from
    (0,0) to (m(n-1), n) and satisfies x <= m*y just before every N step.
    """
    if not is_u_pk(seq, canonical_family(m)):
        raise ValueError(f"{seq} is not within the canonical bounds for m={m}")
    n = len(seq)
    if n == 0:
        return ""
    parts = []
    prev = 1
    for v in seq:
        parts.append("E" * (v - prev))
        parts.append("N")
        prev = v
    parts.append("E" * (m * (n - 1) + 1 - prev))
    return "".join(parts)


def from_lattice_path(word, m):
    """Decode an N/E step word back to the bounded distribution.

    Rejects words with foreign characters, an x > m*y prefix before some N
    step, or the wrong total number of E steps.
    """
    x = 0
    y = 0
    seq = []
    for ch in word:
        if ch == "E":
            x += 1
        elif ch == "N":
            if x > m * y:
                raise NonMembershipError(
                    f"x={x} exceeds m*y={m * y} before N step {y + 1}"
                )
            seq.append(x + 1)
            y += 1
        else:
            raise NonMembershipError(f"unexpected step {ch!r}; want N or E")
    n = y
    expected_e = 0 if n == 0 else m * (n - 1)
    if x != expected_e:
        raise NonMembershipError(
            f"word has {x} E steps; a length-{n} path needs {expected_e}"
        )
    return tuple(seq)

"""Integer partitions as nondecreasing sequences, with successor iteration.

Partitions of n are ordered lexicographically on their ascending part
sequences; the successor of the last partition of n wraps to the first
partition of n + 1, so iterating the successor enumerates partitions of
every integer in turn.
"""

from __future__ import annotations

Partition = tuple[int, ...]


def first_partition(n: int) -> Partition:
    """Lexicographically first partition of n: n parts equal to 1."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    return (1,) * n


def next_partition_same_n(p: Partition) -> Partition | None:
    """Next partition of the same integer in lexicographic order, or None.

    Ascending-composition successor rule: the last two parts x <= y are
    replaced by parts of size x + 1 covering x + y.
    """
    if len(p) < 2:
        return None  # () has no successor; (n,) is the last partition of n
    x = p[-2] + 1
    y = p[-1] - 1
    out = list(p[:-2])
    while x <= y:
        out.append(x)
        y -= x
    out.append(x + y)
    return tuple(out)


def successor_partition(p: Partition) -> Partition:
    """Next partition of n, or the first partition of n + 1 after the last."""
    nxt = next_partition_same_n(p)
    if nxt is not None:
        return nxt
    return first_partition(sum(p) + 1)

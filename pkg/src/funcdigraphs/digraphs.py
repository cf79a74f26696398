"""Canonical codes for arbitrary functional digraphs and their successor.

A digraph code lists the codes of its connected components with sizes
nondecreasing and, among equal sizes, in nondecreasing generation order of
the component successor algorithm. The digraph successor advances the
rightmost component that still has a same-size successor (resetting the
components to its right), or else moves to the next partition of the vertex
count and emits its cycles.
"""

from __future__ import annotations

import threading
from typing import Iterator

from .components import (
    ComponentCode,
    component_size,
    cycle,
    generate_components,
    is_canonical,
    successor_component,
)
from .partitions import Partition, successor_partition
from .trees import is_valid_tree_code

DigraphCode = tuple[ComponentCode, ...]

#: The digraph with no vertices, the seed of the global enumeration.
EMPTY_DIGRAPH: DigraphCode = ()


def digraph_size(g: DigraphCode) -> int:
    """Total number of vertices."""
    return sum(component_size(c) for c in g)


def partition_of(g: DigraphCode) -> Partition:
    """Component sizes, in stored order (nondecreasing for valid codes)."""
    return tuple(component_size(c) for c in g)


# generation_rank replays the component stream of the relevant size; the
# replay position and the ranks seen so far are kept per size so repeated
# queries (canonicalization sorts, order validation) pay for each stream
# element at most once per process.
_rank_lock = threading.Lock()
_ranks: dict[int, dict[ComponentCode, int]] = {}
_streams: dict[int, Iterator[ComponentCode]] = {}


def _rank_of_known_canonical(c: ComponentCode) -> int:
    n = component_size(c)
    with _rank_lock:
        seen = _ranks.setdefault(n, {})
        rank = seen.get(c)
        if rank is not None:
            return rank
        stream = _streams.get(n)
        if stream is None:
            stream = _streams[n] = generate_components(n)
        for code in stream:
            seen[code] = rank = len(seen)
            if code == c:
                return rank
    raise AssertionError("canonical component missing from its generation stream")


def generation_rank(c: ComponentCode) -> int:
    """0-based position of ``c`` in the generation stream of its size.

    Exponential in the worst case (the stream is replayed); meant for
    validation, ingestion and tests, never for the successor hot path.
    Rejects non-canonical input.
    """
    if not c or not all(is_valid_tree_code(t) for t in c):
        raise ValueError("not a component code: invalid tree code")
    if not is_canonical(c):
        raise ValueError("not a component code: not its own minimal rotation")
    return _rank_of_known_canonical(c)


def compare_digraphs(a: DigraphCode, b: DigraphCode) -> int:
    """Order digraph codes; -1, 0, or 1.

    Partitions compare first (smaller vertex count first, then
    lexicographically on the ascending parts); equal partitions fall back to
    the componentwise generation order.
    """
    pa = partition_of(a)
    pb = partition_of(b)
    if pa != pb:
        na, nb = sum(pa), sum(pb)
        if na != nb:
            return -1 if na < nb else 1
        return -1 if pa < pb else 1
    for x, y in zip(a, b):
        if x != y:
            return -1 if generation_rank(x) < generation_rank(y) else 1
    return 0


def successor_digraph(g: DigraphCode) -> DigraphCode:
    """Immediate successor of a valid digraph code.

    Scans components right to left for one with a same-size successor; the
    first hit is replaced, every component to its right becomes a copy when
    of equal size and the cycle of its own size otherwise. If no component
    advances, the partition does, and its cycles are emitted.
    """
    for h in range(len(g) - 1, -1, -1):
        succ = successor_component(g[h])
        if succ.grew:
            continue
        new = succ.code
        size_new = component_size(new)
        out = list(g[:h + 1])
        out[h] = new
        for c in g[h + 1:]:
            s = component_size(c)
            out.append(new if s == size_new else cycle(s))
        return tuple(out)
    q = successor_partition(partition_of(g))
    return tuple(cycle(x) for x in q)


def generate_digraphs(n: int) -> Iterator[DigraphCode]:
    """All functional digraphs over n vertices, in order, without repetition.

    Starts from n self-loops (the first partition of n) and iterates the
    successor, stopping before the first digraph over n + 1 vertices.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    g: DigraphCode = (cycle(1),) * n
    while digraph_size(g) == n:
        yield g
        g = successor_digraph(g)

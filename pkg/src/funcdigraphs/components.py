"""Canonical codes for connected functional digraphs and their successor.

A connected functional digraph (a *component*) is a cycle of k rooted trees;
its code is the sequence of the k tree codes, stored as the lexicographically
minimal rotation. Successor generation works by merging windows of adjacent
trees along the cycle and, when no merge applies, backtracking through
component-unmerges; iterating the successor from ``cycle(n)`` visits every
component over n vertices exactly once.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterator, NamedTuple, Sequence

from .rotation import is_least_rotation
from .trees import TRIVIAL_TREE, TreeCode, unmerge

ComponentCode = tuple[TreeCode, ...]


class ComponentSuccessor(NamedTuple):
    """Successor of a component: either the next code of the same size
    (``grew`` False) or, past the last one, the cycle one vertex larger
    (``grew`` True)."""

    code: ComponentCode
    grew: bool


def component_size(c: ComponentCode) -> int:
    """Total number of vertices of the component."""
    return sum(t[0] for t in c)


def cycle(n: int) -> ComponentCode:
    """The cycle of length n: n trivial trees. First component of size n."""
    if n < 1:
        raise ValueError("a cycle has at least one vertex")
    return (TRIVIAL_TREE,) * n


def flatten_with_separators(trees: Sequence[TreeCode]) -> tuple[int, ...]:
    """Concatenate tree codes, each prefixed with a 0 separator.

    0 is strictly below every tree-code entry, so rotations of the flattened
    sequence that start mid-tree are never minimal, and comparing rotations of
    the flattened sequence is equivalent to comparing rotations of the tree
    sequence itself.
    """
    flat: list[int] = []
    for t in trees:
        flat.append(0)
        flat.extend(t)
    return tuple(flat)


def is_canonical(trees: Sequence[TreeCode]) -> bool:
    """True iff the tree sequence is its own lexicographically minimal rotation.

    Linear in the total number of vertices, via the separator flattening.
    """
    return is_least_rotation(flatten_with_separators(trees))


def compare_components(a: ComponentCode, b: ComponentCode) -> int:
    """Lexicographic comparison of tree sequences; -1, 0, or 1."""
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def _leftmost_nontrivial(c: ComponentCode) -> int:
    for i, t in enumerate(c):
        if t[0] > 1:
            return i
    return -1


def _splice_unmerge(c: ComponentCode, h: int) -> ComponentCode:
    # replace c[h] by its unmerging, in place in the sequence
    return c[:h] + unmerge(c[h]) + c[h + 1:]


def cunmerge(c: ComponentCode) -> ComponentCode:
    """Unmerge the leftmost nontrivial tree of a canonical component.

    The result is again canonical (asserted) and has strictly more trees.
    A cycle (all trees trivial) cannot be component-unmerged.
    """
    h = _leftmost_nontrivial(c)
    if h < 0:
        raise ValueError("cannot component-unmerge a cycle")
    out = _splice_unmerge(c, h)
    assert is_canonical(out), "component-unmerge broke canonicity"
    return out


def merges(c: ComponentCode) -> list[ComponentCode]:
    """All canonical one-window merges of ``c`` whose component-unmerge is ``c``.

    A window ``c[l..r]`` (l < r) qualifies when ``c[l]`` is trivial and the
    window is lexicographically nondecreasing; the candidate replaces the
    window by the merged tree. Candidates are kept only if canonical and if
    component-unmerging them gives back exactly ``c``. Returned deduplicated,
    sorted ascending.
    """
    k = len(c)
    out: list[ComponentCode] = []
    for l in range(k - 1):
        if c[l] != TRIVIAL_TREE:
            continue
        size = 1
        flat: list[int] = []
        for r in range(l + 1, k):
            if c[r] < c[r - 1]:
                break  # window (and every extension) no longer nondecreasing
            size += c[r][0]
            flat.extend(c[r])
            cand = c[:l] + ((size, *flat),) + c[r + 1:]
            # cheap structural filter first: undoing the merge must give c back
            h = _leftmost_nontrivial(cand)
            if _splice_unmerge(cand, h) != c:
                continue
            if is_canonical(cand):
                out.append(cand)
    out.sort()
    return [m for i, m in enumerate(out) if i == 0 or m != out[i - 1]]


def _successor_and_backtracks(c: ComponentCode) -> tuple[ComponentSuccessor, int]:
    """Successor plus the number of backtracking (unmerge) iterations taken."""
    assert is_canonical(c), "successor undefined on non-canonical input"
    ms = merges(c)
    if ms:
        return ComponentSuccessor(ms[0], False), 0
    cur = c
    backtracks = 0
    while _leftmost_nontrivial(cur) >= 0:
        backtracks += 1
        u = cunmerge(cur)
        ms = merges(u)
        i = bisect_right(ms, cur)
        if i < len(ms):
            return ComponentSuccessor(ms[i], False), backtracks
        cur = u
    return ComponentSuccessor(cycle(component_size(c) + 1), True), backtracks


def successor_component(c: ComponentCode) -> ComponentSuccessor:
    """Immediate successor of a canonical component in generation order.

    The smallest element of ``merges(c)`` when there is one; otherwise the
    next sibling found while backtracking with :func:`cunmerge`; otherwise the
    component has been the last of its size and the cycle of the next size is
    returned with ``grew`` set.
    """
    return _successor_and_backtracks(c)[0]


def generate_components(n: int) -> Iterator[ComponentCode]:
    """All components over n vertices, in generation order, without repetition.

    Streams with an O(n^3) delay: each output is derived from the previous one
    by one successor computation.
    """
    c = cycle(n)
    while True:
        yield c
        succ = successor_component(c)
        if succ.grew:
            return
        c = succ.code

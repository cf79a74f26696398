"""Isomorphism codes for rooted unordered trees, and the merge/unmerge calculus.

A tree code is a flat tuple of positive integers: the first entry is the
number of vertices, followed by the codes of the immediate subtrees of the
root, arranged in lexicographically nondecreasing order. The single-vertex
tree is ``(1,)``. A valid code has exactly one entry per vertex, so its
length equals its first entry.

Codes are kept flat (subtree boundaries are recovered by size-prefix
scanning) so that comparing two trees is plain tuple comparison, with the
usual convention that a proper prefix sorts before its extensions.
"""

from __future__ import annotations

from typing import Sequence

TreeCode = tuple[int, ...]

#: Code of the single-vertex tree.
TRIVIAL_TREE: TreeCode = (1,)


def tree_size(t: TreeCode) -> int:
    """Number of vertices of the encoded tree."""
    return t[0]


def is_trivial(t: TreeCode) -> bool:
    """True iff ``t`` encodes the single-vertex tree."""
    return t[0] == 1


def subtrees(t: TreeCode) -> tuple[TreeCode, ...]:
    """Codes of the immediate subtrees of the root, in stored order.

    Each subtree code is a contiguous slice of ``t``; the slice starting at
    position ``k`` spans ``t[k]`` entries.
    """
    out = []
    k = 1
    end = len(t)
    while k < end:
        nxt = k + t[k]
        out.append(t[k:nxt])
        k = nxt
    return tuple(out)


def is_valid_tree_code(s: Sequence[int]) -> bool:
    """Total predicate: does ``s`` satisfy every tree-code invariant?

    Checks the size prefix, that subtree sizes tile each slice exactly, and
    that sibling codes are lexicographically nondecreasing, recursively.
    """
    s = tuple(s)
    if not s or s[0] != len(s):
        return False
    if any(not isinstance(x, int) or x < 1 for x in s):
        return False
    spans = [(0, len(s))]
    while spans:
        i, j = spans.pop()
        k = i + 1
        prev = None
        while k < j:
            end = k + s[k]
            if end > j:
                return False
            if prev is not None and s[prev[0]:prev[1]] > s[k:end]:
                return False
            spans.append((k, end))
            prev = (k, end)
            k = end
    return True


def compare_trees(a: TreeCode, b: TreeCode) -> int:
    """Lexicographic comparison; -1, 0, or 1 for a < b, a = b, a > b.

    Equal codes mean isomorphic trees. Plain ``<`` on the tuples gives the
    same order.
    """
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def merge(ts: Sequence[TreeCode]) -> TreeCode:
    """Attach ``ts[1:]`` as immediate subtrees of the trivial tree ``ts[0]``.

    Requires at least two trees, the first trivial, and the sequence
    lexicographically nondecreasing; under those conditions the result is
    again a valid tree code. Raises ValueError otherwise (a violation is a
    caller bug, never data-dependent).
    """
    if len(ts) < 2:
        raise ValueError("merge needs at least two trees")
    if ts[0] != TRIVIAL_TREE:
        raise ValueError("first tree of a merge must be trivial")
    total = 1
    flat: list[int] = []
    prev = ts[0]
    for t in ts[1:]:
        if t < prev:
            raise ValueError("merged trees must be lexicographically nondecreasing")
        prev = t
        total += t[0]
        flat.extend(t)
    return (total, *flat)


def unmerge(t: TreeCode) -> tuple[TreeCode, ...]:
    """Inverse of :func:`merge`: detach the immediate subtrees of ``t``.

    Returns the trivial tree (the former root) followed by the subtree codes
    in stored order, so ``merge(unmerge(t)) == t``. The trivial tree cannot
    be unmerged.
    """
    if t[0] <= 1:
        raise ValueError("cannot unmerge the trivial tree")
    return (TRIVIAL_TREE, *subtrees(t))

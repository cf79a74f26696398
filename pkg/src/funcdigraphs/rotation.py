"""Lexicographically least rotation of a sequence, in linear time."""

from __future__ import annotations

from typing import Sequence


def least_rotation_index(seq: Sequence) -> int:
    """Smallest index k such that ``seq[k:] + seq[:k]`` is minimal.

    Two-pointer variant of the classic least-rotation scan over the doubled
    sequence; O(len(seq)) time.
    """
    n = len(seq)
    if n <= 1:
        return 0
    doubled = tuple(seq) + tuple(seq)
    end = 2 * n
    i = 0
    ans = 0
    while i < n:
        ans = i
        j = i + 1
        k = i
        while j < end and doubled[k] <= doubled[j]:
            if doubled[k] < doubled[j]:
                k = i
            else:
                k += 1
            j += 1
        while i <= k:
            i += j - k
    return ans


def is_least_rotation(seq: Sequence) -> bool:
    """True iff ``seq`` is (one of) its own lexicographically minimal rotations.

    Periodic sequences have several minimal rotations; any of them counts.
    """
    k = least_rotation_index(seq)
    if k == 0:
        return True
    seq = tuple(seq)
    return seq[k:] + seq[:k] == seq

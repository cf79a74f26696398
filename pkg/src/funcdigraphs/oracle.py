"""Brute-force ground truth for small sizes.

Enumerates every endofunction on n vertices, classifies the resulting
digraphs up to isomorphism through the canonicalizer, and realizes codes
back into function tables. Guarded at n <= 8 (8^8 is about 16.7M tables);
intended for verification, not production generation.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, NamedTuple

from .canon import FunctionTable, canonicalize
from .components import ComponentCode
from .digraphs import DigraphCode
from .trees import TreeCode, subtrees

#: Largest n the exhaustive oracle accepts.
ORACLE_MAX_N = 8


class Classification(NamedTuple):
    digraphs: set[DigraphCode]
    components: set[ComponentCode]


def enumerate_tables(n: int) -> Iterator[FunctionTable]:
    """All n^n function tables on n vertices, in odometer order."""
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle enumerates 1 <= n <= {ORACLE_MAX_N}, got {n}")
    return product(range(n), repeat=n)


def classify(n: int) -> Classification:
    """Canonical codes of all digraphs on n vertices, and of the connected ones."""
    digraphs: set[DigraphCode] = set()
    components: set[ComponentCode] = set()
    for f in enumerate_tables(n):
        g = canonicalize(f)
        digraphs.add(g)
        if len(g) == 1:
            components.add(g[0])
    return Classification(digraphs, components)


def _add_tree(t: TreeCode, f: list[int]) -> int:
    # lays down one vertex per code entry; arcs point to the parent
    root = len(f)
    f.append(root)  # placeholder, the caller wires the cycle arc
    stack = [(sub, root) for sub in reversed(subtrees(t))]
    while stack:
        code, parent = stack.pop()
        v = len(f)
        f.append(parent)
        stack.extend((sub, v) for sub in reversed(subtrees(code)))
    return root


def realize(g: DigraphCode) -> FunctionTable:
    """Some function table whose canonicalization is ``g``.

    Vertices are numbered in traversal order: component by component, tree by
    tree along each cycle, root first within a tree.
    """
    f: list[int] = []
    for comp in g:
        roots = [_add_tree(t, f) for t in comp]
        for i, r in enumerate(roots):
            f[r] = roots[(i + 1) % len(roots)]
    return tuple(f)

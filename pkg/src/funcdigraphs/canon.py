"""Canonicalization of explicit endofunctions and isomorphism testing.

A function table is a tuple f of length n with f[i] the image of vertex i.
Canonicalization decomposes the table into components (one limit cycle each,
with in-trees of transient predecessors hanging off the cycle vertices),
encodes every tree, takes the minimal rotation per component, and sorts the
components by size and then by generation order. Two tables get equal codes
exactly when their digraphs are isomorphic.
"""

from __future__ import annotations

from typing import Sequence

from .components import ComponentCode, component_size
from .digraphs import DigraphCode, _rank_of_known_canonical
from .rotation import least_rotation_index
from .trees import TreeCode

FunctionTable = tuple[int, ...]


def _check_table(f: Sequence[int]) -> FunctionTable:
    f = tuple(f)
    n = len(f)
    for i, v in enumerate(f):
        if not isinstance(v, int) or not 0 <= v < n:
            raise ValueError(f"f({i}) = {v} is outside 0..{n - 1}")
    return f


def _cycles_and_children(f: FunctionTable) -> tuple[list[list[int]], list[list[int]]]:
    # colors: 0 unvisited, 1 on the current path, 2 resolved
    n = len(f)
    state = bytearray(n)
    cycles: list[list[int]] = []
    on_cycle = bytearray(n)
    for v0 in range(n):
        if state[v0]:
            continue
        path: list[int] = []
        v = v0
        while state[v] == 0:
            state[v] = 1
            path.append(v)
            v = f[v]
        if state[v] == 1:  # closed a new cycle within this path
            cyc = path[path.index(v):]
            cycles.append(cyc)
            for u in cyc:
                on_cycle[u] = 1
        for u in path:
            state[u] = 2
    children: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        if not on_cycle[u]:
            children[f[u]].append(u)
    return cycles, children


def decompose(f: Sequence[int]) -> list[tuple[list[int], dict[int, list[int]]]]:
    """Split a table into components: (cycle vertices, predecessor forest).

    Cycle vertices are listed in arc order (each one maps to the next); the
    forest maps every vertex of the component to its tree predecessors, i.e.
    its non-cycle preimages.
    """
    f = _check_table(f)
    cycles, children = _cycles_and_children(f)
    out = []
    for cyc in cycles:
        forest: dict[int, list[int]] = {}
        stack = list(cyc)
        while stack:
            v = stack.pop()
            forest[v] = children[v]
            stack.extend(children[v])
        out.append((cyc, forest))
    return out


def tree_code_of(root: int, forest) -> TreeCode:
    """Code of the tree rooted at ``root`` with predecessors from ``forest``.

    ``forest`` maps each vertex to its tree predecessors (any indexable will
    do: the dict from :func:`decompose` or a plain list over all vertices).
    Child codes are computed bottom-up and sorted, so no recursion depth
    limit applies.
    """
    order = [root]
    for v in order:  # grows while iterating: preorder traversal
        order.extend(forest[v])
    codes: dict[int, TreeCode] = {}
    for v in reversed(order):
        kids = sorted(codes[w] for w in forest[v])
        flat = [0]
        for k in kids:
            flat.extend(k)
        flat[0] = len(flat)
        codes[v] = tuple(flat)
    return codes[root]


def component_code_of(trees: Sequence[TreeCode]) -> ComponentCode:
    """Minimal rotation of the tree codes taken in order along the cycle."""
    flat: list[int] = []
    starts: list[int] = []
    for t in trees:
        starts.append(len(flat))
        flat.append(0)
        flat.extend(t)
    k = least_rotation_index(tuple(flat))
    i = starts.index(k)  # a minimal rotation always begins at a separator
    return tuple(trees[i:]) + tuple(trees[:i])


def canonicalize(f: Sequence[int]) -> DigraphCode:
    """Canonical digraph code of the endofunction given by table ``f``.

    Components are sorted by size, then by generation order; generation ranks
    are only consulted for size groups that contain two different codes.
    """
    f = _check_table(f)
    cycles, children = _cycles_and_children(f)
    comps: list[ComponentCode] = []
    for cyc in cycles:
        comps.append(component_code_of([tree_code_of(r, children) for r in cyc]))
    comps.sort(key=component_size)
    out: list[ComponentCode] = []
    i = 0
    while i < len(comps):
        j = i
        size = component_size(comps[i])
        while j < len(comps) and component_size(comps[j]) == size:
            j += 1
        group = comps[i:j]
        if any(c != group[0] for c in group):
            group.sort(key=_rank_of_known_canonical)
        out.extend(group)
        i = j
    return tuple(out)


def isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the two tables describe isomorphic functional digraphs."""
    return canonicalize(a) == canonicalize(b)

"""Empirical delay measurements for the successor algorithms.

The successor algorithms are designed around an O(n^3) delay bound; these
helpers time individual successor calls along a generation stream and fit a
log-log slope across sizes so the cubic bound can be checked empirically.
"""

from __future__ import annotations

import gc
import math
import time
from typing import NamedTuple

from .components import cycle, successor_component
from .digraphs import digraph_size, successor_digraph


class DelayStats(NamedTuple):
    size: int
    calls: int
    max_seconds: float
    mean_seconds: float


def measure_component_delays(n: int, limit: int | None = None) -> DelayStats:
    """Time successor calls along the size-n component stream.

    Covers the whole stream, or the first ``limit`` successor calls. The
    terminating call (the one that grows to size n + 1) is timed too.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    c = cycle(n)
    total = 0
    worst = 0
    calls = 0
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        while limit is None or calls < limit:
            t0 = time.perf_counter_ns()
            succ = successor_component(c)
            dt = time.perf_counter_ns() - t0
            calls += 1
            total += dt
            if dt > worst:
                worst = dt
            if succ.grew:
                break
            c = succ.code
    finally:
        if gc_was_enabled:
            gc.enable()
    return DelayStats(n, calls, worst / 1e9, total / calls / 1e9)


def measure_digraph_delays(n: int, limit: int | None = None) -> DelayStats:
    """Time successor calls along the size-n digraph stream."""
    if n < 1:
        raise ValueError("need at least one vertex")
    g = (cycle(1),) * n
    total = 0
    worst = 0
    calls = 0
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        while limit is None or calls < limit:
            t0 = time.perf_counter_ns()
            succ = successor_digraph(g)
            dt = time.perf_counter_ns() - t0
            calls += 1
            total += dt
            if dt > worst:
                worst = dt
            if digraph_size(succ) != n:
                break
            g = succ
    finally:
        if gc_was_enabled:
            gc.enable()
    return DelayStats(n, calls, worst / 1e9, total / calls / 1e9)


def fit_loglog_slope(points: list[tuple[int, float]]) -> float | None:
    """Least-squares slope of log(time) against log(size); None if underdetermined."""
    if len(points) < 2:
        return None
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]  # clamp at clock resolution
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        return None
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx

"""Command-line front end: stream codes, canonicalize tables, verify, bench.

Output grammar (one object per line, no whitespace): a tree code renders as
``[i1,i2,...]``, a component code as ``[T1,T2,...]``, a digraph code as
``[C1,C2,...]``; the nesting depth distinguishes connected from arbitrary
output. Function tables are read one per line as n whitespace-separated
integers in 0..n-1. Exit codes: 0 success, 1 verification mismatch, 2
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from .bench import fit_loglog_slope, measure_component_delays, measure_digraph_delays
from .canon import canonicalize, isomorphic
from .components import (
    ComponentCode,
    component_size,
    generate_components,
    is_canonical,
    successor_component,
)
from .digraphs import (
    DigraphCode,
    digraph_size,
    generate_digraphs,
    generation_rank,
    successor_digraph,
)
from .oracle import ORACLE_MAX_N, classify
from .trees import is_valid_tree_code

#: CLI refuses sizes above this; machine integers are comfortable below it.
MAX_SIZE = 10**6


class UsageError(Exception):
    """Bad arguments or unparsable input; reported on stderr, exit status 2."""


def render(code) -> str:
    """Compact bracket rendering, identical for the text and json formats."""
    return json.dumps(code, separators=(",", ":"))


def _as_tree(obj, what: str) -> tuple[int, ...]:
    if not isinstance(obj, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        raise UsageError(f"{what}: expected a flat list of integers, got {obj!r}")
    return tuple(obj)


def parse_component(text: str) -> ComponentCode:
    """Parse and fully validate a connected (component) code."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"unparsable code: {e}") from None
    if not isinstance(obj, list) or not obj:
        raise UsageError("a component code is a nonempty list of tree codes")
    trees = tuple(_as_tree(t, f"tree at index {i}") for i, t in enumerate(obj))
    for i, t in enumerate(trees):
        if not is_valid_tree_code(t):
            raise UsageError(f"tree code at index {i} is invalid: {render(list(t))}")
    if not is_canonical(trees):
        raise UsageError("component is not its own lexicographically minimal rotation")
    return trees


def parse_digraph(text: str) -> DigraphCode:
    """Parse and fully validate an arbitrary digraph code."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"unparsable code: {e}") from None
    if not isinstance(obj, list):
        raise UsageError("a digraph code is a list of component codes")
    comps = []
    for i, comp in enumerate(obj):
        if not isinstance(comp, list) or not comp:
            raise UsageError(f"component at index {i} must be a nonempty list of tree codes")
        trees = tuple(_as_tree(t, f"component {i}, tree {j}") for j, t in enumerate(comp))
        for j, t in enumerate(trees):
            if not is_valid_tree_code(t):
                raise UsageError(f"component {i}: tree code at index {j} is invalid")
        if not is_canonical(trees):
            raise UsageError(f"component at index {i} is not its own minimal rotation")
        comps.append(trees)
    sizes = [component_size(c) for c in comps]
    if any(a > b for a, b in zip(sizes, sizes[1:])):
        raise UsageError("component sizes must be nondecreasing")
    for a, b in zip(comps, comps[1:]):
        if component_size(a) == component_size(b) and a != b:
            if generation_rank(a) > generation_rank(b):
                raise UsageError(
                    "equal-size components out of generation order: "
                    f"{render(list(map(list, b)))} precedes {render(list(map(list, a)))}"
                )
    return tuple(comps)


def _resume_components(start: ComponentCode) -> Iterator[ComponentCode]:
    c = start
    while True:
        succ = successor_component(c)
        if succ.grew:
            return
        c = succ.code
        yield c


def _resume_digraphs(start: DigraphCode, n: int) -> Iterator[DigraphCode]:
    g = successor_digraph(start)
    while digraph_size(g) == n:
        yield g
        g = successor_digraph(g)


def cmd_gen(args) -> int:
    n = args.size
    if not 1 <= n <= MAX_SIZE:
        raise UsageError(f"size must be between 1 and {MAX_SIZE}")
    if args.limit is not None and args.limit < 0:
        raise UsageError("limit must be nonnegative")
    if args.connected:
        stream: Iterator = generate_components(n)
        if args.start is not None:
            start = parse_component(args.start)
            if component_size(start) != n:
                raise UsageError(
                    f"start code has {component_size(start)} vertices, expected {n}")
            stream = _resume_components(start)
        tolist = lambda c: [list(t) for t in c]
    else:
        stream = generate_digraphs(n)
        if args.start is not None:
            start = parse_digraph(args.start)
            if digraph_size(start) != n:
                raise UsageError(
                    f"start code has {digraph_size(start)} vertices, expected {n}")
            stream = _resume_digraphs(start, n)
        tolist = lambda g: [[list(t) for t in c] for c in g]

    emitted = 0
    for code in stream:
        if args.limit is not None and emitted >= args.limit:
            break
        emitted += 1
        if not args.count:
            print(render(tolist(code)))
    if args.count:
        print(emitted)
    return 0


def _parse_table(line: str, lineno: int) -> tuple[int, ...]:
    try:
        table = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise UsageError(f"line {lineno}: not a whitespace-separated integer table") from None
    n = len(table)
    for i, v in enumerate(table):
        if not 0 <= v < n:
            raise UsageError(f"line {lineno}: entry f({i}) = {v} is outside 0..{n - 1}")
    return table


def cmd_canon(args) -> int:
    tables = []
    for lineno, line in enumerate(args.file, start=1):
        if not line.strip():
            continue
        tables.append(_parse_table(line, lineno))
    if args.check_iso:
        if len(tables) % 2:
            raise UsageError("--check-iso needs an even number of tables (pairs)")
        for a, b in zip(tables[0::2], tables[1::2]):
            print("iso" if isomorphic(a, b) else "non-iso")
    else:
        for table in tables:
            print(render([[list(t) for t in c] for c in canonicalize(table)]))
    return 0


def cmd_verify(args) -> int:
    n_max = args.n_max
    if n_max < 1:
        raise UsageError("n_max must be at least 1")
    if n_max > ORACLE_MAX_N:
        raise UsageError(f"oracle guard: n_max must be at most {ORACLE_MAX_N}")
    status = 0
    for n in range(1, n_max + 1):
        generated_digraphs = set(generate_digraphs(n))
        generated_components = set(generate_components(n))
        truth = classify(n)
        print(f"n={n}: digraphs={len(generated_digraphs)} components={len(generated_components)}")
        for kind, got, want in (
            ("digraph", generated_digraphs, truth.digraphs),
            ("component", generated_components, truth.components),
        ):
            if got != want:
                diff = min(got.symmetric_difference(want))
                side = "generator" if diff in got else "oracle"
                print(f"n={n}: {kind} sets differ; first differing code "
                      f"(only in {side}): {render(diff)}", file=sys.stderr)
                status = 1
    return status


def cmd_bench(args) -> int:
    if args.limit is not None and args.limit < 1:
        raise UsageError("limit must be at least 1")
    points = []
    for n in args.sizes:
        if n < 1:
            raise UsageError("sizes must be at least 1")
        measure = measure_component_delays if args.connected else measure_digraph_delays
        stats = measure(n, args.limit)
        points.append((n, stats.max_seconds))
        print(f"n={n}: calls={stats.calls} max={stats.max_seconds:.3e}s "
              f"mean={stats.mean_seconds:.3e}s")
    slope = fit_loglog_slope(points)
    print("slope(max): n/a" if slope is None else f"slope(max): {slope:.2f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="funcdigraphs",
        description="Generate functional digraphs up to isomorphism, with polynomial delay.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="stream codes of a given size in generation order")
    gen.add_argument("-n", "--size", type=int, required=True, help="number of vertices")
    gen.add_argument("--connected", action="store_true",
                     help="generate connected digraphs (components) only")
    gen.add_argument("--limit", type=int, default=None, metavar="K",
                     help="stop after K outputs")
    gen.add_argument("--start", default=None, metavar="CODE",
                     help="resume from the successor of this code")
    gen.add_argument("--count", action="store_true", help="print only the number of outputs")
    gen.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (both render the same bracket nesting)")
    gen.set_defaults(func=cmd_gen)

    canon = sub.add_parser("canon", help="canonicalize function tables, one per line")
    canon.add_argument("file", nargs="?", type=argparse.FileType("r"),
                       default=sys.stdin, help="input file (default: stdin)")
    canon.add_argument("--check-iso", action="store_true",
                       help="read tables in pairs and print iso/non-iso")
    canon.set_defaults(func=cmd_canon)

    verify = sub.add_parser("verify", help="compare generators against the brute-force oracle")
    verify.add_argument("n_max", type=int, help=f"check sizes 1..n_max (at most {ORACLE_MAX_N})")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="measure per-successor delay and fit a log-log slope")
    bench.add_argument("sizes", type=int, nargs="+", help="sizes to measure")
    bench.add_argument("--limit", type=int, default=None, metavar="K",
                       help="time at most K successor calls per size (default: full stream)")
    bench.add_argument("--connected", action="store_true",
                       help="bench the component successor instead of the digraph one")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"funcdigraphs: error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the stream; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())

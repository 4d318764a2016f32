"""Graph families and a timing sweep for the flow finders."""

from __future__ import annotations

import csv
import io
import random
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from mbqcflow.causal import find_causal_flow
from mbqcflow.gflow import find_gflow
from mbqcflow.graph import GraphFormatError, OpenGraph, random_open_graph

__all__ = ["BenchRow", "FAMILIES", "make_family", "rows_to_csv", "run_bench", "time_call"]

FAMILIES = ("line", "random", "layered")
LINE_WIDTH = 3


class BenchRow(NamedTuple):
    n: int
    m: int
    k: int
    seconds: float
    depth: int | None


def line_graph(n: int, width: int = LINE_WIDTH) -> OpenGraph:
    """``width`` parallel paths with rungs between neighbouring paths.

    Column ``t`` is joined to column ``t+1`` along every path; at even ``t``
    path ``w+1`` is also joined to path ``w`` one column on.  Column 0 holds
    the inputs, the last column the outputs.  Three paths of three columns is
    the nine-vertex example graph.
    """
    cols = max(1, n // width)
    names = [f"p{w}_{t}" for t in range(cols) for w in range(width)]

    def at(w: int, t: int) -> int:
        return t * width + w

    adj = [0] * len(names)

    def link(u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    for t in range(cols - 1):
        for w in range(width):
            link(at(w, t), at(w, t + 1))
            if t % 2 == 0 and w + 1 < width:
                link(at(w + 1, t), at(w, t + 1))
    inputs = sum(1 << at(w, 0) for w in range(width))
    outputs = sum(1 << at(w, cols - 1) for w in range(width))
    return OpenGraph.from_masks(names, adj, inputs, outputs)


def layered_graph(n: int, seed: int, width: int = 8, extra: float = 0.25) -> OpenGraph:
    """Layers of ``width`` vertices; wires between consecutive layers plus random cross edges."""
    rng = random.Random(seed)
    depth = max(1, n // width)
    names = [f"l{d}_{i}" for d in range(depth) for i in range(width)]
    adj = [0] * len(names)
    for d in range(depth - 1):
        for i in range(width):
            u = d * width + i
            targets = {(d + 1) * width + i}
            targets.update((d + 1) * width + j for j in range(width) if j != i and rng.random() < extra / width)
            for v in targets:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    inputs = (1 << width) - 1
    outputs = ((1 << width) - 1) << ((depth - 1) * width)
    return OpenGraph.from_masks(names, adj, inputs, outputs)


def make_family(family: str, n: int, seed: int = 0) -> OpenGraph:
    if family == "line":
        return line_graph(n)
    if family == "random":
        m = min(2 * n, n * (n - 1) // 2)
        return random_open_graph(n, m, max(1, n // 8), max(1, n // 4), seed)
    if family == "layered":
        return layered_graph(n, seed)
    raise GraphFormatError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def time_call(fn: Callable[[], object], min_time: float = 0.05) -> float:
    """Best wall time of ``fn()`` over as many runs as fit in ``min_time`` (at least one)."""
    best = float("inf")
    total = 0.0
    while True:
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = min(best, dt)
        total += dt
        if total >= min_time:
            return best


def _one(args: tuple[str, int, str, int, float]) -> BenchRow:
    family, n, kind, seed, min_time = args
    graph = make_family(family, n, seed)
    finder = find_causal_flow if kind == "causal" else find_gflow
    flow = finder(graph)
    seconds = time_call(lambda: finder(graph), min_time)
    return BenchRow(graph.n, graph.m, graph.outputs.bit_count(), seconds, None if flow is None else flow.depth)


def run_bench(
    family: str, sizes: Sequence[int], kind: str = "causal", seed: int = 0, jobs: int = 1, min_time: float = 0.05
) -> list[BenchRow]:
    """Time the finder on one instance of ``family`` per size; rows come back sorted by ``n``."""
    if kind not in ("causal", "gflow"):
        raise ValueError(f"unknown flow kind {kind!r}")
    make_family(family, 1, seed)  # fail fast on bad family names
    tasks = [(family, n, kind, seed, min_time) for n in sizes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_one, tasks))
    else:
        rows = [_one(t) for t in tasks]
    return sorted(rows, key=lambda r: r.n)


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BenchRow._fields)
    for r in rows:
        writer.writerow([r.n, r.m, r.k, f"{r.seconds:.6g}", "" if r.depth is None else r.depth])
    return buf.getvalue()

"""Exponential-time reference searches for tiny open graphs.

Nothing here reuses the finders or the GF(2) solver.  A flow is described by
its layer labelling, built bottom-up as a chain of vertex sets
``S_0 < S_1 < ... < S_d = V`` where ``S_k`` holds the layers ``0..k``.  A
vertex may join the next layer when it is an output or when a corrector for
it exists inside the current ``S``; correctors are found by plain
enumeration (of neighbours for causal flow, of subsets for gflow).  Every
chain is explored, so the minimum depth is exact without appealing to any
structural property of maximally delayed flows.
"""

from __future__ import annotations

import threading
from collections.abc import Callable
from functools import lru_cache

from mbqcflow.causal import CausalFlow
from mbqcflow.gflow import GFlow
from mbqcflow.graph import OpenGraph

__all__ = [
    "OracleCancelled",
    "OracleGuardError",
    "brute_force_causal_flow",
    "brute_force_gflow",
    "delay_profiles",
]


class OracleGuardError(ValueError):
    """The graph is larger than the oracle's size guard."""


class OracleCancelled(RuntimeError):
    pass


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _subsets(mask: int):
    """All nonempty submasks of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _causal_corrector(graph: OpenGraph, u: int, later: int) -> int | None:
    for v in range(graph.n):
        if not graph.adj[u] >> v & 1 or graph.inputs >> v & 1 or not later >> v & 1:
            continue
        others = graph.adj[v] & ~(1 << u)
        if others & ~later == 0:
            return v
    return None


def _parity_count(graph: OpenGraph, w: int, k: int) -> int:
    return sum(1 for v in range(graph.n) if k >> v & 1 and graph.adj[w] >> v & 1) % 2


def _gflow_corrector(graph: OpenGraph, u: int, later: int) -> int | None:
    pool = later & ~graph.inputs
    for k in sorted(_subsets(pool), key=lambda s: (s.bit_count(), s)):
        if not _parity_count(graph, u, k):
            continue
        if all(w == u or later >> w & 1 or not _parity_count(graph, w, k) for w in range(graph.n)):
            return k
    return None


class _ChainSearch:
    def __init__(self, graph: OpenGraph, corrector: Callable, cancel: threading.Event | None):
        self.graph = graph
        self.full = (1 << graph.n) - 1
        self.corrector = corrector
        self.cancel = cancel
        self.witness: dict[tuple[int, int], object] = {}
        self.steps = lru_cache(maxsize=None)(self._steps)
        self.min_steps = lru_cache(maxsize=None)(self._min_steps)
        self.profiles = lru_cache(maxsize=None)(self._profiles)

    def _poll(self) -> None:
        if self.cancel is not None and self.cancel.is_set():
            raise OracleCancelled("oracle search cancelled")

    def allowed(self, done: int) -> int:
        """Vertices outside ``done`` that may form (part of) the next layer."""
        self._poll()
        mask = 0
        for u in range(self.graph.n):
            if done >> u & 1:
                continue
            if self.graph.outputs >> u & 1:
                mask |= 1 << u
                continue
            c = self.corrector(self.graph, u, done)
            if c is not None:
                self.witness[(u, done)] = c
                mask |= 1 << u
        return mask

    def _steps(self, done: int) -> tuple[int, ...]:
        return tuple(_subsets(self.allowed(done)))

    def _min_steps(self, done: int) -> int | None:
        """Fewest further layers needed to cover everything from ``done``."""
        if done == self.full:
            return 0
        best = None
        for layer in self.steps(done):
            rest = self.min_steps(done | layer)
            if rest is not None and (best is None or rest + 1 < best):
                best = rest + 1
        return best

    def _profiles(self, done: int) -> frozenset[tuple[int, ...]]:
        if done == self.full:
            return frozenset({()})
        out = set()
        for layer in self.steps(done):
            size = (done | layer).bit_count()
            for tail in self.profiles(done | layer):
                out.add((size, *tail))
        return frozenset(out)

    def best_chain(self) -> list[int] | None:
        if self.min_steps(0) is None:
            return None
        chain, done = [], 0
        while done != self.full:
            target = self.min_steps(done) - 1
            layer = next(s for s in self.steps(done) if self.min_steps(done | s) == target)
            chain.append(layer)
            done |= layer
        return chain


def _guard(graph: OpenGraph, max_n: int) -> None:
    if graph.n > max_n:
        raise OracleGuardError(f"graph has {graph.n} vertices, oracle guard is {max_n}")


def _labels_and_sources(search: _ChainSearch, chain: list[int]):
    n = search.graph.n
    layer = [0] * n
    sources = {}
    done = 0
    for k, block in enumerate(chain):
        for u in _bits(block):
            layer[u] = k
            if not search.graph.outputs >> u & 1:
                sources[u] = search.witness[(u, done)]
        done |= block
    return tuple(layer), sources


def brute_force_causal_flow(
    graph: OpenGraph, max_n: int = 7, cancel: threading.Event | None = None
) -> tuple[CausalFlow, int] | None:
    """Some causal flow of minimum depth and that depth, or ``None``.

    Raises :class:`OracleGuardError` above ``max_n`` vertices and
    :class:`OracleCancelled` once ``cancel`` is set.
    """
    _guard(graph, max_n)
    search = _ChainSearch(graph, _causal_corrector, cancel)
    chain = search.best_chain()
    if chain is None:
        return None
    layer, g = _labels_and_sources(search, chain)
    return CausalFlow(g, layer), len(chain) - 1


def brute_force_gflow(
    graph: OpenGraph, max_n: int = 6, cancel: threading.Event | None = None
) -> tuple[GFlow, int] | None:
    """Some gflow of minimum depth and that depth, or ``None``."""
    _guard(graph, max_n)
    search = _ChainSearch(graph, _gflow_corrector, cancel)
    chain = search.best_chain()
    if chain is None:
        return None
    layer, sets = _labels_and_sources(search, chain)
    g = {u: frozenset(_bits(k)) for u, k in sets.items()}
    return GFlow(g, layer), len(chain) - 1


def delay_profiles(
    graph: OpenGraph, kind: str, max_n: int | None = None, cancel: threading.Event | None = None
) -> frozenset[tuple[int, ...]]:
    """Cumulative layer sizes of every flow of ``graph`` of the given kind.

    Each profile is ``(|V^0|, |V^0 u V^1|, ..., |V|)``.  Empty when no flow
    exists.
    """
    if kind == "causal":
        corrector, default = _causal_corrector, 7
    elif kind == "gflow":
        corrector, default = _gflow_corrector, 6
    else:
        raise ValueError(f"unknown flow kind {kind!r}")
    _guard(graph, default if max_n is None else max_n)
    return _ChainSearch(graph, corrector, cancel).profiles(0)

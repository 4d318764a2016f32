"""Maximally delayed causal flow search.

Works backwards from the outputs.  Each round looks for candidate correctors
with exactly one neighbour that is still uncorrected; those neighbours form
the next layer.  Per-vertex counters of uncorrected neighbours, together
with the XOR of their indices, let a round identify that unique neighbour in
constant time, so the whole search costs ``O(k*n + m)`` for ``k = |O|``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from mbqcflow.graph import OpenGraph, flags_of, iter_bits

__all__ = ["CausalFlow", "find_causal_flow", "search_causal_flow"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CausalFlow:
    """Successor map ``g`` plus a layer label for every vertex.

    ``layer[u] > layer[v]`` means ``u`` is measured before ``v``; outputs of a
    maximally delayed flow sit in layer 0.
    """

    g: dict[int, int]
    layer: tuple[int, ...]

    @property
    def depth(self) -> int:
        return max(self.layer, default=0)


def search_causal_flow(graph: OpenGraph) -> tuple[CausalFlow | None, frozenset[int]]:
    """Run the search and also report the stuck frontier on failure.

    Returns ``(flow, frozenset())`` on success and ``(None, frontier)``
    otherwise, where ``frontier`` is the set of vertices left uncorrected when
    a round made no progress.
    """
    n = graph.n
    nbrs = graph.neighbors
    is_input = flags_of(graph.inputs, n)
    done = flags_of(graph.outputs, n)
    remaining = n - sum(done)
    layer = [0] * n
    g: dict[int, int] = {}

    count = [0] * n
    xor = [0] * n
    for v in range(n):
        c = x = 0
        for w in nbrs[v]:
            if not done[w]:
                c += 1
                x ^= w
        count[v] = c
        xor[v] = x

    candidates = sorted(iter_bits(graph.outputs & ~graph.inputs))
    k = 1
    while remaining:
        corrected: list[int] = []
        used: set[int] = set()
        taken = set()
        for v in candidates:
            if count[v] != 1:
                continue
            u = xor[v]
            if u in taken:
                # u already has a corrector this round; keep v for later
                continue
            taken.add(u)
            g[u] = v
            layer[u] = k
            corrected.append(u)
            used.add(v)
        if not corrected:
            frontier = frozenset(v for v in range(n) if not done[v])
            logger.debug("causal flow search stuck at round %d with %d uncorrected vertices", k, len(frontier))
            return None, frontier
        for u in corrected:
            done[u] = True
            for w in nbrs[u]:
                count[w] -= 1
                xor[w] ^= u
        remaining -= len(corrected)
        candidates = sorted([v for v in candidates if v not in used] + [u for u in corrected if not is_input[u]])
        k += 1
    return CausalFlow(g, tuple(layer)), frozenset()


def find_causal_flow(graph: OpenGraph) -> CausalFlow | None:
    """Return a maximally delayed causal flow of ``graph``, or ``None``.

    The result also has minimum depth among all causal flows.  Ties between
    correctors are broken by ascending vertex index.
    """
    return search_causal_flow(graph)[0]

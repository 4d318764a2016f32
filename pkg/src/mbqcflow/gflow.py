"""Maximally delayed generalized flow (gflow) search.

Round ``k`` asks, for every uncorrected vertex ``u``, whether some set of
already-placed non-input vertices has ``u`` as its only odd neighbour among
the uncorrected ones.  That is the GF(2) system
``Gamma[V\\Out, Out\\I] x = e_u``; all right-hand sides of a round share one
elimination.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from mbqcflow.gf2 import Gf2Matrix, solve_many
from mbqcflow.graph import OpenGraph, gamma_submatrix, iter_bits

__all__ = ["GFlow", "correctable_front", "find_gflow", "search_gflow"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GFlow:
    """Correction-set map ``g`` plus a layer label for every vertex."""

    g: dict[int, frozenset[int]]
    layer: tuple[int, ...]

    @property
    def depth(self) -> int:
        return max(self.layer, default=0)


def correctable_front(graph: OpenGraph, out: int) -> dict[int, frozenset[int]]:
    """Vertices outside ``out`` that can be corrected using ``out`` minus inputs.

    Maps each such vertex to the correction set found by the solver.
    """
    rows = graph.all_mask & ~out
    if not rows:
        return {}
    a, row_ids, col_ids = gamma_submatrix(graph, rows, out & ~graph.inputs)
    rhs = Gf2Matrix.identity(len(row_ids))
    front = {}
    for u, x in zip(row_ids, solve_many(a, rhs)):
        if x is not None:
            front[u] = frozenset(col_ids[j] for j in iter_bits(x))
    return front


def search_gflow(graph: OpenGraph) -> tuple[GFlow | None, frozenset[int]]:
    """Like :func:`find_gflow`, but also returns the stuck frontier on failure."""
    out = graph.outputs
    layer = [0] * graph.n
    g: dict[int, frozenset[int]] = {}
    k = 1
    while out != graph.all_mask:
        front = correctable_front(graph, out)
        if not front:
            frontier = frozenset(iter_bits(graph.all_mask & ~out))
            logger.debug("gflow search stuck at round %d with %d uncorrected vertices", k, len(frontier))
            return None, frontier
        for u, corr in front.items():
            g[u] = corr
            layer[u] = k
            out |= 1 << u
        k += 1
    return GFlow(g, tuple(layer)), frozenset()


def find_gflow(graph: OpenGraph) -> GFlow | None:
    """Return a maximally delayed gflow of ``graph``, or ``None`` if there is none.

    Parameters
    ----------
    graph : OpenGraph
        The open graph; inputs and outputs may overlap.

    Returns
    -------
    GFlow or None
        Correction sets are the solver's zero-free-variable solutions, so the
        result is deterministic.  Its depth is minimal over all gflows.
    """
    return search_gflow(graph)[0]

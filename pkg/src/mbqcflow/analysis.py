"""Checking, layering and comparing flows.

Flows carry a layer label per vertex and the order they encode is
``u < v  <=>  layer[u] > layer[v]`` (``u`` measured before ``v``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Union

from mbqcflow.causal import CausalFlow
from mbqcflow.gflow import GFlow, correctable_front
from mbqcflow.graph import OpenGraph, iter_bits, mask_of, odd_mask

__all__ = [
    "Delay",
    "FlowStructureError",
    "LayerPartition",
    "VerifyReport",
    "Violation",
    "causal_front",
    "causal_to_gflow",
    "check_maximally_delayed",
    "edge_bound_holds",
    "is_more_delayed",
    "layer_partition",
    "verify_causal_flow",
    "verify_flow",
    "verify_gflow",
]

Flow = Union[CausalFlow, GFlow]


class FlowStructureError(ValueError):
    """The flow does not even describe the vertex set of the graph."""


class Violation(NamedTuple):
    condition: str
    witness: tuple[int, ...]
    layer: int | None = None


@dataclass
class VerifyReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def to_dict(self, graph: OpenGraph) -> dict:
        out = []
        for v in self.violations:
            item = {"condition": v.condition, "witness": [graph.names[i] for i in v.witness]}
            if v.layer is not None:
                item["layer"] = v.layer
            out.append(item)
        return {"ok": self.ok, "violations": out}


@dataclass(frozen=True)
class LayerPartition:
    """Layers ``V^0 .. V^d`` of a flow; ``V^0`` is measured last."""

    layers: tuple[frozenset[int], ...]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.layers)

    def cumulative(self) -> list[int]:
        sizes, total = [], 0
        for layer in self.layers:
            total += len(layer)
            sizes.append(total)
        return sizes

    def label_of(self) -> dict[int, int]:
        return {v: k for k, layer in enumerate(self.layers) for v in layer}


class Delay(str, Enum):
    MORE = "more"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _check_structure(graph: OpenGraph, flow: Flow) -> None:
    n = graph.n
    if len(flow.layer) != n:
        raise FlowStructureError(f"flow labels {len(flow.layer)} vertices, graph has {n}")
    for lab in flow.layer:
        if not isinstance(lab, int) or lab < 0:
            raise FlowStructureError(f"invalid layer label {lab!r}")
    for u, target in flow.g.items():
        targets = target if isinstance(flow, GFlow) else (target,)
        for v in (u, *targets):
            if not isinstance(v, int) or not 0 <= v < n:
                raise FlowStructureError(f"flow refers to vertex {v!r} outside the graph")


def _domain_violations(graph: OpenGraph, flow: Flow) -> list[Violation]:
    found = []
    for u in range(graph.n):
        is_output = graph.outputs >> u & 1
        if is_output and u in flow.g:
            found.append(Violation("domain", (u,)))
        elif not is_output and u not in flow.g:
            found.append(Violation("domain", (u,)))
    return found


def verify_causal_flow(graph: OpenGraph, flow: CausalFlow) -> VerifyReport:
    """Check ``flow`` against the causal-flow conditions.

    C1: ``u`` before ``g(u)``.  C2: every other neighbour of ``g(u)`` after
    ``u``.  C3: ``g(u)`` adjacent to ``u``.  Also reports ``domain``
    (``g`` not defined exactly on non-outputs) and ``range`` (``g(u)`` an input).

    Raises
    ------
    FlowStructureError
        If labels or ``g`` do not match the graph's vertex set.
    """
    _check_structure(graph, flow)
    layer = flow.layer
    report = VerifyReport(_domain_violations(graph, flow))
    add = report.violations.append
    for u, v in sorted(flow.g.items()):
        if graph.inputs >> v & 1:
            add(Violation("range", (u, v)))
        if not layer[u] > layer[v]:
            add(Violation("C1", (u, v)))
        for w in graph.neighbors[v]:
            if w != u and not layer[u] > layer[w]:
                add(Violation("C2", (u, w)))
        if not graph.adj[v] >> u & 1:
            add(Violation("C3", (u, v)))
    return report


def verify_gflow(graph: OpenGraph, flow: GFlow) -> VerifyReport:
    """Check ``flow`` against the gflow conditions (same ids as the causal check)."""
    _check_structure(graph, flow)
    layer = flow.layer
    report = VerifyReport(_domain_violations(graph, flow))
    add = report.violations.append
    for u, corr in sorted(flow.g.items()):
        if not corr:
            add(Violation("range", (u,)))
        for j in sorted(corr):
            if graph.inputs >> j & 1:
                add(Violation("range", (u, j)))
            if not layer[u] > layer[j]:
                add(Violation("C1", (u, j)))
        odd = odd_mask(graph, mask_of(corr))
        for j in iter_bits(odd & ~(1 << u)):
            if not layer[u] > layer[j]:
                add(Violation("C2", (u, j)))
        if not odd >> u & 1:
            add(Violation("C3", (u,)))
    return report


def verify_flow(graph: OpenGraph, flow: Flow) -> VerifyReport:
    if isinstance(flow, GFlow):
        return verify_gflow(graph, flow)
    return verify_causal_flow(graph, flow)


def layer_partition(flow: Flow) -> LayerPartition:
    """Group vertices by label.

    With contiguous labels ``0..d`` the groups are exactly what repeatedly
    stripping the maximal elements of the encoded order produces, so a gap in
    the labels is rejected.
    """
    depth = flow.depth
    groups: list[set[int]] = [set() for _ in range(depth + 1)]
    for v, lab in enumerate(flow.layer):
        groups[lab].add(v)
    empty = [k for k, grp in enumerate(groups) if not grp]
    if empty and flow.layer:
        raise FlowStructureError(f"layer {empty[0]} is empty; labels must be contiguous")
    return LayerPartition(tuple(frozenset(grp) for grp in groups))


def is_more_delayed(a: LayerPartition, b: LayerPartition) -> Delay:
    """Compare cumulative layer sizes of ``a`` against ``b`` pointwise.

    Past its own depth a partition's cumulative size stays at ``|V|``.
    """
    if a.vertices != b.vertices:
        raise ValueError("partitions cover different vertex sets")
    ca, cb = a.cumulative(), b.cumulative()
    size = len(a.vertices)
    length = max(len(ca), len(cb))
    ca += [size] * (length - len(ca))
    cb += [size] * (length - len(cb))
    ge = all(x >= y for x, y in zip(ca, cb))
    le = all(x <= y for x, y in zip(ca, cb))
    if ge and le:
        return Delay.EQUAL
    if ge:
        return Delay.MORE
    if le:
        return Delay.LESS
    return Delay.INCOMPARABLE


def causal_front(graph: OpenGraph, out: int) -> dict[int, int]:
    """Vertices outside ``out`` that are the sole outside neighbour of some non-input in ``out``.

    Maps each to the smallest such corrector.
    """
    rest = graph.all_mask & ~out
    front: dict[int, int] = {}
    for v in iter_bits(out & ~graph.inputs):
        r = graph.adj[v] & rest
        if r and not r & (r - 1):
            front.setdefault(r.bit_length() - 1, v)
    return front


def check_maximally_delayed(graph: OpenGraph, flow: Flow) -> VerifyReport:
    """Check the layer structure every maximally delayed flow must have.

    Layer 0 must equal the outputs.  Then, peeling one layer at a time, layer
    ``k`` must be exactly the set of vertices correctable from the union of
    layers ``< k``: by a single non-input vertex whose only remaining
    neighbour is the target (causal), or by a set of non-input vertices
    whose odd neighbourhood meets the remaining vertices only in the target
    (gflow, decided by GF(2) solving).  Violations use the ids ``layer0``
    and ``front``, with the symmetric difference as witness.
    """
    part = layer_partition(flow)
    report = VerifyReport()
    outputs = graph.outputs
    first = mask_of(part.layers[0])
    if first != outputs:
        report.violations.append(Violation("layer0", tuple(iter_bits(first ^ outputs)), 0))
    front_of = correctable_front if isinstance(flow, GFlow) else causal_front
    out = first
    for k in range(1, part.depth + 1):
        expected = mask_of(front_of(graph, out))
        actual = mask_of(part.layers[k])
        if expected != actual:
            report.violations.append(Violation("front", tuple(iter_bits(expected ^ actual)), k))
        out |= actual
    return report


def causal_to_gflow(flow: CausalFlow) -> GFlow:
    return GFlow({u: frozenset((v,)) for u, v in flow.g.items()}, flow.layer)


def edge_bound_holds(graph: OpenGraph) -> bool:
    """Whether ``m <= (n-1)k - k(k-1)/2`` with ``k = |O|``.

    Any open graph with a causal flow satisfies it.
    """
    n, k = graph.n, graph.outputs.bit_count()
    return graph.m <= (n - 1) * k - k * (k - 1) // 2

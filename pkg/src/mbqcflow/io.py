"""JSON flow documents."""

from __future__ import annotations

import json
from dataclasses import dataclass

from mbqcflow.analysis import FlowStructureError
from mbqcflow.causal import CausalFlow
from mbqcflow.gflow import GFlow
from mbqcflow.graph import OpenGraph

__all__ = ["FlowDocument", "KINDS"]

KINDS = ("causal", "gflow")


@dataclass(frozen=True)
class FlowDocument:
    """Name-based flow record, the on-disk form of a search result.

    ``g`` maps each corrected vertex to a list of correctors (a singleton
    list for causal flow).  When ``exists`` is false the other fields are
    ``None`` and are left out of the JSON.
    """

    kind: str
    exists: bool
    g: dict[str, list[str]] | None = None
    layer: dict[str, int] | None = None
    depth: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown flow kind {self.kind!r}")

    @classmethod
    def from_flow(cls, graph: OpenGraph, kind: str, flow: CausalFlow | GFlow | None) -> FlowDocument:
        if flow is None:
            return cls(kind, False)
        names = graph.names
        g = {}
        for u in sorted(flow.g):
            target = flow.g[u]
            members = sorted(target) if isinstance(flow, GFlow) else [target]
            g[names[u]] = [names[v] for v in members]
        layer = {names[v]: lab for v, lab in enumerate(flow.layer)}
        return cls(kind, True, g, layer, flow.depth)

    def to_flow(self, graph: OpenGraph) -> CausalFlow | GFlow | None:
        """Rebuild the index-based flow, checking names against ``graph``."""
        if not self.exists:
            return None

        def index(name: str) -> int:
            if name not in graph.index:
                raise FlowStructureError(f"flow refers to unknown vertex {name!r}")
            return graph.index[name]

        labels = {index(k): v for k, v in (self.layer or {}).items()}
        missing = [graph.names[v] for v in range(graph.n) if v not in labels]
        if missing:
            raise FlowStructureError(f"no layer given for vertex {missing[0]!r}")
        layer = tuple(labels[v] for v in range(graph.n))
        if self.kind == "gflow":
            g = {index(u): frozenset(index(v) for v in vs) for u, vs in (self.g or {}).items()}
            return GFlow(g, layer)
        g1 = {}
        for u, vs in (self.g or {}).items():
            if len(vs) != 1:
                raise FlowStructureError(f"causal flow entry for {u!r} must name exactly one vertex")
            g1[index(u)] = index(vs[0])
        return CausalFlow(g1, layer)

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind, "exists": self.exists}
        if self.exists:
            doc.update(g=self.g, layer=self.layer, depth=self.depth)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str | bytes) -> FlowDocument:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FlowStructureError(f"malformed flow document: {exc}") from None
        if not isinstance(doc, dict) or "kind" not in doc or "exists" not in doc:
            raise FlowStructureError("flow document needs 'kind' and 'exists'")
        if not doc["exists"]:
            return cls(doc["kind"], False)
        try:
            g = {str(k): [str(x) for x in v] for k, v in doc["g"].items()}
            layer = {str(k): int(v) for k, v in doc["layer"].items()}
            depth = int(doc["depth"])
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise FlowStructureError(f"malformed flow document: {exc}") from None
        return cls(doc["kind"], True, g, layer, depth)

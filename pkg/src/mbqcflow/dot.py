"""Graphviz export.

Inputs are drawn as boxes and outputs as double circles.  With a flow, each
layer becomes one ``rank=same`` group and the correction map is overlaid as
coloured arrows.
"""

from __future__ import annotations

from mbqcflow.causal import CausalFlow
from mbqcflow.gflow import GFlow
from mbqcflow.graph import OpenGraph

__all__ = ["to_dot"]


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: OpenGraph, flow: CausalFlow | GFlow | None = None, name: str = "open_graph") -> str:
    q = [_quote(x) for x in graph.names]
    lines = [f"graph {name} {{"]
    if flow is not None:
        lines.append("  rankdir=LR;")
    for v in range(graph.n):
        attrs = []
        is_in = graph.inputs >> v & 1
        is_out = graph.outputs >> v & 1
        if is_in:
            attrs.append("shape=box")
        if is_out:
            attrs.append("peripheries=2" if is_in else "shape=doublecircle")
        lines.append(f"  {q[v]}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    for u, v in graph.edges():
        lines.append(f"  {q[u]} -- {q[v]};")
    if flow is not None:
        for k in range(flow.depth, -1, -1):
            members = " ".join(q[v] + ";" for v in range(graph.n) if flow.layer[v] == k)
            if members:
                lines.append(f"  {{ rank=same; {members} }}  // layer {k}")
        for u in sorted(flow.g):
            targets = sorted(flow.g[u]) if isinstance(flow, GFlow) else [flow.g[u]]
            for v in targets:
                lines.append(f"  {q[u]} -- {q[v]} [dir=forward, color=blue, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"

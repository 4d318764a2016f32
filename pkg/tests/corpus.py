"""Test corpora of small open graphs and a per-instance evaluation record."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import networkx as nx

from mbqcflow import (
    OpenGraph,
    causal_to_gflow,
    check_maximally_delayed,
    edge_bound_holds,
    find_causal_flow,
    find_gflow,
    layer_partition,
    random_open_graph,
    verify_causal_flow,
    verify_gflow,
)
from mbqcflow.oracle import brute_force_causal_flow, brute_force_gflow, delay_profiles

CORPUS_SEED = 20081
RANDOM_COUNT = 1000


def graph_from_nx(g: nx.Graph, inputs: int, outputs: int) -> OpenGraph:
    nodes = sorted(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    adj = [0] * len(nodes)
    for a, b in g.edges:
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    return OpenGraph.from_masks([f"v{i}" for i in range(len(nodes))], adj, inputs, outputs)


def exhaustive_connected(max_n: int = 5):
    """Every connected graph on 1..max_n vertices (up to isomorphism) with every choice of I and O."""
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if not 1 <= n <= max_n or not nx.is_connected(g):
            continue
        for inputs, outputs in itertools.product(range(1 << n), repeat=2):
            yield graph_from_nx(g, inputs, outputs)


def random_corpus(max_n: int, count: int = RANDOM_COUNT, seed: int = CORPUS_SEED):
    rng = random.Random(seed * 31 + max_n)
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, min(n * (n - 1) // 2, 2 * n))
        k_in = rng.randint(0, n)
        k_out = rng.randint(1, n)
        yield random_open_graph(n, m, k_in, k_out, rng.getrandbits(64))


def _more_delayed(a: tuple[int, ...], b: tuple[int, ...], size: int) -> bool:
    length = max(len(a), len(b))
    a = a + (size,) * (length - len(a))
    b = b + (size,) * (length - len(b))
    return all(x >= y for x, y in zip(a, b)) and a != b


def _shifted(graph: OpenGraph, flow, finder):
    """Rerun ``finder`` with layer 1 promoted to outputs; compare against labels shifted by one."""
    layer1 = sum(1 << v for v, lab in enumerate(flow.layer) if lab == 1)
    if not layer1:
        return True
    again = finder(graph.with_outputs(graph.outputs | layer1))
    if again is None:
        return False
    expected = tuple(max(lab - 1, 0) for lab in flow.layer)
    return again.layer == expected


@dataclass
class Record:
    graph: OpenGraph
    problems: dict[str, list[str]] = field(default_factory=dict)
    causal_exists: bool = False
    gflow_exists: bool = False

    def fail(self, criterion: str, why: str) -> None:
        self.problems.setdefault(criterion, []).append(why)


def evaluate(graph: OpenGraph, *, check_causal: bool = True, check_gflow: bool = True) -> Record:
    """Run both finders and both oracles on ``graph`` and record every criterion breach."""
    rec = Record(graph)
    n = graph.n
    cf = find_causal_flow(graph)
    gf = find_gflow(graph)
    rec.causal_exists = cf is not None
    rec.gflow_exists = gf is not None

    if check_causal:
        oracle = brute_force_causal_flow(graph)
        if (oracle is None) != (cf is None):
            rec.fail("existence", f"causal: algorithm {cf is not None}, oracle {oracle is not None}")
        if oracle is not None and not verify_causal_flow(graph, oracle[0]).ok:
            rec.fail("existence", "causal oracle witness fails verification")
        if cf is not None:
            if not verify_causal_flow(graph, cf).ok:
                rec.fail("existence", "causal flow fails verification")
            if oracle is not None and oracle[1] != cf.depth:
                rec.fail("depth", f"causal depth {cf.depth} != oracle {oracle[1]}")
            mine = tuple(layer_partition(cf).cumulative())
            if any(_more_delayed(p, mine, n) for p in delay_profiles(graph, "causal")):
                rec.fail("depth", "an enumerated causal flow is strictly more delayed")
            if not check_maximally_delayed(graph, cf).ok:
                rec.fail("structure", "causal flow fails front characterization")
            if not _shifted(graph, cf, find_causal_flow):
                rec.fail("structure", "causal peel-and-rerun mismatch")
        if not edge_bound_holds(graph) and cf is not None:
            rec.fail("edge_bound", "causal flow found above the edge bound")

    if check_gflow:
        oracle = brute_force_gflow(graph)
        if (oracle is None) != (gf is None):
            rec.fail("existence", f"gflow: algorithm {gf is not None}, oracle {oracle is not None}")
        if oracle is not None and not verify_gflow(graph, oracle[0]).ok:
            rec.fail("existence", "gflow oracle witness fails verification")
        if gf is not None:
            if not verify_gflow(graph, gf).ok:
                rec.fail("existence", "gflow fails verification")
            if oracle is not None and oracle[1] != gf.depth:
                rec.fail("depth", f"gflow depth {gf.depth} != oracle {oracle[1]}")
            mine = tuple(layer_partition(gf).cumulative())
            if any(_more_delayed(p, mine, n) for p in delay_profiles(graph, "gflow")):
                rec.fail("depth", "an enumerated gflow is strictly more delayed")
            if not check_maximally_delayed(graph, gf).ok:
                rec.fail("structure", "gflow fails front characterization")
            if not _shifted(graph, gf, find_gflow):
                rec.fail("structure", "gflow peel-and-rerun mismatch")

    if cf is not None:
        if gf is None:
            rec.fail("dominance", "causal flow exists but no gflow")
        else:
            if not verify_gflow(graph, causal_to_gflow(cf)).ok:
                rec.fail("dominance", "singleton embedding fails gflow verification")
            if gf.depth > cf.depth:
                rec.fail("dominance", f"gflow depth {gf.depth} > causal depth {cf.depth}")
    return rec

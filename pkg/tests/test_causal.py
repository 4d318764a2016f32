import pytest
from conftest import FIG1_CAUSAL, FIG1_CAUSAL_LAYERS, load
from hypothesis import given, settings
from hypothesis import strategies as st

from mbqcflow import OpenGraph, find_causal_flow, parse_open_graph, random_open_graph, verify_causal_flow
from mbqcflow.analysis import causal_front
from mbqcflow.causal import search_causal_flow
from mbqcflow.oracle import brute_force_causal_flow


def named(graph, flow):
    return {graph.names[u]: graph.names[v] for u, v in flow.g.items()}, {
        graph.names[v]: lab for v, lab in enumerate(flow.layer)
    }


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, n * (n - 1) // 2))
    return random_open_graph(n, m, draw(st.integers(0, n)), draw(st.integers(1, n)), draw(st.integers(0, 2**32)))


def test_fig1(fig1):
    flow = find_causal_flow(fig1)
    g, layers = named(fig1, flow)
    assert g == FIG1_CAUSAL
    assert layers == FIG1_CAUSAL_LAYERS
    assert flow.depth == 4


def test_all_outputs():
    g = parse_open_graph({"vertices": ["x", "y"], "edges": [], "outputs": ["x", "y"]})
    flow = find_causal_flow(g)
    assert flow.g == {} and flow.depth == 0


def test_alternating_six_cycle(c6_alt):
    assert find_causal_flow(c6_alt) is None
    assert brute_force_causal_flow(c6_alt) is None


def test_isolated_non_output():
    g = parse_open_graph({"vertices": ["o", "x"], "edges": [], "outputs": ["o"]})
    flow, frontier = search_causal_flow(g)
    assert flow is None
    assert frontier == {1}


def test_frontier_is_what_remains(c6_alt):
    _, frontier = search_causal_flow(c6_alt)
    # round 1 can correct nothing: every output has two uncorrected neighbours
    assert {c6_alt.names[v] for v in frontier} == {"v1", "v3", "v5"}


def test_two_correctors_same_target():
    g = parse_open_graph({"vertices": ["u", "o1", "o2"], "edges": [["u", "o1"], ["u", "o2"]], "outputs": ["o1", "o2"]})
    flow = find_causal_flow(g)
    assert flow.g == {0: 1}
    assert verify_causal_flow(g, flow).ok


def test_skipped_corrector_is_never_needed_again():
    # o1 and o2 both see only u in round 1; o1 wins.  Once u is corrected o2
    # has no uncorrected neighbour left, so the tie cannot cost a later round.
    g = parse_open_graph(
        {
            "vertices": ["u", "w", "o1", "o2"],
            "edges": [["u", "o1"], ["u", "o2"], ["u", "w"]],
            "outputs": ["o1", "o2"],
        }
    )
    flow = find_causal_flow(g)
    assert verify_causal_flow(g, flow).ok
    assert flow.g == {0: 2, 1: 0}
    assert flow.depth == brute_force_causal_flow(g)[1] == 2


def test_complete_graph_no_flow():
    names = [str(i) for i in range(5)]
    edges = [(a, b) for i, a in enumerate(names) for b in names[i + 1 :]]
    g = OpenGraph.from_edges(names, edges, [], ["0"])
    assert find_causal_flow(g) is None


def test_inputs_never_correct():
    # only corrector available for x is the output/input vertex y
    g = parse_open_graph({"vertices": ["x", "y"], "edges": [["x", "y"]], "inputs": ["y"], "outputs": ["y"]})
    assert find_causal_flow(g) is None


def test_deterministic(fig1):
    assert find_causal_flow(fig1) == find_causal_flow(fig1)


@settings(max_examples=300)
@given(small_graphs())
def test_sound_and_layer0(graph):
    flow = find_causal_flow(graph)
    if flow is None:
        return
    assert verify_causal_flow(graph, flow).ok
    assert {v for v, lab in enumerate(flow.layer) if lab == 0} == graph.output_set()
    assert len(set(flow.g.values())) == len(flow.g)


@settings(max_examples=300)
@given(small_graphs())
def test_layers_follow_front(graph):
    flow = find_causal_flow(graph)
    if flow is None:
        return
    out = graph.outputs
    for k in range(1, flow.depth + 1):
        layer = {v for v, lab in enumerate(flow.layer) if lab == k}
        assert set(causal_front(graph, out)) == layer
        out |= sum(1 << v for v in layer)


@settings(max_examples=200)
@given(small_graphs())
def test_peel_and_rerun(graph):
    flow = find_causal_flow(graph)
    if flow is None or flow.depth == 0:
        return
    layer1 = sum(1 << v for v, lab in enumerate(flow.layer) if lab == 1)
    again = find_causal_flow(graph.with_outputs(graph.outputs | layer1))
    assert again.layer == tuple(max(lab - 1, 0) for lab in flow.layer)


@pytest.mark.parametrize("name", ["fig1.json", "gflow_only.json", "crossing.json"])
def test_matches_oracle_on_golden(name):
    graph = load(name)
    flow = find_causal_flow(graph)
    oracle = brute_force_causal_flow(graph, max_n=9)
    assert (flow is None) == (oracle is None)
    if flow is not None:
        assert flow.depth == oracle[1]

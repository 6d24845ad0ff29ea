import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from scrollinv import DomainError, InvariantError, ParameterError, ResourceError
from scrollinv import degeneration as dgn
from scrollinv import dualgraph as dgr
from scrollinv.degeneration import ComponentKind
from scrollinv.dualgraph import DualGraph


def _oracle_graph(g: int) -> nx.Graph:
    """Pairwise incidence rules applied to the enumerated components, by name."""
    d = 2 * g + 4 if g % 2 == 0 else 2 * g + 5  # any even-parity degree in range
    comps = dgn.limit_components_even(d, g)
    graph = nx.Graph()
    graph.add_nodes_from(c.ident for c in comps)
    for a, b in itertools.combinations(comps, 2):
        if a.kind is ComponentKind.XI and b.kind is ComponentKind.XI:
            meet = a.labeling.hamming(b.labeling) == 1
        elif a.kind is ComponentKind.XI_PRIME and b.kind is ComponentKind.XI_PRIME:
            meet = False
        else:
            xi, xip = (a, b) if a.kind is ComponentKind.XI else (b, a)
            meet = xi.labeling.restrict_away(xip.conic_quadric) == xip.labeling
        if meet:
            graph.add_edge(a.ident, b.ident)
    return graph


def _as_nx(graph: DualGraph) -> nx.Graph:
    names = dgr.vertex_names(graph.g)
    out = nx.Graph()
    out.add_nodes_from(names)
    out.add_edges_from((names[u], names[v]) for u, v in graph.edges.tolist())
    return out


@pytest.mark.parametrize("g", range(1, 8))
def test_limit_graph_matches_incidence_oracle(g):
    ours = _as_nx(dgr.build_limit_graph(g))
    oracle = _oracle_graph(g)
    assert set(ours.nodes) == set(oracle.nodes)
    assert {frozenset(e) for e in ours.edges} == {frozenset(e) for e in oracle.edges}


@pytest.mark.parametrize("g", range(1, 17))
def test_closed_forms(g):
    graph = dgr.build_limit_graph(g)
    assert graph.n_vertices == 2 ** (g - 1) * (g + 2)
    assert graph.n_edges == 3 * g * 2 ** (g - 1)
    assert dgr.euler_char(graph) == 2**g * (1 - g)
    assert dgr.arithmetic_genus(graph) == 2**g * (g - 1) + 1 == dgr.genus_formula(g)
    assert graph.is_connected()
    degs = graph.degrees()
    n_xi = 2**g
    assert set(degs[:n_xi].tolist()) == {2 * g}
    assert set(degs[n_xi:].tolist()) == {2}


def test_g2_example():
    graph = dgr.build_limit_graph(2)
    assert (graph.n_vertices, graph.n_edges, dgr.euler_char(graph)) == (8, 12, -4)
    assert dgr.arithmetic_genus(graph) == 5


@pytest.mark.parametrize("g", range(1, 7))
def test_networkx_agrees(g):
    graph = dgr.build_limit_graph(g)
    nxg = _as_nx(graph)
    assert nx.number_connected_components(nxg) == graph.n_components() == 1
    # cycle rank of a connected graph is e - v + 1, the genus
    assert len(nx.cycle_basis(nxg)) == dgr.genus_formula(g)


def test_edges_sorted_and_simple():
    graph = dgr.build_limit_graph(5)
    e = graph.edges
    assert np.all(e[:, 0] < e[:, 1])
    assert [tuple(r) for r in e.tolist()] == sorted(tuple(r) for r in e.tolist())
    assert len({tuple(r) for r in e.tolist()}) == len(e)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rnd):
    graph = dgr.build_limit_graph(g)
    perm = list(range(graph.n_vertices))
    rnd.shuffle(perm)
    other = graph.relabel(perm)
    assert other.n_edges == graph.n_edges
    assert dgr.euler_char(other) == dgr.euler_char(graph)
    assert dgr.arithmetic_genus(other) == dgr.arithmetic_genus(graph)
    assert sorted(other.degrees().tolist()) == sorted(graph.degrees().tolist())


def test_single_vertex_and_disconnected():
    single = DualGraph.from_edges(1, [])
    assert dgr.euler_char(single) == 1 and dgr.arithmetic_genus(single) == 0
    pair = DualGraph.from_edges(2, [])
    assert not pair.is_connected()
    with pytest.raises(DomainError):
        dgr.arithmetic_genus(pair)
    tri = DualGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert dgr.arithmetic_genus(tri) == 1


def test_graph_validation():
    with pytest.raises(ParameterError):
        DualGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ParameterError):
        DualGraph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ParameterError):
        DualGraph.from_edges(2, [(0, 2)])
    with pytest.raises(DomainError):
        DualGraph(2, np.array([[0, 1]]), component_genera=np.array([0, 1]))
    with pytest.raises(ParameterError):
        dgr.build_limit_graph(0)
    with pytest.raises(ResourceError):
        dgr.build_limit_graph(17)
    with pytest.raises(ResourceError):
        dgr.build_limit_graph(4, cap=10)
    with pytest.raises(ParameterError):
        DualGraph.from_edges(3, []).relabel([0, 0, 1])


def test_component_lookup():
    graph = dgr.build_limit_graph(3)
    c = graph.component(0, d=11)
    assert c.kind is ComponentKind.XI and c.k == 0 and c.family_dim == 4
    c = graph.component(8)
    assert c.kind is ComponentKind.XI_PRIME and c.conic_quadric == 1 and c.family_dim == 2
    assert c.degree_on_w == -1
    assert graph.component(8, d=13).degree_on_w == dgn.w_degree(13, 3, 1, dgn.Parity.EVEN)
    assert graph.name(19) == "xip_3_11"
    with pytest.raises(ParameterError):
        graph.component(20)
    with pytest.raises(DomainError):
        DualGraph.from_edges(1, []).component(0)


def test_genus_both_ways():
    out = dgr.genus_both_ways(3)
    assert out["genus_graph"] == out["genus_formula"] == 17


def test_genus_both_ways_detects_mismatch(monkeypatch):
    monkeypatch.setattr(dgr, "genus_formula", lambda g: 0)
    with pytest.raises(InvariantError):
        dgr.genus_both_ways(2)


def test_dot_export():
    text = dgr.to_dot(dgr.build_limit_graph(1))
    assert text == (
        "graph limit_g1 {\n  xi_0;\n  xi_1;\n  xip_1_;\n"
        "  xi_0 -- xi_1;\n  xi_0 -- xip_1_;\n  xi_1 -- xip_1_;\n}\n"
    )
    assert dgr.to_dot(dgr.build_limit_graph(3)) == dgr.to_dot(dgr.build_limit_graph(3))


# -- monodromy -----------------------------------------------------------------


@pytest.mark.parametrize("g", range(1, 4))
def test_group_order_matches_sympy(g):
    t = dgr.monodromy_transpositions(g)
    t.check()
    group = PermutationGroup([Permutation(a, b, size=t.n_symbols) for a, b in t.swaps.tolist()])
    assert dgr.generated_group_order(t) == group.order() == math.factorial(2**g)
    assert dgr.is_full_symmetric(t)


@pytest.mark.parametrize("g", range(1, 17))
def test_full_symmetric_by_connectivity(g):
    t = dgr.monodromy_transpositions(g)
    assert len(t.swaps) == g * 2 ** (g - 1)
    assert dgr.is_full_symmetric(t)


def test_disconnected_swaps_not_full():
    t = dgr.TranspositionSet(2, np.array([[0, 1], [2, 3]], dtype=np.int64))
    assert not dgr.is_full_symmetric(t)
    assert dgr.generated_group_order(t) == 4
    bad = dgr.TranspositionSet(2, np.array([[0, 3]], dtype=np.int64))
    with pytest.raises(InvariantError):
        bad.check()
    with pytest.raises(ResourceError):
        dgr.generated_group_order(dgr.monodromy_transpositions(4))

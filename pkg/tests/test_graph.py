import itertools
import random
from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given, settings

from helpers import graph
from jumplab import errors
from jumplab.graph import (
    EnumerationBounds,
    MultiGraph,
    biconnected_blocks,
    connected_components,
    contract,
    cycles,
    resistance_oracle,
)
from strategies import multigraphs, seeds


def two_gon():
    return graph("uv", ("e1", "u", "v"), ("e2", "u", "v"))


def test_rejects_bad_edges():
    with pytest.raises(errors.UnknownVertex):
        graph("uv", ("e", "u", "w"))
    with pytest.raises(errors.InputError):
        graph("uv", ("e", "u", "v"), ("e", "v", "u"))


def test_contract_two_gon():
    res = contract(two_gon(), ["e1"])
    assert res.quotient.vertices == ("u",)
    assert res.quotient.edges == (("e2", "u", "u"),)
    assert res.quotient.edge("e2").is_loop
    assert res.vertex_map == {"u": "u", "v": "u"}


def test_contract_nothing(triangle):
    res = contract(triangle, [])
    assert res.quotient == triangle
    assert res.vertex_map == {v: v for v in triangle.vertices}


def test_contract_path():
    g = graph("uwv", ("a", "u", "w"), ("b", "w", "v"))
    res = contract(g, ["a", "b"])
    assert res.quotient.vertices == ("u",)
    assert res.quotient.edges == ()


def test_contract_unknown(triangle):
    with pytest.raises(errors.UnknownEdge):
        contract(triangle, ["nope"])


@settings(max_examples=80, deadline=None)
@given(multigraphs(max_edges=8), seeds)
def test_iterated_contraction(g, seed):
    rng = random.Random(seed)
    ids = list(g.edge_ids)
    rng.shuffle(ids)
    k = rng.randint(0, len(ids))
    j = rng.randint(k, len(ids))
    a, b = ids[:k], ids[k:j]
    first = contract(g, a)
    second = contract(first.quotient, [first.surviving_edges[x] for x in b])
    both = contract(g, a + b)
    assert second.quotient == both.quotient
    assert {v: second.vertex_map[first.vertex_map[v]] for v in g.vertices} == both.vertex_map


def test_components():
    assert len(connected_components(two_gon())) == 1
    assert len(connected_components(graph("ab"))) == 2
    g = graph("abcxy", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"), ("f", "x", "y"))
    assert sorted(map(sorted, connected_components(g))) == [["a", "b", "c"], ["x", "y"]]


def test_blocks_bowtie():
    g = graph("abcde", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"),
              ("f1", "c", "d"), ("f2", "d", "e"), ("f3", "e", "c"))
    dec = biconnected_blocks(g)
    assert sorted(map(sorted, dec.blocks)) == [["e1", "e2", "e3"], ["f1", "f2", "f3"]]
    assert dec.cut_vertices == ("c",)


def test_blocks_path():
    g = graph("abcd", ("x", "a", "b"), ("y", "b", "c"), ("z", "c", "d"))
    dec = biconnected_blocks(g)
    assert sorted(map(sorted, dec.blocks)) == [["x"], ["y"], ["z"]]
    assert set(dec.cut_vertices) == {"b", "c"}


def test_blocks_two_gon_and_loop():
    assert biconnected_blocks(two_gon()).blocks == [frozenset({"e1", "e2"})]
    g = graph("uv", ("e1", "u", "v"), ("e2", "u", "v"), ("l", "v", "v"))
    dec = biconnected_blocks(g)
    assert sorted(map(sorted, dec.blocks)) == [["e1", "e2"], ["l"]]
    assert dec.cut_vertices == ("v",)


def test_blocks_disconnected():
    with pytest.raises(errors.DisconnectedNetwork):
        biconnected_blocks(graph("ab"))


def _is_tree(adj):
    nodes = list(adj)
    n_edges = sum(len(v) for v in adj.values()) // 2
    if n_edges != len(nodes) - 1:
        return False
    seen, todo = {nodes[0]}, [nodes[0]]
    while todo:
        for y in adj[todo.pop()]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(nodes)


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_vertices=7, max_edges=10))
def test_blocks_partition_and_tree(g):
    dec = biconnected_blocks(g)
    flat = [e for b in dec.blocks for e in b]
    assert sorted(flat) == sorted(g.edge_ids)
    if dec.blocks:
        assert _is_tree(dec.tree)
    for b in dec.blocks:
        if len(b) > 1:
            assert not any(g.edge(e).is_loop for e in b)


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=7, max_edges=10, loop_prob=0.0))
def test_blocks_match_networkx_on_simple_graphs(g):
    pairs = {frozenset((e.u, e.v)) for e in g.edges}
    if len(pairs) != len(g.edges) or any(e.is_loop for e in g.edges):
        return  # networkx Graph has no parallel edges, and ignores loops here
    by_ends = {frozenset((e.u, e.v)): e.id for e in g.edges}
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from((e.u, e.v) for e in g.edges)
    theirs = sorted(sorted(by_ends[frozenset(p)] for p in comp)
                    for comp in nx.biconnected_component_edges(nxg))
    dec = biconnected_blocks(g)
    assert sorted(sorted(b) for b in dec.blocks) == theirs
    assert set(dec.cut_vertices) == set(nx.articulation_points(nxg))


def _cycle_count_bruteforce(g):
    """Edge subsets that are connected and 2-regular (a loop counts twice)."""
    count = 0
    for k in range(1, len(g.edges) + 1):
        for sub in itertools.combinations(g.edges, k):
            deg = {}
            for e in sub:
                deg[e.u] = deg.get(e.u, 0) + 1
                deg[e.v] = deg.get(e.v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            h = MultiGraph(tuple(deg), tuple(sub))
            if h.is_connected():
                count += 1
    return count


def test_cycles_small():
    tri = graph("abc", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"))
    assert [len(c) for c in cycles(tri)] == [3]
    assert [len(c) for c in cycles(two_gon())] == [2]
    theta = graph("uv", ("a", "u", "v"), ("b", "u", "v"), ("c", "u", "v"))
    assert len(list(cycles(theta))) == 3 == _cycle_count_bruteforce(theta)
    loop = graph("u", ("l", "u", "u"))
    assert list(cycles(loop)) == [("l",)]


@settings(max_examples=80, deadline=None)
@given(multigraphs(max_vertices=6, max_edges=8))
def test_cycles_once_each(g):
    found = list(cycles(g))
    assert len(found) == _cycle_count_bruteforce(g)
    assert len({frozenset(c) for c in found}) == len(found)
    for c in found:
        # consecutive edges share a vertex and the walk closes up
        if len(c) > 1:
            assert len(set(c)) == len(c)


def test_cycles_bound(monkeypatch):
    g = graph("uv", *[(f"e{i}", "u", "v") for i in range(5)])
    with pytest.raises(errors.TooLargeForEnumeration):
        list(cycles(g, bound=4))
    monkeypatch.setenv("JUMPLAB_ENUM_BOUND", "3")
    assert EnumerationBounds.from_env().cycle_edges == 3
    with pytest.raises(errors.TooLargeForEnumeration):
        list(cycles(g))


@settings(max_examples=60, deadline=None)
@given(multigraphs(max_vertices=7, max_edges=8))
def test_blocks_iff_common_cycle(g):
    dec = biconnected_blocks(g)
    where = dec.block_of_edge()
    together = set()
    for c in cycles(g):
        together.update(frozenset(p) for p in itertools.combinations(c, 2))
    for a, b in itertools.combinations([e.id for e in g.edges if not e.is_loop], 2):
        assert (where[a] == where[b]) == (frozenset((a, b)) in together)


def test_oracle_examples():
    assert resistance_oracle(graph("uv", ("e", "u", "v")), {"e": 5}, "u", "v") == 5
    assert resistance_oracle(two_gon(), {"e1": 2, "e2": 3}, "u", "v") == F(6, 5)
    tri = graph("abc", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"))
    assert resistance_oracle(tri, {"e1": 1, "e2": 1, "e3": 1}, "a", "b") == F(2, 3)


def test_oracle_errors():
    big = graph("uv", *[(f"e{i}", "u", "v") for i in range(11)])
    with pytest.raises(errors.TooLargeForEnumeration):
        resistance_oracle(big, {f"e{i}": 1 for i in range(11)}, "u", "v")
    with pytest.raises(errors.DisconnectedNetwork):
        resistance_oracle(graph("uvw", ("e", "u", "v")), {"e": 1}, "u", "w")


def test_oracle_series_parallel_reduction():
    # (1 + 2) in parallel with 3, then in series with 4 -> 3/2 + 4
    g = graph("abcd", ("p", "a", "b"), ("q", "b", "c"), ("r", "a", "c"), ("s", "c", "d"))
    assert resistance_oracle(g, {"p": 1, "q": 2, "r": 3, "s": 4}, "a", "d") == F(3, 2) + 4

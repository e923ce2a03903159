import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helpers import graph
from jumplab import errors
from jumplab.generate import random_divisor, random_multigraph, random_resistances
from jumplab.graph import contract, resistance_oracle
from jumplab.green import (
    CombinatorialDivisor,
    effective_resistance,
    green,
    green_block_additive,
    green_detailed,
)
from strategies import networks, seeds

D = CombinatorialDivisor.difference


def test_single_edge():
    g = graph("uv", ("e", "u", "v"))
    assert green(g, {"e": 5}, D("u", "v"), D("u", "v")) == 5


def test_parallel():
    g = graph("uv", ("a", "u", "v"), ("b", "u", "v"))
    assert green(g, {"a": 2, "b": 3}, D("u", "v"), D("u", "v")) == F(6, 5)


def test_parallel_with_zero_edge():
    g = graph("uv", ("a", "u", "v"), ("b", "u", "v"))
    res = green_detailed(g, {"a": 0, "b": 3}, D("u", "v"), D("u", "v"))
    assert res.value == 0
    assert res.quotient_vertices == 1


def test_zero_divisor(triangle):
    assert green(triangle, {"e1": 1, "e2": 2, "e3": 3}, {}, D("a", "b")) == 0


def test_nonzero_degree_flagged(triangle):
    mu = {"e1": 1, "e2": 1, "e3": 1}
    res = green_detailed(triangle, mu, {"a": 1}, {"a": 1})
    assert not res.degree_zero
    assert green_detailed(triangle, mu, D("a", "b"), D("a", "c")).degree_zero


def test_errors(triangle):
    with pytest.raises(errors.NegativeResistance):
        green(triangle, {"e1": -1, "e2": 1, "e3": 1}, {}, {})
    with pytest.raises(errors.DisconnectedNetwork):
        green(graph("abc", ("e", "a", "b")), {"e": 1}, {}, {})
    with pytest.raises(errors.UnknownVertex):
        green(triangle, {"e1": 1, "e2": 1, "e3": 1}, {"zz": 1}, {})


def test_block_additive_examples():
    path = graph("uwv", ("a", "u", "w"), ("b", "w", "v"))
    assert green_block_additive(path, {"a": 1, "b": 1}, "u", "v") == 2
    assert green_block_additive(path, {"a": 1, "b": 1}, "u", "u") == 0


def test_triangle_plus_pendant():
    g = graph("abcp", ("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"), ("t", "c", "p"))
    mu = {"e1": 1, "e2": 2, "e3": 3, "t": 4}
    # a to c through the triangle: 3 || (1 + 2) = 3/2, then the bridge
    expected = F(3, 2) + 4
    assert green_block_additive(g, mu, "a", "p") == expected
    assert effective_resistance(g, mu, "a", "p") == expected


@settings(max_examples=60, deadline=None)
@given(networks(), seeds, st.fractions(min_value=F(1, 10), max_value=10))
def test_homogeneity(net, seed, lam):
    assume(lam > 0)
    g, mu = net
    rng = random.Random(seed)
    x, y = random_divisor(rng, g), random_divisor(rng, g)
    assert green(g, {e: lam * r for e, r in mu.items()}, x, y) == lam * green(g, mu, x, y)


@settings(max_examples=60, deadline=None)
@given(networks(zero_prob=0.2), seeds, st.integers(-3, 3), st.integers(-3, 3))
def test_symmetric_bilinear_psd(net, seed, a, b):
    g, mu = net
    rng = random.Random(seed)
    x, y, z = (random_divisor(rng, g) for _ in range(3))
    assert green(g, mu, x, y) == green(g, mu, y, x)
    lhs = green(g, mu, x.scale(a) + y.scale(b), z)
    assert lhs == a * green(g, mu, x, z) + b * green(g, mu, y, z)
    assert green(g, mu, x, x) >= 0


@settings(max_examples=60, deadline=None)
@given(networks(max_edges=9, zero_prob=0.2))
def test_matches_oracle(net):
    g, mu = net
    res = contract(g, [e for e, r in mu.items() if r == 0])
    qmu = {e: mu[e] for e in res.surviving_edges}
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1:]:
            a, b = res.vertex_map[u], res.vertex_map[v]
            expected = resistance_oracle(res.quotient, qmu, a, b) if a != b else 0
            assert effective_resistance(g, mu, u, v) == expected


@settings(max_examples=60, deadline=None)
@given(networks(max_vertices=8, max_edges=12))
def test_block_additivity(net):
    g, mu = net
    u = g.vertices[0]
    for v in g.vertices:
        assert green_block_additive(g, mu, v, u) == effective_resistance(g, mu, v, u)
        assert green_block_additive(g, mu, u, v) == effective_resistance(g, mu, u, v)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_continuity_at_zero_edge(seed):
    rng = random.Random(seed)
    g = random_multigraph(rng, 6, 9)
    assume(g.edges)
    mu = random_resistances(rng, g, zero_prob=0.3)
    e = rng.choice(g.edge_ids)
    mu[e] = F(0)
    x = random_divisor(rng, g, 2)
    limit = green(g, mu, x, x)
    gaps = []
    for k in range(1, 21):
        gaps.append(abs(green(g, {**mu, e: F(1, 2**k)}, x, x) - limit))
    assert all(b <= a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < F(1, 10**4)


def test_all_zero_network(triangle):
    assert green(triangle, {"e1": 0, "e2": 0, "e3": 0}, D("a", "b"), D("a", "c")) == 0

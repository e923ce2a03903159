"""Seeded random instances for experiments and tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import MultiGraph, biconnected_blocks
from .green import CombinatorialDivisor
from .labels import BoundaryBasis, Label, LabelledGraph, OrderVector


@dataclass(frozen=True)
class InstanceConfig:
    max_vertices: int = 8
    max_edges: int = 12
    min_rank: int = 1
    max_rank: int = 3
    max_exponent: int = 3
    max_order: int = 5
    loop_prob: float = 0.1


def random_multigraph(rng: random.Random, max_vertices: int, max_edges: int,
                      loop_prob: float = 0.1) -> MultiGraph:
    """Connected multigraph: a random spanning tree plus random extra edges."""
    n = rng.randint(1, max_vertices)
    n = min(n, max_edges + 1)
    verts = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        edges.append((verts[rng.randrange(i)], verts[i]))
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        a = rng.choice(verts)
        if n > 1 and rng.random() >= loop_prob:
            b = rng.choice([v for v in verts if v != a])
        else:
            b = a
        edges.append((a, b))
    rng.shuffle(edges)
    return MultiGraph(tuple(verts), tuple((f"e{k}", a, b) for k, (a, b) in enumerate(edges)))


def random_label(rng: random.Random, r: int, max_exponent: int) -> Label:
    while True:
        exps = tuple(rng.randint(0, max_exponent) for _ in range(r))
        if any(exps):
            return Label(exps)


def random_basis(rng: random.Random, cfg: InstanceConfig) -> BoundaryBasis:
    r = rng.randint(cfg.min_rank, cfg.max_rank)
    return BoundaryBasis(tuple(f"Z{i + 1}" for i in range(r)))


def random_labelled_graph(rng: random.Random, cfg: InstanceConfig = InstanceConfig()) -> LabelledGraph:
    g = random_multigraph(rng, cfg.max_vertices, cfg.max_edges, cfg.loop_prob)
    basis = random_basis(rng, cfg)
    labels = {e.id: random_label(rng, len(basis), cfg.max_exponent) for e in g.edges}
    return LabelledGraph(g, basis, labels)


def random_aligned_graph(rng: random.Random, cfg: InstanceConfig = InstanceConfig()) -> LabelledGraph:
    """Labels inside each multi-edge block are positive multiples of one vector."""
    g = random_multigraph(rng, cfg.max_vertices, cfg.max_edges, cfg.loop_prob)
    basis = random_basis(rng, cfg)
    r = len(basis)
    labels = {}
    for blk in biconnected_blocks(g).blocks:
        if len(blk) == 1:
            (eid,) = blk
            labels[eid] = random_label(rng, r, cfg.max_exponent)
            continue
        direction = random_label(rng, r, 2).exponents
        for eid in sorted(blk):
            k = rng.randint(1, 3)
            labels[eid] = Label(tuple(k * a for a in direction))
    return LabelledGraph(g, basis, labels)


def random_orders(rng: random.Random, basis: BoundaryBasis, lo: int = 0, hi: int = 5) -> OrderVector:
    return OrderVector(basis, tuple(rng.randint(lo, hi) for _ in basis.names))


def random_divisor(rng: random.Random, g: MultiGraph, max_coeff: int = 3) -> CombinatorialDivisor:
    """Random integer divisor of degree zero."""
    w = {v: rng.randint(-max_coeff, max_coeff) for v in g.vertices}
    w[g.vertices[0]] -= sum(w.values())
    return CombinatorialDivisor(w)


def random_resistances(rng: random.Random, g: MultiGraph, zero_prob: float = 0.0,
                       max_num: int = 9, max_den: int = 4) -> dict[str, Fraction]:
    mu = {}
    for e in g.edges:
        if rng.random() < zero_prob:
            mu[e.id] = Fraction(0)
        else:
            mu[e.id] = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
    return mu


def _canonical_form(n: int, edges: tuple[tuple[int, int], ...]) -> tuple:
    best = None
    for p in itertools.permutations(range(n)):
        form = tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
        if best is None or form < best:
            best = form
    return (n, best)


def all_multigraphs(max_edges: int) -> list[MultiGraph]:
    """Every connected multigraph (loops allowed) with 1..max_edges edges,
    one representative per isomorphism class.

    Grown one edge at a time: a new edge either joins two existing vertices
    or hangs a new vertex off an existing one, which reaches every connected
    graph.  Brute-force canonical forms keep this to small edge counts.
    """
    level = {(1, ())}
    out: list[MultiGraph] = []
    for _ in range(max_edges):
        nxt = set()
        for n, edges in level:
            for a in range(n):
                for b in range(a, n + 1):
                    if b == n:
                        nxt.add(_canonical_form(n + 1, edges + ((a, n),)))
                    else:
                        nxt.add(_canonical_form(n, edges + ((a, b),)))
        level = nxt
        for n, edges in sorted(nxt):
            out.append(MultiGraph(
                tuple(f"v{i}" for i in range(n)),
                tuple((f"e{k}", f"v{a}", f"v{b}") for k, (a, b) in enumerate(edges)),
            ))
    return out

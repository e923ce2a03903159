"""Undirected multigraphs with loops, and the combinatorics built on them.

Vertex order is the declaration order and fixes matrix indexing everywhere
else in the package.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import (
    DisconnectedNetwork,
    InputError,
    NonPositiveResistance,
    TooLargeForEnumeration,
    UnknownEdge,
    UnknownVertex,
)

ENUM_BOUND_ENV = "JUMPLAB_ENUM_BOUND"


@dataclass(frozen=True)
class EnumerationBounds:
    """Edge-count limits for the exponential enumerations."""

    oracle_edges: int = 10
    cycle_edges: int = 16

    @classmethod
    def from_env(cls) -> "EnumerationBounds":
        raw = os.environ.get(ENUM_BOUND_ENV)
        if not raw:
            return cls()
        bound = int(raw)
        return cls(oracle_edges=bound, cycle_edges=bound)


class Edge(NamedTuple):
    id: str
    u: str
    v: str

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: str) -> str:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    _vindex: dict = field(init=False, repr=False, compare=False, hash=False)
    _eindex: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        vindex = {v: i for i, v in enumerate(verts)}
        if len(vindex) != len(verts):
            raise InputError("duplicate vertex identifiers")
        eindex = {}
        for k, e in enumerate(edges):
            if e.id in eindex:
                raise InputError(f"duplicate edge id {e.id!r}")
            for w in (e.u, e.v):
                if w not in vindex:
                    raise UnknownVertex(f"edge {e.id!r} references unknown vertex {w!r}")
            eindex[e.id] = k
        object.__setattr__(self, "_vindex", vindex)
        object.__setattr__(self, "_eindex", eindex)

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]) -> "MultiGraph":
        return cls(tuple(vertices), tuple(edges))

    def index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def edge(self, eid: str) -> Edge:
        try:
            return self.edges[self._eindex[eid]]
        except KeyError:
            raise UnknownEdge(eid) from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def has_edge(self, eid: str) -> bool:
        return eid in self._eindex

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def incidence(self) -> dict[str, list[Edge]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            if not e.is_loop:
                inc[e.v].append(e)
        return inc

    def subgraph(self, edge_ids: Iterable[str]) -> "MultiGraph":
        """Edge-induced subgraph; vertices keep their relative order."""
        keep = set(edge_ids)
        for eid in keep:
            self.edge(eid)
        edges = [e for e in self.edges if e.id in keep]
        touched = {w for e in edges for w in (e.u, e.v)}
        return MultiGraph(tuple(v for v in self.vertices if v in touched), tuple(edges))

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1


@dataclass(frozen=True)
class ContractionResult:
    quotient: MultiGraph
    vertex_map: dict[str, str]
    surviving_edges: dict[str, str]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def contract(g: MultiGraph, edge_set: Iterable[str]) -> ContractionResult:
    """Identify the endpoints of every edge in ``edge_set``.

    Each class of identified vertices is named after its first member in
    declaration order; the remaining edges keep their ids (parallel edges
    that close up become loops and are kept).
    """
    contracted = set(edge_set)
    for eid in contracted:
        if not g.has_edge(eid):
            raise UnknownEdge(f"cannot contract unknown edge {eid!r}")
    uf = _UnionFind(g.vertices)
    for e in g.edges:
        if e.id in contracted:
            uf.union(e.u, e.v)
    rep: dict = {}
    for v in g.vertices:
        rep.setdefault(uf.find(v), v)
    vertex_map = {v: rep[uf.find(v)] for v in g.vertices}
    qverts = tuple(dict.fromkeys(vertex_map[v] for v in g.vertices))
    qedges = tuple(
        Edge(e.id, vertex_map[e.u], vertex_map[e.v]) for e in g.edges if e.id not in contracted
    )
    surviving = {e.id: e.id for e in qedges}
    return ContractionResult(MultiGraph(qverts, qedges), vertex_map, surviving)


def connected_components(g: MultiGraph) -> list[list[str]]:
    uf = _UnionFind(g.vertices)
    for e in g.edges:
        uf.union(e.u, e.v)
    groups: dict = {}
    for v in g.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return list(groups.values())


def require_connected(g: MultiGraph) -> None:
    comps = connected_components(g)
    if len(comps) > 1:
        raise DisconnectedNetwork(f"graph has {len(comps)} connected components")
    if not comps:
        raise DisconnectedNetwork("graph has no vertices")


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks plus the block-cut tree.

    ``blocks[i]`` is a frozenset of edge ids.  Tree nodes are ``("B", i)``
    for blocks and ``("V", v)`` for vertices lying in two or more blocks.
    """

    blocks: list[frozenset[str]]
    block_vertices: list[tuple[str, ...]]
    cut_vertices: tuple[str, ...]
    tree: dict[tuple, list[tuple]]

    def block_of_edge(self) -> dict[str, int]:
        return {eid: i for i, b in enumerate(self.blocks) for eid in b}

    def home(self, v: str) -> tuple | None:
        """The tree node where vertex ``v`` lives (None if v is in no block)."""
        if v in self.cut_vertices:
            return ("V", v)
        for i, vs in enumerate(self.block_vertices):
            if v in vs:
                return ("B", i)
        return None

    def tree_path(self, a: tuple, b: tuple) -> list[tuple]:
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in self.tree[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return path[::-1]


def biconnected_blocks(g: MultiGraph) -> BlockDecomposition:
    """Hopcroft-Tarjan on a multigraph.

    Parallel edges count as distinct (the DFS remembers the edge it arrived
    by, not the parent vertex), so a 2-gon is one block.  Loops become
    singleton blocks at their vertex.
    """
    require_connected(g)
    inc = g.incidence()
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    stack: list[Edge] = []
    blocks: list[list[Edge]] = []
    counter = itertools.count()

    def dfs(v: str, via: str | None) -> None:
        disc[v] = low[v] = next(counter)
        for e in inc[v]:
            if e.is_loop or e.id == via:
                continue
            w = e.other(v)
            if w not in disc:
                stack.append(e)
                dfs(w, e.id)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    comp = []
                    while True:
                        f = stack.pop()
                        comp.append(f)
                        if f.id == e.id:
                            break
                    blocks.append(comp)
            elif disc[w] < disc[v]:
                stack.append(e)
                low[v] = min(low[v], disc[w])

    if g.vertices:
        dfs(g.vertices[0], None)
    order = {e.id: k for k, e in enumerate(g.edges)}
    for e in g.edges:
        if e.is_loop:
            blocks.append([e])
    blocks.sort(key=lambda comp: min(order[f.id] for f in comp))

    block_sets = [frozenset(f.id for f in comp) for comp in blocks]
    block_vertices = []
    for comp in blocks:
        vs = {w for f in comp for w in (f.u, f.v)}
        block_vertices.append(tuple(v for v in g.vertices if v in vs))
    membership: dict[str, list[int]] = defaultdict(list)
    for i, vs in enumerate(block_vertices):
        for v in vs:
            membership[v].append(i)
    cuts = tuple(v for v in g.vertices if len(membership[v]) >= 2)
    tree: dict[tuple, list[tuple]] = {("B", i): [] for i in range(len(blocks))}
    for v in cuts:
        tree[("V", v)] = []
        for i in membership[v]:
            tree[("V", v)].append(("B", i))
            tree[("B", i)].append(("V", v))
    return BlockDecomposition(block_sets, block_vertices, cuts, tree)


def cycles(g: MultiGraph, bound: int | None = None) -> Iterator[tuple[str, ...]]:
    """Simple cycles as edge-id sequences, each once up to rotation/reflection.

    A cycle is reported starting from its smallest vertex (declaration
    order), in the direction whose first edge precedes its last edge.
    """
    if bound is None:
        bound = EnumerationBounds.from_env().cycle_edges
    if len(g.edges) > bound:
        raise TooLargeForEnumeration(
            f"{len(g.edges)} edges exceeds cycle enumeration bound {bound}"
        )
    order = {e.id: k for k, e in enumerate(g.edges)}
    for e in g.edges:
        if e.is_loop:
            yield (e.id,)
    inc = g.incidence()
    rank = {v: i for i, v in enumerate(g.vertices)}
    for s in g.vertices:
        path_edges: list[str] = []
        on_path = {s}

        def extend(v: str):
            for e in inc[v]:
                if e.is_loop or e.id in path_edges:
                    continue
                w = e.other(v)
                if w == s:
                    if path_edges and order[path_edges[0]] < order[e.id]:
                        yield tuple(path_edges) + (e.id,)
                    continue
                if w in on_path or rank[w] < rank[s]:
                    continue
                path_edges.append(e.id)
                on_path.add(w)
                yield from extend(w)
                path_edges.pop()
                on_path.discard(w)

        yield from extend(s)


def resistance_oracle(
    g: MultiGraph, mu: Mapping[str, Fraction], u: str, v: str, bound: int | None = None
) -> Fraction:
    """Effective resistance by brute-force forest enumeration.

    Ratio of the weighted count of spanning 2-forests separating u from v
    to the weighted count of spanning trees, each forest weighted by the
    product of its conductances.  Independent of any linear algebra.
    """
    if bound is None:
        bound = EnumerationBounds.from_env().oracle_edges
    if len(g.edges) > bound:
        raise TooLargeForEnumeration(
            f"{len(g.edges)} edges exceeds oracle enumeration bound {bound}"
        )
    require_connected(g)
    g.index(u), g.index(v)
    if u == v:
        raise InputError("oracle needs two distinct vertices")
    cond = {}
    for e in g.edges:
        m = Fraction(mu[e.id])
        if m <= 0:
            raise NonPositiveResistance(f"edge {e.id!r} has resistance {m}")
        cond[e.id] = 1 / m
    usable = [e for e in g.edges if not e.is_loop]
    n = len(g.vertices)
    trees = Fraction(0)
    for subset in itertools.combinations(usable, n - 1):
        uf = _UnionFind(g.vertices)
        if all(uf.union(e.u, e.v) for e in subset):
            w = Fraction(1)
            for e in subset:
                w *= cond[e.id]
            trees += w
    forests = Fraction(0)
    for subset in itertools.combinations(usable, n - 2):
        uf = _UnionFind(g.vertices)
        if all(uf.union(e.u, e.v) for e in subset) and uf.find(u) != uf.find(v):
            w = Fraction(1)
            for e in subset:
                w *= cond[e.id]
            forests += w
    return forests / trees

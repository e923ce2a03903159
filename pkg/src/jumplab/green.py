"""Green's functions gr(G, mu; X, Y) on proper and improper resistive networks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .errors import NegativeResistance, UnknownVertex
from .graph import MultiGraph, biconnected_blocks, contract, require_connected
from .ratlin import RatMatrix, as_rational, laplacian, laplacian_pseudoinverse


@dataclass(frozen=True)
class CombinatorialDivisor:
    """Rational weight per vertex; vertices not mentioned carry weight 0."""

    weights: Mapping[str, Fraction] = field(hash=False)

    def __post_init__(self):
        w = {v: as_rational(x) for v, x in dict(self.weights).items()}
        object.__setattr__(self, "weights", {v: x for v, x in w.items() if x})

    @classmethod
    def point(cls, v: str) -> "CombinatorialDivisor":
        return cls({v: 1})

    @classmethod
    def difference(cls, u: str, v: str) -> "CombinatorialDivisor":
        """The divisor u - v."""
        if u == v:
            return cls({})
        return cls({u: 1, v: -1})

    @property
    def degree(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    @property
    def is_degree_zero(self) -> bool:
        return self.degree == 0

    def __getitem__(self, v: str) -> Fraction:
        return self.weights.get(v, Fraction(0))

    def __add__(self, other: "CombinatorialDivisor") -> "CombinatorialDivisor":
        w = dict(self.weights)
        for v, x in other.weights.items():
            w[v] = w.get(v, Fraction(0)) + x
        return CombinatorialDivisor(w)

    def scale(self, c) -> "CombinatorialDivisor":
        c = as_rational(c)
        return CombinatorialDivisor({v: c * x for v, x in self.weights.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CombinatorialDivisor):
            return NotImplemented
        return self.weights == other.weights

    def vector(self, g: MultiGraph) -> list[Fraction]:
        for v in self.weights:
            if not g.has_vertex(v):
                raise UnknownVertex(f"divisor references unknown vertex {v!r}")
        return [self[v] for v in g.vertices]

    def push_forward(self, vertex_map: Mapping[str, str]) -> "CombinatorialDivisor":
        """Weights of identified vertices add."""
        w: dict[str, Fraction] = {}
        for v, x in self.weights.items():
            if v not in vertex_map:
                raise UnknownVertex(f"divisor references unknown vertex {v!r}")
            t = vertex_map[v]
            w[t] = w.get(t, Fraction(0)) + x
        return CombinatorialDivisor(w)


DivisorLike = Union[CombinatorialDivisor, Mapping[str, object]]


def _as_divisor(x: DivisorLike) -> CombinatorialDivisor:
    return x if isinstance(x, CombinatorialDivisor) else CombinatorialDivisor(x)


def check_resistances(g: MultiGraph, mu: Mapping[str, object]) -> dict[str, Fraction]:
    out = {}
    for e in g.edges:
        r = as_rational(mu[e.id])
        if r < 0:
            raise NegativeResistance(f"edge {e.id!r} has resistance {r}")
        out[e.id] = r
    return out


def is_proper(mu: Mapping[str, Fraction]) -> bool:
    return all(r > 0 for r in mu.values())


@dataclass(frozen=True)
class GreenKernel:
    """Pseudoinverse of the contracted network, ready for repeated pairing.

    ``vertex_map`` sends original vertices to vertices of the proper
    quotient on which ``lplus`` is indexed.
    """

    graph: MultiGraph
    quotient: MultiGraph
    vertex_map: dict[str, str]
    lplus: RatMatrix

    def vector(self, x: DivisorLike) -> list[Fraction]:
        return _as_divisor(x).push_forward(self.vertex_map).vector(self.quotient)

    def pair(self, x: DivisorLike, y: DivisorLike) -> Fraction:
        if self.lplus.rows <= 1:
            return Fraction(0)
        return self.lplus.bilinear(self.vector(x), self.vector(y))

    def matrix(self) -> RatMatrix:
        """The form pulled back to the original vertices: P^T L'^+ P."""
        idx = [self.quotient.index(self.vertex_map[v]) for v in self.graph.vertices]
        return self.lplus.submatrix(idx, idx)


def green_kernel(g: MultiGraph, mu: Mapping[str, object]) -> GreenKernel:
    require_connected(g)
    mu = check_resistances(g, mu)
    res = contract(g, [eid for eid, r in mu.items() if r == 0])
    q = res.quotient
    lap = laplacian(q, {eid: mu[eid] for eid in res.surviving_edges})
    return GreenKernel(g, q, res.vertex_map, laplacian_pseudoinverse(lap, len(q.vertices)))


@dataclass(frozen=True)
class GreenResult:
    value: Fraction
    degree_zero: bool
    quotient_vertices: int


def green_detailed(g: MultiGraph, mu: Mapping[str, object], x: DivisorLike, y: DivisorLike) -> GreenResult:
    x, y = _as_divisor(x), _as_divisor(y)
    k = green_kernel(g, mu)
    return GreenResult(
        k.pair(x, y), x.is_degree_zero and y.is_degree_zero, len(k.quotient.vertices)
    )


def green(g: MultiGraph, mu: Mapping[str, object], x: DivisorLike, y: DivisorLike) -> Fraction:
    """gr(g, mu; x, y) = x'^T L'^+ y' on the network with zero edges contracted.

    Divisors of nonzero degree are accepted; see :func:`green_detailed`
    for the flag that reports them.
    """
    return green_kernel(g, mu).pair(x, y)


def effective_resistance(g: MultiGraph, mu: Mapping[str, object], u: str, v: str) -> Fraction:
    d = CombinatorialDivisor.difference(u, v)
    return green(g, mu, d, d)


def green_block_additive(g: MultiGraph, mu: Mapping[str, object], u: str, v: str) -> Fraction:
    """Effective resistance u <-> v as a sum over blocks on the block-cut-tree path.

    Each block on the path contributes its own two-point resistance between
    the vertices where the path enters and leaves it; bridges are blocks
    with a single edge.
    """
    require_connected(g)
    g.index(u), g.index(v)
    mu = check_resistances(g, mu)
    if u == v:
        return Fraction(0)
    dec = biconnected_blocks(g)
    path = dec.tree_path(dec.home(u), dec.home(v))
    total = Fraction(0)
    entry = u
    for k, node in enumerate(path):
        if node[0] != "B":
            continue
        nxt = path[k + 1] if k + 1 < len(path) else None
        exit_ = nxt[1] if nxt is not None else v
        if entry != exit_:
            sub = g.subgraph(dec.blocks[node[1]])
            total += effective_resistance(sub, {e.id: mu[e.id] for e in sub.edges}, entry, exit_)
        entry = exit_
    return total

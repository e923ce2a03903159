from jumplab.graph import MultiGraph
from jumplab.labels import BoundaryBasis, Label, LabelledGraph


def graph(vertices, *edges):
    return MultiGraph(tuple(vertices), tuple(edges))


def labelled(vertices, basis, *edges):
    """edges as (id, u, v, exponents)."""
    g = MultiGraph(tuple(vertices), tuple(e[:3] for e in edges))
    return LabelledGraph(g, BoundaryBasis(tuple(basis)), {e[0]: Label(e[3]) for e in edges})

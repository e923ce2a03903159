"""Edge labels over a boundary-divisor basis, and alignment.

A label is the exponent vector ``(a_1, ..., a_r)`` of the monomial
``z_1^a_1 ... z_r^a_r`` generating the ideal on an edge.  Two labels are
multiplicatively related exactly when their exponent vectors are parallel.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import BasisMismatch, IndexOutOfRange, InputError, NonCanonicalLabel, UnknownEdge
from .graph import BlockDecomposition, ContractionResult, MultiGraph, biconnected_blocks, contract, cycles


@dataclass(frozen=True)
class BoundaryBasis:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise InputError("boundary basis must contain at least one divisor")
        if len(set(names)) != len(names):
            raise InputError("boundary divisor names must be distinct")
        if any(not n for n in names):
            raise InputError("boundary divisor names must be nonempty")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise IndexOutOfRange(f"unknown boundary divisor {name!r}") from None

    def check_indices(self, indices: Iterable[int]) -> frozenset[int]:
        idx = frozenset(indices)
        for i in idx:
            if not 0 <= i < len(self.names):
                raise IndexOutOfRange(f"basis index {i} outside 0..{len(self.names) - 1}")
        return idx


@dataclass(frozen=True)
class Label:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if any(a < 0 for a in exps):
            raise InputError(f"label exponents must be nonnegative, got {exps}")
        object.__setattr__(self, "exponents", exps)

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    def restrict(self, keep: Iterable[int]) -> "Label":
        keep = set(keep)
        return Label(tuple(a if i in keep else 0 for i, a in enumerate(self.exponents)))

    def parallel(self, other: "Label") -> bool:
        """True iff n1*self == n2*other for some positive integers n1, n2."""
        a, b = self.exponents, other.exponents
        if len(a) != len(b):
            raise BasisMismatch("labels over different bases")
        if self.is_unit or other.is_unit:
            return self.is_unit and other.is_unit
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i))

    def dot(self, orders: Sequence[int]) -> int:
        return sum(a * m for a, m in zip(self.exponents, orders))

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.exponents) + ")"


@dataclass(frozen=True)
class OrderVector:
    """Valuations ord_T f^# z_i of a test curve, one per basis divisor."""

    basis: BoundaryBasis
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        object.__setattr__(self, "orders", orders)
        if len(orders) != len(self.basis):
            raise BasisMismatch(
                f"{len(orders)} orders given for a basis of size {len(self.basis)}"
            )
        if any(m < 0 for m in orders):
            raise InputError(f"orders must be nonnegative, got {orders}")

    def scaled(self, lam: int) -> "OrderVector":
        return OrderVector(self.basis, tuple(lam * m for m in self.orders))

    def restricted(self, keep: Iterable[int]) -> "OrderVector":
        keep = set(keep)
        return OrderVector(self.basis, tuple(m if i in keep else 0 for i, m in enumerate(self.orders)))

    def zero_set(self) -> frozenset[int]:
        return frozenset(i for i, m in enumerate(self.orders) if m == 0)


@dataclass(frozen=True)
class LabelledGraph:
    graph: MultiGraph
    basis: BoundaryBasis
    labels: Mapping[str, Label] = field(hash=False)

    def __post_init__(self):
        labels = dict(self.labels)
        object.__setattr__(self, "labels", labels)
        ids = set(self.graph.edge_ids)
        if set(labels) != ids:
            missing = ids - set(labels)
            extra = set(labels) - ids
            raise UnknownEdge(f"labels do not match edges (missing {sorted(missing)}, extra {sorted(extra)})")
        for eid, lab in labels.items():
            if len(lab) != len(self.basis):
                raise BasisMismatch(f"label on {eid!r} has {len(lab)} entries, basis has {len(self.basis)}")

    @property
    def is_canonical(self) -> bool:
        return not any(lab.is_unit for lab in self.labels.values())

    def require_canonical(self) -> None:
        bad = [eid for eid in self.graph.edge_ids if self.labels[eid].is_unit]
        if bad:
            raise NonCanonicalLabel(f"edges with unit (all-zero) labels: {bad}; specialize first")


def restrict(lg: LabelledGraph, indices: Iterable[int]) -> LabelledGraph:
    """The labelling l_I: exponents outside ``indices`` are zeroed."""
    keep = lg.basis.check_indices(indices)
    return LabelledGraph(
        lg.graph, lg.basis, {eid: lab.restrict(keep) for eid, lab in lg.labels.items()}
    )


def pullback_orders(lg: LabelledGraph, m: OrderVector) -> dict[str, Fraction]:
    """Resistance of each edge along a test curve: the order of its label."""
    if m.basis != lg.basis:
        raise BasisMismatch(f"orders over {m.basis.names}, graph over {lg.basis.names}")
    return {eid: Fraction(lab.dot(m.orders)) for eid, lab in lg.labels.items()}


def specialize(lg: LabelledGraph, unit_set: Iterable[int]) -> tuple[LabelledGraph, ContractionResult]:
    """Labelled graph after the divisors in ``unit_set`` become invertible.

    Edges whose label is supported inside ``unit_set`` are contracted; the
    remaining labels lose their ``unit_set`` exponents.
    """
    units = lg.basis.check_indices(unit_set)
    keep = set(range(len(lg.basis))) - units
    dead = [eid for eid in lg.graph.edge_ids if lg.labels[eid].support <= units]
    res = contract(lg.graph, dead)
    labels = {res.surviving_edges[eid]: lg.labels[eid].restrict(keep)
              for eid in lg.graph.edge_ids if eid in res.surviving_edges}
    return LabelledGraph(res.quotient, lg.basis, labels), res


@dataclass(frozen=True)
class AlignmentVerdict:
    aligned: bool
    cycle: tuple[str, ...] | None = None
    edges: tuple[str, str] | None = None
    labels: tuple[Label, Label] | None = None

    def __bool__(self) -> bool:
        return self.aligned

    def describe(self) -> str:
        if self.aligned:
            return "aligned"
        e1, e2 = self.edges
        a, b = self.labels
        return (f"not aligned: cycle [{', '.join(self.cycle)}], edges {e1}, {e2}, "
                f"labels {a}, {b}")


def _cycle_through(g: MultiGraph, e1: str, e2: str) -> tuple[str, ...]:
    """A simple cycle containing both edges; ``g`` should be their block."""
    a, b = g.edge(e1).u, g.edge(e1).v
    inc = g.incidence()
    path: list[str] = [e1]
    seen = {a, b}

    def walk(v: str) -> bool:
        for e in inc[v]:
            if e.is_loop or e.id in path:
                continue
            w = e.other(v)
            if w == a:
                if e2 in path or e.id == e2:
                    path.append(e.id)
                    return True
                continue
            if w in seen:
                continue
            path.append(e.id)
            seen.add(w)
            if walk(w):
                return True
            path.pop()
            seen.discard(w)
        return False

    if walk(b):
        return tuple(path)
    raise AssertionError(f"no cycle through {e1} and {e2}")  # pragma: no cover


def is_aligned(lg: LabelledGraph, blocks: BlockDecomposition | None = None) -> AlignmentVerdict:
    """Decide alignment from the biconnected blocks.

    Two non-loop edges share a cycle iff they share a block, so the graph is
    aligned iff labels are pairwise parallel inside every block.  ``blocks``
    may be passed in when many labellings of one graph are checked.
    """
    lg.require_canonical()
    dec = blocks if blocks is not None else biconnected_blocks(lg.graph)
    order = {eid: k for k, eid in enumerate(lg.graph.edge_ids)}
    for blk in dec.blocks:
        if len(blk) < 2:
            continue
        ids = sorted(blk, key=order.__getitem__)
        # parallelism is transitive on nonzero vectors: compare with the first
        ref = ids[0]
        for eid in ids[1:]:
            if not lg.labels[ref].parallel(lg.labels[eid]):
                cyc = _cycle_through(lg.graph.subgraph(blk), ref, eid)
                return AlignmentVerdict(False, cyc, (ref, eid), (lg.labels[ref], lg.labels[eid]))
    return AlignmentVerdict(True)


def is_aligned_bruteforce(
    lg: LabelledGraph, bound: int | None = None, cycle_list: Sequence[tuple[str, ...]] | None = None
) -> AlignmentVerdict:
    """Alignment straight from the definition, by enumerating every cycle."""
    lg.require_canonical()
    for cyc in cycle_list if cycle_list is not None else cycles(lg.graph, bound):
        for e1, e2 in itertools.combinations(cyc, 2):
            if not lg.labels[e1].parallel(lg.labels[e2]):
                return AlignmentVerdict(False, cyc, (e1, e2), (lg.labels[e1], lg.labels[e2]))
    return AlignmentVerdict(True)

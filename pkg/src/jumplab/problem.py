"""The JSON problem file: a labelled graph, named divisors and optional orders.

Parsing is strict: unknown keys are errors, because a mistyped label key
would silently change the science.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any

from .errors import InputError
from .graph import MultiGraph
from .green import CombinatorialDivisor
from .labels import BoundaryBasis, Label, LabelledGraph, OrderVector

TOP_KEYS = ("divisor_basis", "vertices", "edges", "divisors", "orders", "allow_nonzero_degree")
REQUIRED_KEYS = ("divisor_basis", "vertices", "edges")
EDGE_KEYS = ("id", "ends", "label")


class ProblemError(InputError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")


@dataclass
class EdgeSpec:
    id: str
    ends: tuple[str, str]
    label: dict[str, int]


@dataclass
class ProblemFile:
    divisor_basis: list[str]
    vertices: list[str]
    edges: list[EdgeSpec]
    divisors: dict[str, dict[str, int]] = field(default_factory=dict)
    orders: dict[str, int] | None = None
    allow_nonzero_degree: bool = False

    @property
    def basis(self) -> BoundaryBasis:
        return BoundaryBasis(tuple(self.divisor_basis))

    def graph(self) -> MultiGraph:
        return MultiGraph(tuple(self.vertices), tuple((e.id, *e.ends) for e in self.edges))

    def labelled_graph(self) -> LabelledGraph:
        basis = self.basis
        labels = {
            e.id: Label(tuple(e.label.get(name, 0) for name in basis.names)) for e in self.edges
        }
        return LabelledGraph(self.graph(), basis, labels)

    def divisor(self, name: str) -> CombinatorialDivisor:
        if name not in self.divisors:
            raise ProblemError(f"no divisor named {name!r} (have {sorted(self.divisors)})")
        return CombinatorialDivisor(self.divisors[name])

    def order_vector(self, override: dict[str, int] | None = None) -> OrderVector:
        orders = override if override is not None else self.orders
        if orders is None:
            raise ProblemError("no orders in file; pass --orders")
        unknown = set(orders) - set(self.divisor_basis)
        if unknown:
            raise ProblemError(f"orders reference unknown basis names {sorted(unknown)}")
        return OrderVector(self.basis, tuple(orders.get(n, 0) for n in self.divisor_basis))


def _line_of(text: str, *needles: str) -> int | None:
    for needle in needles:
        pat = re.compile(needle)
        for k, line in enumerate(text.splitlines(), 1):
            if pat.search(line):
                return k
    return None


def _quoted(s: Any) -> str:
    return re.escape(json.dumps(s))


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_problem(text: str, source: str = "<input>") -> ProblemFile:
    def fail(msg: str, *needles: str):
        raise ProblemError(msg, _line_of(text, *needles) if needles else None, source)

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"invalid JSON: {exc.msg}", exc.lineno, source) from None
    if not isinstance(raw, dict):
        fail("top level must be a JSON object")
    for key in raw:
        if key not in TOP_KEYS:
            fail(f"unknown field {key!r}", _quoted(key) + r"\s*:")
    for key in REQUIRED_KEYS:
        if key not in raw:
            fail(f"missing required field {key!r}")

    basis = raw["divisor_basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(n, str) and n for n in basis):
        fail("divisor_basis must be a nonempty list of names", r'"divisor_basis"')
    if len(set(basis)) != len(basis):
        fail("divisor_basis names must be distinct", r'"divisor_basis"')

    vertices = raw["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) and v for v in vertices):
        fail("vertices must be a list of names", r'"vertices"')
    if len(set(vertices)) != len(vertices):
        fail("vertex names must be distinct", r'"vertices"')
    vset = set(vertices)

    if not isinstance(raw["edges"], list):
        fail("edges must be a list", r'"edges"')
    edges = []
    seen_ids = set()
    for k, e in enumerate(raw["edges"]):
        if not isinstance(e, dict):
            fail(f"edge #{k} must be an object", r'"edges"')
        eid = e.get("id")
        anchor = (r'"id"\s*:\s*' + _quoted(eid),) if isinstance(eid, str) else (r'"edges"',)
        for key in e:
            if key not in EDGE_KEYS:
                fail(f"edge {eid!r}: unknown field {key!r}", _quoted(key) + r"\s*:", *anchor)
        for key in EDGE_KEYS:
            if key not in e:
                fail(f"edge #{k}: missing field {key!r}", *anchor)
        if not isinstance(eid, str) or not eid:
            fail(f"edge #{k}: id must be a nonempty string", *anchor)
        if eid in seen_ids:
            fail(f"duplicate edge id {eid!r}", *anchor)
        seen_ids.add(eid)
        ends = e["ends"]
        if not isinstance(ends, list) or len(ends) != 2:
            fail(f"edge {eid!r}: ends must be a list of two vertex names", *anchor)
        for w in ends:
            if w not in vset:
                fail(f"edge {eid!r}: unknown vertex {w!r}", *anchor)
        label = e["label"]
        if not isinstance(label, dict):
            fail(f"edge {eid!r}: label must be an object", *anchor)
        for name, a in label.items():
            if name not in basis:
                fail(f"edge {eid!r}: label uses unknown divisor {name!r}", *anchor)
            if not _is_int(a) or a < 0:
                fail(f"edge {eid!r}: exponent of {name!r} must be a nonnegative integer", *anchor)
        if not any(label.values()):
            fail(f"edge {eid!r}: label is the unit ideal; contract it before writing the file", *anchor)
        edges.append(EdgeSpec(eid, (ends[0], ends[1]),
                              {n: label[n] for n in basis if label.get(n)}))

    allow = raw.get("allow_nonzero_degree", False)
    if not isinstance(allow, bool):
        fail("allow_nonzero_degree must be true or false", r'"allow_nonzero_degree"')

    divisors_raw = raw.get("divisors", {})
    if not isinstance(divisors_raw, dict):
        fail("divisors must be an object", r'"divisors"')
    divisors = {}
    for name, weights in divisors_raw.items():
        anchor = _quoted(name) + r"\s*:"
        if not isinstance(weights, dict):
            fail(f"divisor {name!r} must map vertex names to integers", anchor)
        for v, c in weights.items():
            if v not in vset:
                fail(f"divisor {name!r}: unknown vertex {v!r}", anchor)
            if not _is_int(c):
                fail(f"divisor {name!r}: coefficient at {v!r} must be an integer", anchor)
        if sum(weights.values()) != 0 and not allow:
            fail(f"divisor {name!r} has degree {sum(weights.values())}, expected 0 "
                 f"(set allow_nonzero_degree to permit)", anchor)
        divisors[name] = {v: weights[v] for v in vertices if weights.get(v)}

    orders = raw.get("orders")
    if orders is not None:
        if not isinstance(orders, dict):
            fail("orders must be an object", r'"orders"')
        for name, m in orders.items():
            if name not in basis:
                fail(f"orders: unknown divisor {name!r}", r'"orders"')
            if not _is_int(m) or m < 0:
                fail(f"orders: {name!r} must be a nonnegative integer", r'"orders"')
        orders = {n: orders.get(n, 0) for n in basis}

    return ProblemFile(list(basis), list(vertices), edges, divisors, orders, allow)


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemError(f"cannot read file: {exc.strerror}", source=path) from None
    return parse_problem(text, source=path)


def to_json_dict(p: ProblemFile) -> dict:
    """Canonical dict: basis/vertex order kept, zero entries dropped."""
    out: dict[str, Any] = {
        "divisor_basis": list(p.divisor_basis),
        "vertices": list(p.vertices),
        "edges": [
            {
                "id": e.id,
                "ends": list(e.ends),
                "label": {n: e.label[n] for n in p.divisor_basis if e.label.get(n)},
            }
            for e in p.edges
        ],
        "divisors": {
            name: {v: w[v] for v in p.vertices if w.get(v)}
            for name, w in p.divisors.items()
        },
    }
    if p.orders is not None:
        out["orders"] = {n: p.orders.get(n, 0) for n in p.divisor_basis}
    if p.allow_nonzero_degree:
        out["allow_nonzero_degree"] = True
    return out


def serialize_problem(p: ProblemFile) -> str:
    return json.dumps(to_json_dict(p), indent=2, ensure_ascii=False) + "\n"


def problem_from_labelled_graph(
    lg: LabelledGraph,
    divisors: dict[str, CombinatorialDivisor] | None = None,
    orders: OrderVector | None = None,
) -> ProblemFile:
    names = list(lg.basis.names)
    edges = [
        EdgeSpec(e.id, (e.u, e.v),
                 {n: a for n, a in zip(names, lg.labels[e.id].exponents) if a})
        for e in lg.graph.edges
    ]
    divs = {}
    allow = False
    for name, d in (divisors or {}).items():
        if any(x.denominator != 1 for x in d.weights.values()):
            raise InputError(f"divisor {name!r} has non-integer weights")
        divs[name] = {v: int(x) for v, x in d.weights.items()}
        allow = allow or not d.is_degree_zero
    ords = dict(zip(names, orders.orders)) if orders is not None else None
    return ProblemFile(names, list(lg.graph.vertices), edges, divs, ords, allow)

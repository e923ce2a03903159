"""Write the canonical problem files under tests/fixtures.

Hand-written cases cover the documented CLI examples; the rest are seeded
random instances.  Every file is produced by serialize_problem, so it is
canonical and must survive a parse/serialize round trip unchanged.
"""

import argparse
import json
import random
from pathlib import Path

from jumplab.generate import (
    InstanceConfig,
    random_aligned_graph,
    random_divisor,
    random_labelled_graph,
    random_orders,
)
from jumplab.problem import parse_problem, problem_from_labelled_graph, serialize_problem


def edge(eid, u, v, **label):
    return {"id": eid, "ends": [u, v], "label": label}


HAND = {
    "two_gon": {
        "divisor_basis": ["Z1", "Z2"],
        "vertices": ["u", "v"],
        "edges": [edge("e1", "u", "v", Z1=1), edge("e2", "u", "v", Z2=1)],
        "divisors": {"D": {"u": 1, "v": -1}, "zero": {}},
        "orders": {"Z1": 1, "Z2": 1},
    },
    "two_gon_aligned": {
        "divisor_basis": ["Z1", "Z2"],
        "vertices": ["u", "v"],
        "edges": [edge("e1", "u", "v", Z1=1, Z2=1), edge("e2", "u", "v", Z1=2, Z2=2)],
        "divisors": {"D": {"u": 1, "v": -1}},
        "orders": {"Z1": 2, "Z2": 3},
    },
    "one_gon": {
        "divisor_basis": ["Z1", "Z2"],
        "vertices": ["u"],
        "edges": [edge("l", "u", "u", Z1=1, Z2=1)],
        "divisors": {"D": {}},
        "orders": {"Z1": 1, "Z2": 1},
    },
    "tree": {
        "divisor_basis": ["Z1", "Z2", "Z3"],
        "vertices": ["a", "b", "c", "d"],
        "edges": [edge("x", "a", "b", Z1=1), edge("y", "b", "c", Z2=2), edge("z", "b", "d", Z1=1, Z3=1)],
        "divisors": {"D": {"a": 1, "c": 1, "d": -2}},
        "orders": {"Z1": 1, "Z2": 2, "Z3": 3},
    },
    "single_edge": {
        "divisor_basis": ["Z1"],
        "vertices": ["u", "v"],
        "edges": [edge("e", "u", "v", Z1=1)],
        "divisors": {"D": {"u": 1, "v": -1}},
        "orders": {"Z1": 5},
    },
    "parallel_2_3": {
        "divisor_basis": ["Z1"],
        "vertices": ["u", "v"],
        "edges": [edge("a", "u", "v", Z1=2), edge("b", "u", "v", Z1=3)],
        "divisors": {"D": {"u": 1, "v": -1}},
        "orders": {"Z1": 1},
    },
    "unit_triangle": {
        "divisor_basis": ["Z1"],
        "vertices": ["a", "b", "c"],
        "edges": [edge("e1", "a", "b", Z1=1), edge("e2", "b", "c", Z1=1), edge("e3", "c", "a", Z1=1)],
        "divisors": {"D": {"a": 1, "b": -1}},
        "orders": {"Z1": 1},
    },
    "theta_11": {
        "divisor_basis": ["Z1"],
        "vertices": ["u", "v"],
        "edges": [edge(f"e{i}", "u", "v", Z1=1) for i in range(11)],
        "divisors": {"D": {"u": 1, "v": -1}},
        "orders": {"Z1": 1},
    },
    "disconnected": {
        "divisor_basis": ["Z1"],
        "vertices": ["u", "v", "w"],
        "edges": [edge("e", "u", "v", Z1=1)],
        "divisors": {"D": {"u": 1, "v": -1}},
        "orders": {"Z1": 1},
    },
    "bowtie": {
        "divisor_basis": ["Z1", "Z2"],
        "vertices": ["a", "b", "c", "d", "e"],
        "edges": [
            edge("e1", "a", "b", Z1=1), edge("e2", "b", "c", Z1=2), edge("e3", "c", "a", Z1=1),
            edge("f1", "c", "d", Z2=1), edge("f2", "d", "e", Z1=1), edge("f3", "e", "c", Z2=2),
        ],
        "divisors": {"D": {"a": 1, "e": -1}, "E": {"b": 1, "d": -1}},
        "orders": {"Z1": 1, "Z2": 2},
    },
    "nonzero_degree": {
        "divisor_basis": ["Z1"],
        "vertices": ["u", "v"],
        "edges": [edge("e", "u", "v", Z1=1)],
        "divisors": {"P": {"u": 1}, "D": {"u": 1, "v": -1}},
        "orders": {"Z1": 2},
        "allow_nonzero_degree": True,
    },
}


def random_cases(count: int, seed: int):
    rng = random.Random(seed)
    cfg = InstanceConfig(max_vertices=6, max_edges=9, max_rank=3, max_order=4)
    for k in range(count):
        make = random_aligned_graph if k % 3 == 0 else random_labelled_graph
        lg = make(rng, cfg)
        divs = {"D": random_divisor(rng, lg.graph), "E": random_divisor(rng, lg.graph)}
        m = random_orders(rng, lg.basis, 0, cfg.max_order)
        yield f"random_{k:02d}", problem_from_labelled_graph(lg, divs, m)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    cases = [(name, parse_problem(json.dumps(raw), name)) for name, raw in HAND.items()]
    cases += list(random_cases(20 - len(cases), args.seed))
    for name, problem in cases:
        (out / f"{name}.json").write_text(serialize_problem(problem), encoding="utf-8")
    print(f"wrote {len(cases)} files to {out}")


if __name__ == "__main__":
    main()

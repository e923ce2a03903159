"""Table of the jump on the (1,0)/(0,1) 2-gon next to m1*m2/(m1+m2)."""

import argparse
from fractions import Fraction

from jumplab import (
    BoundaryBasis,
    CombinatorialDivisor,
    Label,
    LabelledGraph,
    MultiGraph,
    OrderVector,
    height_jump,
)
from jumplab.ratlin import format_rational


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=6)
    args = ap.parse_args(argv)
    g = MultiGraph(("u", "v"), (("e1", "u", "v"), ("e2", "u", "v")))
    lg = LabelledGraph(g, BoundaryBasis(("Z1", "Z2")), {"e1": Label((1, 0)), "e2": Label((0, 1))})
    d = CombinatorialDivisor.difference("u", "v")
    width = 8
    print("m1\\m2".ljust(width) + "".join(str(b).rjust(width) for b in range(1, args.max + 1)))
    mismatches = 0
    for a in range(1, args.max + 1):
        cells = []
        for b in range(1, args.max + 1):
            j = height_jump(lg, d, d, OrderVector(lg.basis, (a, b))).value
            mismatches += j != Fraction(a * b, a + b)
            cells.append(format_rational(j).rjust(width))
        print(str(a).ljust(width) + "".join(cells))
    print(f"closed form mismatches: {mismatches}")


if __name__ == "__main__":
    main()

"""Random experiment: nonnegativity of the jump, vanishing on aligned graphs,
and a positive witness on every non-aligned graph."""

import argparse
import random
import time
from collections import Counter

from jumplab.generate import (
    InstanceConfig,
    random_aligned_graph,
    random_divisor,
    random_labelled_graph,
    random_orders,
)
from jumplab.jump import find_positive_jump, height_jump
from jumplab.labels import is_aligned


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-vertices", type=int, default=7)
    ap.add_argument("--max-edges", type=int, default=10)
    ap.add_argument("--max-rank", type=int, default=3)
    args = ap.parse_args(argv)
    cfg = InstanceConfig(max_vertices=args.max_vertices, max_edges=args.max_edges,
                         max_rank=args.max_rank)
    rng = random.Random(args.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for k in range(args.n):
        lg = (random_aligned_graph if k % 2 else random_labelled_graph)(rng, cfg)
        d = random_divisor(rng, lg.graph)
        m = random_orders(rng, lg.basis, 0, cfg.max_order)
        j = height_jump(lg, d, d, m).value
        aligned = bool(is_aligned(lg))
        tally["aligned" if aligned else "not aligned"] += 1
        if j < 0:
            tally["NEGATIVE"] += 1
        if aligned and j != 0:
            tally["aligned but nonzero"] += 1
        if not aligned:
            tally["positive witness found" if find_positive_jump(lg) else "NO WITNESS"] += 1
    for key, n in sorted(tally.items()):
        print(f"{key}: {n}")
    print(f"{args.n} instances in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Round counts of the randomized palette colorer across seeds.

Runs the colorer on seeded G(n, p) instances and prints the distribution
of synchronous rounds, to eyeball the logarithmic-rounds behaviour that
the acceptance suite checks at n = 500.
"""

import argparse
import math
import statistics

from fairgather.coloring import local_random_color
from fairgather.graph import gnp_random_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=500)
    parser.add_argument("--p", type=float, default=0.02)
    parser.add_argument("--seeds", type=int, default=100)
    parser.add_argument("--graph-seed", type=int, default=0)
    args = parser.parse_args()

    g = gnp_random_graph(args.nodes, args.p, seed=args.graph_seed)
    limit = math.ceil(8 * math.log(args.nodes))
    rounds = []
    for seed in range(args.seeds):
        _, log = local_random_color(g, seed=seed)
        rounds.append(log.rounds)

    within = sum(r <= limit for r in rounds)
    print(f"graph: n={len(g)} m={g.num_edges()} max_degree={g.max_degree()}")
    print(f"rounds: min={min(rounds)} median={statistics.median(rounds)} "
          f"max={max(rounds)} mean={statistics.fmean(rounds):.2f}")
    print(f"within ceil(8 ln n) = {limit}: {within}/{args.seeds}")


if __name__ == "__main__":
    main()

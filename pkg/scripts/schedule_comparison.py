#!/usr/bin/env python3
"""Side-by-side gap behaviour of the three schedulers on one graph.

For each node: degree, the phased-replay worst gap (bounded by d+1 but
aperiodic), the omega-code period 2**rho(color) and the slot period
2**ceil(log2(d+1)) <= 2d. Useful for seeing where the color-bound scheme
wins (low colors) and where the degree-bound one does (high colors).
"""

import argparse

from fairgather.coloring import greedy_color
from fairgather.graph import gnp_random_graph
from fairgather.schedulers import degree_slots_sequential, elias_schedule, phased_greedy
from fairgather.verify import report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=30)
    parser.add_argument("--p", type=float, default=0.15)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    g = gnp_random_graph(args.nodes, args.p, seed=args.seed)
    coloring = greedy_color(g)
    horizon = 10 * (g.max_degree() + 1)
    phased = phased_greedy(g, coloring, horizon)
    elias = elias_schedule(g, coloring)
    slots = degree_slots_sequential(g)
    rep = report(g, phased, (1, horizon))

    print(f"graph: n={len(g)} m={g.num_edges()} max_degree={g.max_degree()}")
    print(f"{'node':>5} {'deg':>4} {'color':>6} {'phased gap':>11} "
          f"{'elias period':>13} {'slot period':>12}")
    for v in sorted(g.nodes()):
        gap = rep.nodes[v].max_gap
        print(f"{v:>5} {g.degree(v):>4} {coloring[v]:>6} {gap:>11} "
              f"{elias.period(v):>13} {slots.period(v):>12}")

    totals = [
        ("phased worst gap", max(rep.nodes[v].max_gap for v in g.nodes())),
        ("elias worst period", max(elias.period(v) for v in g.nodes())),
        ("slots worst period", max(slots.period(v) for v in g.nodes())),
    ]
    for label, value in totals:
        print(f"{label}: {value}")


if __name__ == "__main__":
    main()

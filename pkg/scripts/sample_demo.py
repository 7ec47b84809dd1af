"""Walk through the five-node sample graph: safe intervals, useful intervals, rank traces."""
from pathlib import Path

import numpy as np

from adjcent.centrality import ALL_KINDS, Reach, profile, rank_nodes, safe_interval
from adjcent.graph import read_edge_list
from adjcent.intervals import useful_interval_of

SAMPLE = Path(__file__).resolve().parent / "data" / "sample_graph.tsv"


def main():
    g = read_edge_list(SAMPLE)
    print(f"{g.n} nodes, {g.m} edges\n")

    print("safe intervals (inverted weights for closeness)")
    for kind in ALL_KINDS:
        s = safe_interval(g, kind, invert=True)
        print(f"  {str(kind):16} [{s.lo:9.2f}, {s.hi:9.2f}]")

    print("\nuseful intervals")
    for reach in Reach:
        u = useful_interval_of(g, reach)
        print(f"  {reach.name.lower():10} [{u.lo:9.2f}, {u.hi:9.2f}]  "
              f"ends at crossings {u.lo_pair} and {u.hi_pair}")

    alphas = np.linspace(-100, 100, 9)
    for kind in ("degree/prod", "degree/sum"):
        print(f"\nranks under {kind}")
        print("  alpha " + " ".join(f"{x:>6.0f}" for x in alphas))
        ranks = [rank_nodes(profile(g, kind, a)) for a in alphas]
        for u, label in enumerate(g.labels):
            print(f"  {label:5} " + " ".join(f"{int(r[u]):>6}" for r in ranks))


if __name__ == "__main__":
    main()

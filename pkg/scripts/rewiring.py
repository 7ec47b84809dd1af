"""Compare a network's useful intervals with those of degree-preserving surrogates.

Rewiring keeps every degree and the multiset of weights but moves weights
between node pairs, so a change in |U_D| or |U_C| measures how much the
placement of the weights matters.

    python scripts/rewiring.py network.tsv --replicates 100
    python scripts/rewiring.py --generate 200     # an ER+normal graph instead
"""
import argparse
import os
import sys
import tempfile

from adjcent.experiment import parse_sweep_spec, run_sweep, summary_rows
from adjcent.generators import ModelConfig, er_normal
from adjcent.graph import read_edge_list, write_edge_list


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("path", nargs="?", help="weighted edge list")
    parser.add_argument("--directed", action="store_true")
    parser.add_argument("--generate", type=int, metavar="N",
                        help="use an ER+normal graph on N nodes (p = 0.2) instead of a file")
    parser.add_argument("--replicates", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args(argv)
    if (args.path is None) == (args.generate is None):
        parser.error("give either an edge list or --generate N")

    with tempfile.TemporaryDirectory() as tmp:
        path = args.path
        if args.generate:
            path = os.path.join(tmp, "graph.tsv")
            g = er_normal(ModelConfig(n=args.generate, p=0.2, seed=args.seed,
                                      require_connected=True))
            write_edge_list(g, path)
            m = g.m
        else:
            m = read_edge_list(path, directed=args.directed).m
        spec = parse_sweep_spec(
            f"experiment = rewiring\nmodel = rewire\nparam = swaps\n"
            f"grid = 0, {m}, {10 * m}\ninput = {os.path.abspath(path)}\n"
            f"directed = {str(args.directed).lower()}\n"
            f"replicates = {args.replicates}\nseed = {args.seed}\n")
        records = run_sweep(spec, jobs=args.jobs)

    errors = [r.error for r in records if r.error]
    if errors:
        print(f"{len(errors)} replicates failed, e.g. {errors[0]}", file=sys.stderr)
    print(f"edges: {m}")
    for row in summary_rows(records):
        if row["metric"] in ("ud_len", "uc_len"):
            if not row["count"]:
                print(f"swaps={row['value']:<8} {row['metric']} NA (every replicate failed)")
                continue
            print(f"swaps={row['value']:<8} {row['metric']} median {row['median']:.6g}  "
                  f"iqr {row['iqr']:.6g}  (n={row['count']})")


if __name__ == "__main__":
    main()

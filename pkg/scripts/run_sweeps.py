"""Run the synthetic-network sweeps in scripts/sweeps/ and write their CSVs.

    python scripts/run_sweeps.py --jobs 8
    python scripts/run_sweeps.py normal_mean size_wrg --replicates 50
"""
import argparse
import dataclasses
import os
import sys
import time
from pathlib import Path

from adjcent.experiment import read_sweep_spec, run_sweep, summary_rows, write_records, write_summary

HERE = Path(__file__).resolve().parent


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("names", nargs="*", help="sweep names (default: all)")
    parser.add_argument("--sweeps", type=Path, default=HERE / "sweeps")
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--replicates", type=int, help="override the replicate count")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args(argv)

    paths = sorted(args.sweeps.glob("*.txt"))
    if args.names:
        paths = [p for p in paths if p.stem in args.names]
        missing = set(args.names) - {p.stem for p in paths}
        if missing:
            parser.error(f"no sweep named {', '.join(sorted(missing))}")
    args.out.mkdir(parents=True, exist_ok=True)

    for path in paths:
        spec = read_sweep_spec(path)
        if args.replicates:
            spec = dataclasses.replace(spec, replicates=args.replicates)
        start = time.perf_counter()
        records = run_sweep(spec, jobs=args.jobs)
        with open(args.out / f"{path.stem}.csv", "w", newline="") as fh:
            write_records(fh, records)
        rows = summary_rows(records)
        with open(args.out / f"{path.stem}_summary.csv", "w", newline="") as fh:
            write_summary(fh, rows)
        errors = sum(1 for r in records if r.error)
        print(f"{path.stem}: {len(records)} graphs, {errors} errors, "
              f"{time.perf_counter() - start:.1f} s", file=sys.stderr)
        for row in rows:
            if row["metric"] in ("ud_len", "uc_len") and row["count"]:
                print(f"  {row['param']}={row['value']:<8} {row['metric']} "
                      f"median {row['median']:.4g}  iqr {row['iqr']:.4g}")


if __name__ == "__main__":
    main()

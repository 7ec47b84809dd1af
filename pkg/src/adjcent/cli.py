"""Command line: ``adjcent <command> ...``.

Exit codes: 0 success, 1 usage, 2 data/validation, 3 numeric computability.
"""
from __future__ import annotations

import argparse
import secrets
import sys

import numpy as np

from .centrality import (ALL_KINDS, MeasureKind, Reach, Summarization, profile, rank_nodes,
                         safe_interval)
from .errors import ComputabilityError, DataError
from .experiment import (read_sweep_spec, run_sweep, summary_rows, write_csv,
                         write_records, write_summary)
from .generators import ModelConfig, er_normal, rewire, wrg
from .graph import is_connected, read_edge_list, write_edge_list
from .intervals import useful_interval_of

EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 1, 2, 3

ANALYZE_FIELDS = ("nodes", "edges", "connected",
                  "sd_prod_lo", "sd_prod_hi", "sc_prod_lo", "sc_prod_hi",
                  "sd_sum_lo", "sd_sum_hi", "sc_sum_lo", "sc_sum_hi",
                  "ud_lo", "ud_hi", "ud_len", "uc_lo", "uc_hi", "uc_len")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_alpha_grid(text):
    """``"lo:hi:steps"`` (inclusive, uniform) or a comma-separated list."""
    try:
        if ":" in text:
            lo, hi, steps = text.split(":")
            steps = int(steps)
            if steps < 2:
                raise UsageError("an alpha grid needs at least 2 steps")
            return np.linspace(float(lo), float(hi), steps)
        return np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise UsageError(f"bad alpha grid {text!r}; use lo:hi:steps or a,b,c") from None


def parse_measures(text):
    names = tuple(m.strip() for m in text.split(",") if m.strip())
    if not names or not set(names) <= {"degree", "closeness"}:
        raise UsageError(f"--measures takes degree and/or closeness, got {text!r}")
    return names


def _kinds(measures):
    return [k for k in ALL_KINDS if k.reach.value in measures]


def _load(args):
    return read_edge_list(args.path, directed=getattr(args, "directed", False))


def _check_alphas(g, kind, alphas, invert, force):
    """Refuse alphas outside the safe interval of an exponential measure unless forced."""
    if not kind.exponential or force:
        return
    safe = safe_interval(g, kind, invert)
    outside = [float(a) for a in alphas if a not in safe]
    if outside:
        raise ComputabilityError(
            f"alpha={outside[0]!r} lies outside the safe interval "
            f"[{safe.lo:.6g}, {safe.hi:.6g}] of {kind}; pass --force to compute anyway",
            alpha=float(outside[0]))


def _values(g, kind, alpha, invert, force):
    if force:
        return profile(g, kind, alpha, invert, strict=False).values
    return profile(g, kind, alpha, invert).values


def cmd_analyze(args, out):
    g = _load(args)
    measures = parse_measures(args.measures)
    connected = is_connected(g)
    if "closeness" in measures and not connected:
        raise DataError("graph is disconnected; closeness measures need a connected graph "
                        "(use --measures degree)")
    row = dict.fromkeys(ANALYZE_FIELDS)
    row.update(nodes=g.n, edges=g.m, connected=str(connected).lower())
    kinds = {str(k): k for k in ALL_KINDS}
    if "degree" in measures:
        s = safe_interval(g, kinds["degree/prod"])
        row.update(sd_prod_lo=s.lo, sd_prod_hi=s.hi)
        s = safe_interval(g, kinds["degree/sum"])
        row.update(sd_sum_lo=s.lo, sd_sum_hi=s.hi)
        u = useful_interval_of(g, Reach.DEGREE)
        row.update(ud_lo=u.lo, ud_hi=u.hi, ud_len=u.length)
    if "closeness" in measures:
        s = safe_interval(g, kinds["closeness/prod"], args.invert_weights)
        row.update(sc_prod_lo=s.lo, sc_prod_hi=s.hi)
        s = safe_interval(g, kinds["closeness/sum"], args.invert_weights)
        row.update(sc_sum_lo=s.lo, sc_sum_hi=s.hi)
        u = useful_interval_of(g, Reach.CLOSENESS, args.invert_weights)
        row.update(uc_lo=u.lo, uc_hi=u.hi, uc_len=u.length)
    write_csv(out, ANALYZE_FIELDS, [row])

    if args.alpha_grid:
        if not args.values_out:
            raise UsageError("--alpha-grid needs --values-out FILE")
        alphas = parse_alpha_grid(args.alpha_grid)
        rows = []
        for kind in _kinds(measures):
            _check_alphas(g, kind, alphas, args.invert_weights, args.force)
            for alpha in alphas:
                values = _values(g, kind, alpha, args.invert_weights, args.force)
                rows.extend((alpha, str(kind), g.labels[u], v) for u, v in enumerate(values))
        with open(args.values_out, "w", encoding="utf-8") as fh:
            write_csv(fh, ("alpha", "measure", "node", "value"), rows)


def cmd_rank_trace(args, out):
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    g = _load(args)
    kind = MeasureKind.parse(args.measure)
    alphas = np.linspace(args.alpha_min, args.alpha_max, args.steps)
    _check_alphas(g, kind, alphas, args.invert_weights, args.force)
    rows = []
    for alpha in alphas:
        values = _values(g, kind, alpha, args.invert_weights, args.force)
        ranks = rank_nodes(values, allow_nonfinite=args.force)
        for u, (v, r) in enumerate(zip(values, ranks)):
            rows.append((alpha, g.labels[u], v, "NA" if np.isnan(r) else int(r)))
    write_csv(out, ("alpha", "node", "value", "rank"), rows)


def cmd_variance_trace(args, out):
    g = _load(args)
    measures = parse_measures(args.measures)
    alphas = parse_alpha_grid(args.alpha_grid)
    kinds = _kinds(measures)
    for kind in kinds:
        _check_alphas(g, kind, alphas, args.invert_weights, args.force)
    rows = []
    for alpha in alphas:
        row = [alpha]
        for kind in kinds:
            values = _values(g, kind, alpha, args.invert_weights, args.force)
            with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
                var = float(np.var(values))
                # exponential measures are reported as log2 of their variance
                row.append(var if kind.summarization is Summarization.LOG else float(np.log2(var)))
        rows.append(row)
    write_csv(out, ["alpha"] + [str(k).replace("/", "_") for k in kinds], rows)


def _effective_seed(args):
    return args.seed if args.seed is not None else secrets.randbits(63)


def cmd_generate(args, out):
    seed = _effective_seed(args)
    if args.model == "er_normal":
        cfg = ModelConfig(n=args.n, p=args.p, mu=args.mu, sigma=args.sigma, seed=seed,
                          require_connected=args.require_connected, max_retries=args.max_retries)
        g = er_normal(cfg)
    else:
        g = wrg(args.n, args.p, seed, require_connected=args.require_connected,
                max_retries=args.max_retries)
    write_edge_list(g, args.output)
    print(f"seed={seed}", file=out)


def cmd_rewire(args, out):
    g = _load(args)
    seed = _effective_seed(args)
    h = rewire(g, args.swaps, seed)
    write_edge_list(h, args.output)
    print(f"seed={seed}", file=out)
    print(f"swaps={args.swaps}", file=out)


def cmd_sweep(args, out):
    spec = read_sweep_spec(args.spec)
    if args.seed is not None:
        spec.seed = args.seed
    if args.invert_weights_given:
        spec.invert_weights = args.invert_weights
    records = run_sweep(spec, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_records(fh, records)
    else:
        write_records(out, records)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            write_summary(fh, summary_rows(records))


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=default(None),
                        help="random seed (generate, rewire, sweep)")
    parser.add_argument("--invert-weights", action=argparse.BooleanOptionalAction,
                        default=default(True),
                        help="use reciprocal weights as distances for closeness (default: on)")
    parser.add_argument("--force", action="store_true", default=default(False),
                        help="compute exponential measures outside their safe interval")


def build_parser():
    parser = _Parser(prog="adjcent", description="Adjustable centrality, safe and useful "
                     "intervals of the weighting parameter alpha.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="safe and useful intervals of a network")
    p.add_argument("path")
    p.add_argument("--directed", action="store_true", help="read arcs and symmetrize them")
    p.add_argument("--measures", default="degree,closeness")
    p.add_argument("--alpha-grid", help="lo:hi:steps or a,b,c; writes per-node values")
    p.add_argument("--values-out", help="CSV file for the per-alpha values")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rank-trace", parents=[common], help="node ranks along an alpha grid")
    p.add_argument("path")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--measure", required=True, help="e.g. degree/prod, closeness/log")
    p.add_argument("--alpha-min", type=float, required=True)
    p.add_argument("--alpha-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=101)
    p.set_defaults(func=cmd_rank_trace)

    p = sub.add_parser("variance-trace", parents=[common],
                       help="across-node variance of each measure along an alpha grid")
    p.add_argument("path")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--alpha-grid", required=True)
    p.add_argument("--measures", default="degree,closeness")
    p.set_defaults(func=cmd_variance_trace)

    p = sub.add_parser("generate", parents=[common], help="write a random graph")
    p.add_argument("model", choices=("er_normal", "wrg"))
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--mu", type=float, default=10.0)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--require-connected", action="store_true")
    p.add_argument("--max-retries", type=int, default=100)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("rewire", parents=[common], help="write a degree-preserving surrogate")
    p.add_argument("path")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--swaps", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_rewire)

    p = sub.add_parser("sweep", parents=[common], help="run a parameter sweep spec")
    p.add_argument("spec")
    p.add_argument("--out", help="records CSV (default: stdout)")
    p.add_argument("--summary", help="summary CSV: median/IQR and mean/std per grid value")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help
        return exc.code
    args.invert_weights_given = any(a.endswith("invert-weights") for a in argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"adjcent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputabilityError as exc:
        print(f"adjcent: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DataError, OSError) as exc:
        print(f"adjcent: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Parameter sweeps over random graph models and rewired surrogates.

A sweep spec is a flat ``key = value`` text file::

    experiment = normal_mean
    model = er_normal          # er_normal | wrg | rewire
    param = mu                 # or several, comma separated: mu,sigma
    grid = 10, 20, 40, 80      # one entry per setting; mu,sigma -> 10:1, 20:2
    n = 200
    p = 0.2                    # "auto" means ln(n)/sqrt(n)
    sigma = 1
    replicates = 100
    seed = 1
    require_connected = true

For ``model = rewire`` the swept parameter is ``swaps`` and ``input`` names
an edge-list file (relative to the spec file); ``directed = true`` reads it
as arcs.
"""
from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

import numpy as np

from .centrality import Reach
from .errors import ComputabilityError, DataError
from .generators import ModelConfig, er_normal, make_rng, replicate_seed, rewire, wrg
from .graph import degrees, distance_matrix, invert_weights, read_edge_list, strengths
from .intervals import useful_interval_of

MODELS = ("er_normal", "wrg", "rewire")
MODEL_PARAMS = {"er_normal": ("n", "p", "mu", "sigma"), "wrg": ("n", "p"), "rewire": ("swaps",)}


@dataclass(frozen=True)
class SummaryStat:
    median: float
    iqr: float
    count: int


def _quantile(xs, q):
    # inclusive linear interpolation between closest ranks
    h = (len(xs) - 1) * q
    lo = math.floor(h)
    frac = h - lo
    if frac == 0:
        return xs[lo]
    x0, x1 = xs[lo], xs[lo + 1]
    if x0 == x1:
        return x0
    if math.isinf(x0):
        return x0
    if math.isinf(x1):
        return x1
    return x0 + frac * (x1 - x0)


def summarize(values):
    """Median and IQR; infinities sort above all finite values and win any quartile they touch."""
    xs = sorted(float(v) for v in values)
    if not xs:
        raise DataError("cannot summarize an empty sample")
    if any(math.isnan(x) for x in xs):
        raise DataError("cannot summarize NaN")
    q1, q2, q3 = (_quantile(xs, q) for q in (0.25, 0.5, 0.75))
    iqr = math.inf if math.isinf(q1) or math.isinf(q3) else q3 - q1
    return SummaryStat(q2, iqr, len(xs))


@dataclass
class SweepSpec:
    experiment: str
    model: str
    param: tuple
    grid: list
    fixed: dict = field(default_factory=dict)
    replicates: int = 1000
    seed: int = 0
    require_connected: bool = False
    max_retries: int = 100
    invert_weights: bool = True
    measures: tuple = ("degree", "closeness")
    input: str | None = None
    directed: bool = False


def _bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise DataError(f"not a boolean: {text!r}")


def parse_sweep_spec(text, base_dir="."):
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DataError(f"sweep spec line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in raw:
            raise DataError(f"sweep spec line {lineno}: {key!r} given twice")
        raw[key] = value
    try:
        model = raw.pop("model")
        param = tuple(p.strip() for p in raw.pop("param").split(","))
        grid_text = raw.pop("grid")
    except KeyError as exc:
        raise DataError(f"sweep spec is missing {exc.args[0]!r}") from None
    if model not in MODELS:
        raise DataError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    for p in param:
        if p not in MODEL_PARAMS[model]:
            raise DataError(f"model {model} has no parameter {p!r}")
    grid = []
    for entry in grid_text.split(","):
        parts = entry.strip().split(":")
        if len(parts) != len(param):
            raise DataError(f"grid entry {entry.strip()!r} does not match param {','.join(param)}")
        grid.append(tuple(float(x) for x in parts))
    spec = SweepSpec(experiment=raw.pop("experiment", "sweep"), model=model, param=param, grid=grid)
    for key in ("n", "p", "mu", "sigma"):
        if key in raw:
            value = raw.pop(key)
            spec.fixed[key] = value if value == "auto" else float(value)
    try:
        for key, conv in (("replicates", int), ("seed", int), ("max_retries", int),
                          ("require_connected", _bool), ("invert_weights", _bool),
                          ("directed", _bool)):
            if key in raw:
                setattr(spec, key, conv(raw.pop(key)))
    except ValueError as exc:
        raise DataError(f"sweep spec: {exc}") from None
    if "measures" in raw:
        spec.measures = tuple(m.strip() for m in raw.pop("measures").split(","))
        if not set(spec.measures) <= {"degree", "closeness"}:
            raise DataError(f"unknown measures {spec.measures}")
    if "input" in raw:
        spec.input = os.path.join(base_dir, raw.pop("input"))
    if raw:
        raise DataError(f"unknown sweep spec keys: {', '.join(sorted(raw))}")
    if model == "rewire" and spec.input is None:
        raise DataError("model = rewire needs an input edge list")
    if spec.replicates < 1:
        raise DataError("replicates must be >= 1")
    return spec


def read_sweep_spec(path):
    with open(path, encoding="utf-8") as fh:
        return parse_sweep_spec(fh.read(), os.path.dirname(os.path.abspath(path)))


@dataclass
class SweepRecord:
    experiment: str
    param: str
    value: str
    replicate: int
    seed: int
    mean_degree: float | None = None
    mean_strength: float | None = None
    mean_dist: float | None = None
    mean_dist_w: float | None = None
    ud_lo: float | None = None
    ud_hi: float | None = None
    ud_len: float | None = None
    uc_lo: float | None = None
    uc_hi: float | None = None
    uc_len: float | None = None
    error: str = ""


RECORD_FIELDS = tuple(f.name for f in fields(SweepRecord))
METRICS = ("mean_degree", "mean_strength", "mean_dist", "mean_dist_w", "ud_len", "uc_len")


def _mean_offdiag(dist):
    n = dist.shape[0]
    if n < 2:
        return math.nan
    return float((dist.sum() - np.trace(dist)) / (n * (n - 1)))


def measure_graph(g, record, invert=True, measures=("degree", "closeness")):
    """Fill the summary columns of ``record`` for one graph; failures go to ``record.error``."""
    errors = []
    if g.n:
        record.mean_degree = float(degrees(g).mean())
        record.mean_strength = float(strengths(g).mean())
    record.mean_dist = _mean_offdiag(distance_matrix(g))
    try:
        record.mean_dist_w = _mean_offdiag(distance_matrix(invert_weights(g) if invert else g, 1.0))
    except (DataError, ComputabilityError) as exc:
        errors.append(f"dist_w: {exc}")
    for name, reach in (("degree", Reach.DEGREE), ("closeness", Reach.CLOSENESS)):
        if name not in measures:
            continue
        prefix = "ud" if reach is Reach.DEGREE else "uc"
        try:
            u = useful_interval_of(g, reach, invert)
        except (DataError, ComputabilityError) as exc:
            errors.append(f"{prefix}: {exc}")
            continue
        setattr(record, f"{prefix}_lo", u.lo)
        setattr(record, f"{prefix}_hi", u.hi)
        setattr(record, f"{prefix}_len", u.length)
    record.error = "; ".join(errors)
    return record


def model_params(spec, value, n_default=200):
    params = dict(spec.fixed)
    params.update(zip(spec.param, value))
    n = int(params.get("n", n_default))
    if params.get("p") == "auto":
        params["p"] = math.log(n) / math.sqrt(n)
    params["n"] = n
    return params


def _run_one(spec, value, k, base_graph=None):
    seed = replicate_seed(spec.seed, k)
    rec = SweepRecord(spec.experiment, ",".join(spec.param),
                      ":".join(_fmt(v) for v in value), k, seed)
    try:
        params = model_params(spec, value)
        if spec.model == "er_normal":
            cfg = ModelConfig(n=params["n"], p=params.get("p", 0.2), mu=params.get("mu", 10.0),
                              sigma=params.get("sigma", 1.0), seed=seed,
                              require_connected=spec.require_connected,
                              max_retries=spec.max_retries)
            g = er_normal(cfg)
        elif spec.model == "wrg":
            g = wrg(params["n"], params.get("p", 0.2), seed,
                    require_connected=spec.require_connected, max_retries=spec.max_retries)
        else:
            g = rewire(base_graph, int(params["swaps"]), rng=make_rng(seed))
    except (DataError, ComputabilityError) as exc:
        rec.error = f"generate: {exc}"
        return rec
    return measure_graph(g, rec, spec.invert_weights, spec.measures)


def _run_task(args):
    return _run_one(*args)


def run_sweep(spec, jobs=1):
    """One record per (grid value, replicate), in grid-then-replicate order."""
    base = read_edge_list(spec.input, spec.directed) if spec.model == "rewire" else None
    tasks = [(spec, value, k, base) for value in spec.grid for k in range(spec.replicates)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [_run_task(t) for t in tasks]


def summary_rows(records):
    """Median/IQR and mean/std of every metric per grid value."""
    groups = {}
    for rec in records:
        groups.setdefault((rec.experiment, rec.param, rec.value), []).append(rec)
    rows = []
    for (experiment, param, value), recs in groups.items():
        for metric in METRICS:
            xs = [getattr(r, metric) for r in recs]
            xs = [x for x in xs if x is not None and not math.isnan(x)]
            row = {"experiment": experiment, "param": param, "value": value, "metric": metric,
                   "median": None, "iqr": None, "mean": None, "std": None,
                   "count": len(xs), "missing": len(recs) - len(xs)}
            if xs:
                stat = summarize(xs)
                arr = np.array(xs)
                with np.errstate(invalid="ignore"):
                    row.update(median=stat.median, iqr=stat.iqr, mean=float(arr.mean()),
                               std=float(arr.std(ddof=1)) if len(xs) > 1 else None)
            rows.append(row)
    return rows


SUMMARY_FIELDS = ("experiment", "param", "value", "metric", "median", "iqr", "mean", "std",
                  "count", "missing")


def _fmt(x):
    if x is None:
        return "NA"
    if isinstance(x, float):
        if math.isnan(x):
            return "NA"
        if x.is_integer() and abs(x) < 1e15:
            return str(int(x))
        return repr(x)
    return str(x)


def fmt_cell(x):
    """CSV text for a value: repr for floats, ``inf``/``-inf``, ``NA`` for missing."""
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isnan(x):
            return "NA"
        return repr(x)
    if x is None:
        return "NA"
    return str(x)


def write_csv(fh, header, rows):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if isinstance(row, dict):
            row = [row[h] for h in header]
        writer.writerow([fmt_cell(x) for x in row])


def write_records(fh, records):
    write_csv(fh, RECORD_FIELDS, ([getattr(r, f) for f in RECORD_FIELDS] for r in records))


def write_summary(fh, rows):
    write_csv(fh, SUMMARY_FIELDS, rows)

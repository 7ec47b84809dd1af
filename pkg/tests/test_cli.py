import csv
import io
import math
import subprocess
import sys

import numpy as np
import pytest

from adjcent.cli import main, parse_alpha_grid
from adjcent.graph import degrees, read_edge_list
from helpers import SAMPLE_PATH


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_analyze_sample():
    code, text = run("analyze", SAMPLE_PATH)
    assert code == 0
    (row,) = rows_of(text)
    assert (row["nodes"], row["edges"], row["connected"]) == ("5", "6", "true")
    assert float(row["sd_prod_hi"]) == pytest.approx(118.03, abs=0.05)
    assert float(row["sd_prod_lo"]) == pytest.approx(-118.03, abs=0.05)
    assert float(row["sd_sum_hi"]) == pytest.approx(152.2, abs=0.05)
    assert row["sd_sum_lo"] == row["sc_sum_lo"] and row["sd_sum_hi"] == row["sc_sum_hi"]
    assert float(row["ud_lo"]) == pytest.approx(-171.9, abs=0.1)
    assert float(row["ud_hi"]) == pytest.approx(143.8, abs=0.1)


def test_analyze_single_edge(tmp_path):
    path = tmp_path / "edge.tsv"
    path.write_text("a\tb\t3\n")
    code, text = run("analyze", path)
    assert code == 0
    assert "-inf,inf,inf" in text.splitlines()[1]
    (row,) = rows_of(text)
    assert (row["ud_lo"], row["ud_hi"], row["ud_len"]) == ("-inf", "inf", "inf")


def test_analyze_values_out(tmp_path):
    out = tmp_path / "values.csv"
    code, _ = run("analyze", SAMPLE_PATH, "--alpha-grid", "0,1", "--values-out", out)
    assert code == 0
    rows = rows_of(out.read_text())
    assert len(rows) == 2 * 6 * 5
    got = {(r["alpha"], r["measure"], r["node"]): float(r["value"]) for r in rows}
    assert got[("1.0", "degree/sum", "B")] == 409
    assert got[("0.0", "closeness/prod", "C")] == pytest.approx(1 / 7)
    assert run("analyze", SAMPLE_PATH, "--alpha-grid", "0,1")[0] == 1


def test_analyze_disconnected(tmp_path):
    path = tmp_path / "two.tsv"
    path.write_text("a\tb\t1\nc\td\t2\n")
    assert run("analyze", path)[0] == 2
    code, text = run("analyze", path, "--measures", "degree")
    assert code == 0 and rows_of(text)[0]["connected"] == "false"


def test_analyze_directed(tmp_path):
    path = tmp_path / "arcs.tsv"
    path.write_text("a\tb\t1\nb\ta\t2\nb\tc\t4\n")
    code, text = run("analyze", path, "--directed")
    assert code == 0 and rows_of(text)[0]["edges"] == "2"
    assert run("analyze", path)[0] == 2


def test_exit_codes(tmp_path):
    assert run()[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("rank-trace", SAMPLE_PATH)[0] == 1
    assert run("analyze", tmp_path / "missing.tsv")[0] == 2
    bad = tmp_path / "bad.tsv"
    bad.write_text("a\tb\t-1\n")
    assert run("analyze", bad)[0] == 2
    assert run("rank-trace", SAMPLE_PATH, "--measure", "degree/prod",
               "--alpha-min", -130, "--alpha-max", 0, "--steps", 3)[0] == 3
    assert run("rank-trace", SAMPLE_PATH, "--measure", "degree/prod",
               "--alpha-min", 0, "--alpha-max", 1, "--steps", 1)[0] == 1
    assert run("rank-trace", SAMPLE_PATH, "--measure", "pagerank/sum",
               "--alpha-min", 0, "--alpha-max", 1)[0] == 2
    assert run("--help")[0] == 0


def test_force_keeps_overflowed_values():
    code, text = run("rank-trace", SAMPLE_PATH, "--measure", "degree/sum", "--force",
                     "--alpha-min", 200, "--alpha-max", 200, "--steps", 2)
    assert code == 0
    assert all(r["value"] == "inf" for r in rows_of(text))


def trace(measure, lo, hi, steps=21):
    code, text = run("rank-trace", SAMPLE_PATH, "--measure", measure,
                     "--alpha-min", lo, "--alpha-max", hi, "--steps", steps)
    assert code == 0
    ranks = {}
    for r in rows_of(text):
        ranks.setdefault(float(r["alpha"]), {})[r["node"]] = int(r["rank"])
    return ranks


def test_rank_trace_node_c():
    prod = trace("degree/prod", -118, 118)
    alphas = sorted(prod)
    c = [prod[a]["C"] for a in alphas]
    assert c[0] == 5 and c[-1] < c[0]
    assert all(x >= y for x, y in zip(c, c[1:]))
    summed = trace("degree/sum", -118, 118)
    assert all(r["C"] == 5 for r in summed.values())


def test_rank_trace_log_at_zero():
    ranks = trace("degree/log", 0, 1, steps=2)[0.0]
    assert ranks == {"B": 1, "D": 2, "A": 3, "E": 3, "C": 5}


def test_rank_trace_prod_equals_log_inside_safe_interval():
    for reach in ("degree", "closeness"):
        assert trace(f"{reach}/prod", -100, 100, 41) == trace(f"{reach}/log", -100, 100, 41)


def variance_columns(path, grid):
    code, text = run("variance-trace", path, f"--alpha-grid={grid}")
    assert code == 0
    rows = rows_of(text)
    return {k: np.array([float(r[k]) for r in rows]) for k in rows[0]}


def test_variance_trace_sample():
    cols = variance_columns(SAMPLE_PATH, "-2:2:9")
    assert set(cols) == {"alpha", "degree_prod", "degree_sum", "degree_log",
                         "closeness_prod", "closeness_sum", "closeness_log"}
    # values affine in alpha make the variance an exact parabola
    alpha, v = cols["alpha"], cols["degree_log"]
    coef = np.polyfit(alpha[[0, 4, 8]], v[[0, 4, 8]], 2)
    assert np.max(np.abs(np.polyval(coef, alpha) - v)) < 1e-9
    log_degree = np.log2([2, 4, 3, 1, 2])
    assert v[4] == pytest.approx(np.var(log_degree), rel=1e-12)


def test_variance_trace_unit_weights(tmp_path):
    g = read_edge_list(SAMPLE_PATH)
    path = tmp_path / "ones.tsv"
    path.write_text("".join(f"{g.labels[u]}\t{g.labels[v]}\t1\n" for u, v in g.pairs))
    cols = variance_columns(path, "-5:5:6")
    for key in ("degree_log", "closeness_log"):
        assert np.all(cols[key] == cols[key][0])


def test_generate(tmp_path):
    out = tmp_path / "g.tsv"
    code, text = run("generate", "er_normal", "-o", out, "--n", 5, "--p", 0.9, "--seed", 1)
    assert code == 0 and text.strip() == "seed=1"
    g = read_edge_list(out)
    assert g.n == 5
    first = out.read_bytes()
    run("generate", "er_normal", "-o", out, "--n", 5, "--p", 0.9, "--seed", 1)
    assert out.read_bytes() == first

    run("generate", "er_normal", "-o", out, "--n", 20, "--p", 0.5, "--sigma", 0, "--mu", 3,
        "--seed", 2)
    assert set(read_edge_list(out).weights.tolist()) == {3.0}

    code, _ = run("generate", "wrg", "-o", out, "--n", 40, "--p", 0.01, "--seed", 2,
                  "--require-connected", "--max-retries", 3)
    assert code == 2
    code, text = run("generate", "wrg", "-o", out, "--n", 30, "--p", 0.3)
    assert code == 0 and text.startswith("seed=")


def test_rewire(tmp_path):
    src, out = tmp_path / "g.tsv", tmp_path / "r.tsv"
    run("generate", "er_normal", "-o", src, "--n", 30, "--p", 0.3, "--seed", 4)
    g = read_edge_list(src)
    code, _ = run("rewire", src, "--swaps", 0, "-o", out, "--seed", 1)
    assert code == 0 and sorted(out.read_text().splitlines()) == sorted(src.read_text().splitlines())
    code, text = run("rewire", src, "--swaps", 6 * g.m, "-o", out, "--seed", 1)
    assert code == 0 and f"swaps={6 * g.m}" in text
    h = read_edge_list(out)
    by_label = dict(zip(h.labels, degrees(h)))
    assert [by_label[x] for x in g.labels] == list(degrees(g))
    assert sorted(h.weights) == sorted(g.weights)


def test_rewire_sample_graph_has_no_valid_switch(tmp_path):
    # every edge pair of the small example either shares a node or would duplicate an edge
    assert run("rewire", SAMPLE_PATH, "--swaps", 36, "-o", tmp_path / "r.tsv", "--seed", 1)[0] == 2


def test_sweep(tmp_path):
    spec = tmp_path / "spec.txt"
    spec.write_text("experiment = tiny\nmodel = wrg\nparam = p\ngrid = 0.2, 0.4\nn = 20\n"
                    "replicates = 2\nseed = 3\n")
    out, summary = tmp_path / "out.csv", tmp_path / "summary.csv"
    assert run("sweep", spec, "--out", out, "--summary", summary)[0] == 0
    records = rows_of(out.read_text())
    assert [r["value"] for r in records] == ["0.2", "0.2", "0.4", "0.4"]
    first = (out.read_bytes(), summary.read_bytes())
    run("sweep", spec, "--out", out, "--summary", summary, "--jobs", 2)
    assert (out.read_bytes(), summary.read_bytes()) == first
    code, text = run("sweep", spec, "--seed", 9)
    assert code == 0 and text != first[0].decode()
    spec.write_text("model = nope\n")
    assert run("sweep", spec)[0] == 2


def test_analyze_is_byte_identical():
    assert run("analyze", SAMPLE_PATH) == run("analyze", SAMPLE_PATH)


def test_parse_alpha_grid():
    assert list(parse_alpha_grid("0:1:3")) == [0, 0.5, 1]
    assert list(parse_alpha_grid("1,2.5")) == [1, 2.5]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "adjcent", "analyze", str(SAMPLE_PATH),
                           "--measures", "degree"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("nodes,edges")
    assert not math.isnan(float(proc.stdout.splitlines()[1].split(",")[3]))

import logging
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from graphcycles.cli import EXIT_CONSTRUCTION, EXIT_INVALID, EXIT_OK, main
from graphcycles.services.graph_io import read_graph
from graphcycles.services.reports import read_rows, split_metadata


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def _run(*argv):
    return main(["--log-level", "WARNING", *argv])


def test_theory_curve_rows(tmp_path):
    out = tmp_path / "curve.csv"
    assert _run("theory", "--family", "turbo", "--n", "64000", "--kmin", "4", "--kmax", "20", "--out", str(out)) == EXIT_OK
    rows = read_rows(out)
    assert len(rows) == 17
    assert [int(row["k"]) for row in rows] == list(range(4, 21))
    assert float(rows[0]["p_no_cycle_leq_k"]) == pytest.approx(0.999938, abs=1e-4)
    assert float(rows[8]["p_no_cycle_leq_k"]) == pytest.approx(0.968456, abs=1e-4)
    assert {row["variant"] for row in rows} == {"turbo"}


def test_theory_writes_to_stdout(capsys):
    assert _run("theory", "--family", "ldpc", "--n", "15000", "--dv", "3", "--dc", "5", "--kmax", "10") == EXIT_OK
    metadata, body = split_metadata(capsys.readouterr().out)
    assert body.splitlines()[0] == "k,p_no_cycle_leq_k,variant,n,dv,dc"
    assert len(body.splitlines()) == 8


def test_generate_is_reproducible(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (first, second):
        assert _run("generate", "--family", "srandom", "--n", "500", "--s", "8", "--seed", "17", "--out", str(path)) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    graph, header = read_graph(first)
    assert (header.kind, header.n, header.seed, header.s) == ("turbo", 500, 17, 8)
    assert graph.node_count == 1000


def test_generate_ldpc_to_stdout(capsys):
    assert _run("generate", "--family", "ldpc", "--n", "30", "--dv", "3", "--dc", "6", "--seed", "2") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "ldpc n=30 w=15 dv=3 dc=6 seed=2"
    assert len(lines) == 1 + 90


def test_exit_codes(tmp_path):
    assert _run("generate", "--n", "0") == EXIT_INVALID
    assert _run("generate", "--family", "srandom", "--n", "4", "--s", "4", "--max-restarts", "2") == EXIT_CONSTRUCTION
    assert _run("generate", "--family", "ldpc", "--n", "10", "--dv", "3", "--dc", "7") == EXIT_INVALID
    assert _run("theory", "--n", "20", "--kmax", "20") == EXIT_INVALID
    assert _run("census", "--graph", str(tmp_path / "missing.txt")) == EXIT_INVALID
    assert _run("no-such-command") == EXIT_INVALID
    assert _run("theory", "--n", "100", "--bogus") == EXIT_INVALID


def test_report_write_failure_exits_with_invalid(tmp_path):
    assert _run("khalf", "--n", "1000", "--out", str(tmp_path)) == EXIT_INVALID


def test_census_command(tmp_path):
    graph_file = tmp_path / "square.txt"
    graph_file.write_text("turbo n=2 seed=1 s=0\n0 1\n", encoding="utf-8")
    out, summary = tmp_path / "census.csv", tmp_path / "summary.csv"
    code = _run("census", "--graph", str(graph_file), "--kmax", "6", "--out", str(out), "--summary", str(summary))
    assert code == EXIT_OK
    assert read_rows(out) == [
        {"node_id": f"{side}:{index}", "k": "4", "count": "1"} for side in (0, 1) for index in (0, 1)
    ]
    fractions = {int(row["k"]): float(row["frac_nodes_no_cycle_leq_k"]) for row in read_rows(summary)}
    assert fractions == {1: 1.0, 2: 1.0, 3: 1.0, 4: 0.0, 5: 0.0, 6: 0.0}


def test_census_selected_nodes_with_u(tmp_path):
    graph_file = tmp_path / "square.txt"
    graph_file.write_text("turbo n=2 seed=1 s=0\n0 1\n", encoding="utf-8")
    out = tmp_path / "census.csv"
    assert _run("census", "--graph", str(graph_file), "--kmax", "6", "--nodes", "0:0", "--include-u", "--out", str(out)) == EXIT_OK
    assert read_rows(out) == [{"node_id": "0:0", "k": "6", "count": "1"}]
    assert _run("census", "--graph", str(graph_file), "--nodes", "0:x", "--out", str(out)) == EXIT_INVALID


def test_simulate_bodies_do_not_depend_on_threads(tmp_path):
    bodies = []
    for threads in ("1", "8"):
        out = tmp_path / f"report-{threads}.csv"
        code = _run(
            "simulate", "--n", "200", "--graphs", "4", "--nodes", "5", "--kmax", "10",
            "--seed", "42", "--threads", threads, "--out", str(out),
        )
        assert code == EXIT_OK
        metadata, body = split_metadata(out.read_text(encoding="utf-8"))
        assert metadata["sample_size"] == "20"
        assert metadata["seeds"] == "42 43 44 45"
        bodies.append(body)
    assert bodies[0] == bodies[1]
    assert bodies[0].splitlines()[0] == "k,p_sim,sigma,p_theory,diff,sigma_theory"


def test_simulate_then_compare(tmp_path):
    report, census_out, independence_out = tmp_path / "report.csv", tmp_path / "census.csv", tmp_path / "ind.csv"
    code = _run(
        "simulate", "--n", "300", "--graphs", "2", "--nodes", "10", "--kmax", "8", "--seed", "3",
        "--out", str(report), "--census", str(census_out), "--independence", str(independence_out),
    )
    assert code == EXIT_OK
    assert [int(row["k"]) for row in read_rows(census_out)] == list(range(1, 9))
    assert [int(row["k"]) for row in read_rows(independence_out)] == list(range(1, 8))

    comparison = tmp_path / "compare.csv"
    assert _run("compare", "--report", str(report), "--out", str(comparison)) == EXIT_OK
    simulated = read_rows(report)
    compared = read_rows(comparison)
    assert [row["p_sim"] for row in compared] == [row["p_sim"] for row in simulated]
    assert [row["p_theory"] for row in compared] == [row["p_theory"] for row in simulated]


def test_config_file_drives_simulation(tmp_path):
    config_file = tmp_path / "experiment.env"
    config_file.write_text("family=ldpc\nn=120\ndv=3\ndc=6\ngraphs=2\nnodes=5\nkmax=8\nseed=4\n", encoding="utf-8")
    out = tmp_path / "report.csv"
    assert _run("simulate", "--config", str(config_file), "--out", str(out)) == EXIT_OK
    metadata, _ = split_metadata(out.read_text(encoding="utf-8"))
    assert "family=ldpc" in metadata["config"]
    assert "dv=3" in metadata["config"]


def test_srandom_table(tmp_path):
    out = tmp_path / "table.csv"
    code = _run("srandom-table", "--n", "2000", "--s", "20", "--graphs", "2", "--nodes", "10", "--kmax", "8", "--out", str(out))
    assert code == EXIT_OK
    rows = read_rows(out)
    assert list(rows[0]) == ["k", "random", "S=20"]
    assert all(float(row["S=20"]) == 1.0 for row in rows if int(row["k"]) < 8)


def test_khalf(capsys):
    assert _run("khalf", "--n", "64000", "--n", "1000") == EXIT_OK
    _, body = split_metadata(capsys.readouterr().out)
    lines = body.splitlines()
    assert lines[0] == "n,k_half"
    assert lines[1].startswith("64000,16.43")

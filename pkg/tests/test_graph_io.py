import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from graphcycles.models import LdpcGraph, Permutation, TurboGraph
from graphcycles.services.errors import GraphFormatError, InvalidParameterError, ReportWriteError
from graphcycles.services.generators import build_ldpc_graph, build_turbo_graph, gen_random_permutation
from graphcycles.services.graph_io import format_graph, parse_graph, read_graph, write_graph


def test_format_turbo_graph():
    graph = build_turbo_graph(Permutation.from_values([2, 0, 1]))
    assert format_graph(graph, seed=7) == "turbo n=3 seed=7 s=0\n2 0 1\n"
    assert format_graph(graph, seed=7, s=2).startswith("turbo n=3 seed=7 s=2\n")


def test_format_ldpc_graph():
    graph = LdpcGraph(n=2, w=2, d_v=2, d_c=2, edges=((0, 0), (0, 1), (1, 0), (1, 1)))
    assert format_graph(graph, seed=3) == "ldpc n=2 w=2 dv=2 dc=2 seed=3\n0 0\n0 1\n1 0\n1 1\n"


def test_turbo_graph_file_round_trip(tmp_path):
    graph = build_turbo_graph(gen_random_permutation(25, 4))
    path = write_graph(graph, tmp_path / "nested" / "turbo.txt", seed=4, s=1)
    loaded, header = read_graph(path)
    assert loaded == graph
    assert isinstance(loaded, TurboGraph)
    assert header.to_dict() == {"kind": "turbo", "n": 25, "seed": 4, "s": 1}


def test_ldpc_graph_file_round_trip(tmp_path):
    graph = build_ldpc_graph(20, 3, 6, seed=8, max_restarts=1000)
    path = write_graph(graph, tmp_path / "ldpc.txt", seed=8)
    loaded, header = read_graph(path)
    assert loaded == graph
    assert (header.w, header.d_v, header.d_c, header.seed) == (10, 3, 6, 8)


def test_permutation_may_span_lines():
    graph, header = parse_graph("\nturbo n=4 seed=1 s=0\n3 1\n\n0 2\n")
    assert graph.perm.map == (3, 1, 0, 2)
    assert header.kind == "turbo"


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("", 1),
        ("graph n=3 seed=1\n0 1 2\n", 1),
        ("turbo n=3 seed=1\n0 1 2\n", 1),
        ("turbo n=3 seed=1 s=0 extra=2\n0 1 2\n", 1),
        ("turbo n=three seed=1 s=0\n0 1 2\n", 1),
        ("turbo n=3 seed=1 s=0\n0 1\n", 2),
        ("turbo n=3 seed=1 s=0\n0 1\nx\n", 3),
        ("turbo n=3 seed=1 s=0\n0 1 1\n", 2),
        ("ldpc n=2 w=2 dv=2 dc=2 seed=1\n0 0\n0 1 2\n1 0\n1 1\n", 3),
        ("ldpc n=2 w=2 dv=2 dc=2 seed=1\n0 0\n0 1\n1 0\n", 1),
    ],
)
def test_malformed_graph_reports_line(text, line_number):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line_number == line_number
    assert f"linha {line_number}" in str(excinfo.value)


def test_read_missing_file(tmp_path):
    with pytest.raises(InvalidParameterError):
        read_graph(tmp_path / "missing.txt")


def test_read_invalid_utf8_reports_line(tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"turbo n=2 seed=1 s=0\n0 \xff\xfe1\n")
    with pytest.raises(GraphFormatError) as excinfo:
        read_graph(path)
    assert excinfo.value.line_number == 2


def test_write_into_directory_fails(tmp_path):
    graph = build_turbo_graph(Permutation.identity(3))
    with pytest.raises(ReportWriteError) as excinfo:
        write_graph(graph, tmp_path, seed=1)
    assert excinfo.value.path == str(tmp_path)

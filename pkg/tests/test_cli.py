"""Command-line interface: JSON reports, exit codes, formats."""

import io
import json
import math
import subprocess
import sys

import pytest

from pstwalk.cli import main

P3_EDGELIST = "3 2\n0 1\n1 2\n"
P2_EDGELIST = "2 1\n0 1\n"
P4_EDGELIST = "4 3\n0 1\n1 2\n2 3\n"
C4_EDGELIST = "4 4\n0 1\n1 2\n2 3\n0 3\n"
K1_EDGELIST = "1 0\n"


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="g.el"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run_json(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


def assert_floats_are_12_digit(obj):
    if isinstance(obj, float):
        assert float(f"{obj:.12g}") == obj
    elif isinstance(obj, dict):
        for v in obj.values():
            assert_floats_are_12_digit(v)
    elif isinstance(obj, list):
        for v in obj:
            assert_floats_are_12_digit(v)


def test_charpoly_p3(capsys, graph_file):
    code, report, err = run_json(capsys, ["charpoly", graph_file(P3_EDGELIST)])
    assert code == 0
    assert report["result"]["charpoly"] == [0, -2, 0, 1]
    assert report["schema_version"] == "1"
    assert report["command"] == "charpoly"
    assert len(report["input_digest"]) == 64
    assert report["wall_time_s"] >= 0
    assert "t^3" in err


def test_charpoly_deleted(capsys, graph_file):
    code, report, _ = run_json(
        capsys, ["charpoly", graph_file(P3_EDGELIST), "--deleted", "1"]
    )
    assert code == 0
    assert report["result"]["deleted_charpoly"] == [0, 0, 1]
    assert report["result"]["charpoly"] == [0, -2, 0, 1]


def test_charpoly_k1(capsys, graph_file):
    code, report, _ = run_json(capsys, ["charpoly", graph_file(K1_EDGELIST)])
    assert code == 0
    assert report["result"]["charpoly"] == [0, 1]


def test_charpoly_rejects_fractional_weights(capsys, graph_file):
    path = graph_file("2 1\n0 1 0.5\n")
    assert main(["charpoly", path]) == 2


def test_spectrum_c4(capsys, graph_file):
    code, report, _ = run_json(capsys, ["spectrum", graph_file(C4_EDGELIST)])
    assert code == 0
    assert report["result"]["multiplicities"] == [1, 2, 1]
    eig = report["result"]["distinct_eigenvalues"]
    assert eig == pytest.approx([2.0, 0.0, -2.0], abs=1e-9)
    assert_floats_are_12_digit(report)


def test_cospectral_examples(capsys, graph_file):
    path = graph_file(P3_EDGELIST)
    code, report, _ = run_json(capsys, ["cospectral", path, "0", "2", "--strong"])
    assert code == 0
    assert report["result"]["cospectral"] is True
    assert report["result"]["strongly_cospectral"] is True
    assert len(report["result"]["signature"]["eigenvalues"]) == 3

    code, report, _ = run_json(capsys, ["cospectral", path, "0", "1"])
    assert code == 0
    assert report["result"]["cospectral"] is False
    assert "signature" not in report["result"]


def test_pst_success(capsys, graph_file):
    code, report, err = run_json(capsys, ["pst", graph_file(P2_EDGELIST), "0", "1"])
    assert code == 0
    res = report["result"]
    assert res["status"] == "success"
    assert res["pst_time"] == pytest.approx(math.pi / 2, rel=1e-10)
    assert res["fidelity_confirmation"] >= 1 - 1e-9
    assert_floats_are_12_digit(report)
    assert "transfer" in err


def test_pst_failure(capsys, graph_file):
    code, report, _ = run_json(capsys, ["pst", graph_file(P4_EDGELIST), "1", "2"])
    assert code == 0  # a certified negative is an expected outcome
    assert report["result"]["status"] == "fail"
    assert report["result"]["failure_reason"] == "no_common_alpha"


def test_pst_same_vertex_is_input_error(capsys, graph_file):
    assert main(["pst", graph_file(P2_EDGELIST), "1", "1"]) == 2


def test_compose_two_singletons(capsys, graph_file):
    path = graph_file(K1_EDGELIST)
    code, report, _ = run_json(
        capsys,
        ["compose", "--y1", path, "--a", "0", "--y2", path, "--b", "0", "--bridge", "2"],
    )
    assert code == 0
    res = report["result"]
    assert res["a"] == 0 and res["b"] == 1
    assert res["edgelist"].startswith("2 1")
    assert res["analysis"]["strongly_cospectral"] is True
    assert res["analysis"]["certificate"]["status"] == "success"


def test_compose_star_centers(capsys, graph_file):
    star = graph_file("3 2\n0 1\n0 2\n")
    code, report, _ = run_json(
        capsys,
        ["compose", "--y1", star, "--a", "0", "--y2", star, "--b", "0"],
    )
    assert code == 0
    res = report["result"]
    assert res["edgelist"].startswith("6 5")
    assert res["analysis"]["certificate"]["status"] == "fail"


def test_search_trivial_success(capsys):
    code, report, err = run_json(capsys, ["search", "--bridge", "2", "--max-n", "1"])
    assert code == 0
    res = report["result"]
    assert res["instances_tested"] == 1
    assert len(res["pst_successes"]) == 1
    assert res["nontrivial_successes"] == []
    assert "1 with transfer" in err


def test_search_stdin_graph6(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"@\n")))
    code, report, _ = run_json(
        capsys, ["search", "--bridge", "2", "--max-n", "1", "--stdin-graph6"]
    )
    assert code == 0
    assert report["result"]["family"]["source"] == "stream"
    assert report["result"]["instances_tested"] == 1


def test_verify_suite(capsys):
    code, report, err = run_json(
        capsys, ["verify", "--suite", "onesum", "--instances", "10"]
    )
    assert code == 0
    assert report["result"]["passed"] is True
    assert "all passed" in err


def test_verify_unknown_suite_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "bogus"])


def test_stdin_edgelist(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(P3_EDGELIST.encode())))
    code, report, _ = run_json(capsys, ["charpoly", "-"])
    assert code == 0
    assert report["result"]["charpoly"] == [0, -2, 0, 1]


def test_graph6_format_flag(capsys, graph_file):
    path = graph_file("Cs", name="g.txt")
    code, report, _ = run_json(capsys, ["charpoly", path, "--format", "graph6"])
    assert code == 0
    assert report["result"]["charpoly"] == [0, 0, -3, 0, 1]


def test_graph6_format_by_extension(capsys, graph_file):
    path = graph_file("Cs", name="g.g6")
    code, report, _ = run_json(capsys, ["charpoly", path])
    assert code == 0
    assert report["result"]["charpoly"] == [0, 0, -3, 0, 1]


def test_input_errors_exit_2(capsys, graph_file):
    assert main(["charpoly", "/nonexistent/file.el"]) == 2
    assert main(["charpoly", graph_file("garbage")]) == 2
    assert main(["spectrum", graph_file("2 1\n0 9\n")]) == 2
    assert main(["cospectral", graph_file(P3_EDGELIST), "0", "9"]) == 2
    assert main(["cospectral", graph_file(P3_EDGELIST), "1", "1"]) == 2
    err = capsys.readouterr().err
    assert "input error" in err


def test_parse_error_reports_line(capsys, graph_file):
    code = main(["charpoly", graph_file("3 2\n0 1\nbroken")])
    assert code == 2
    assert "line 3" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pstwalk", "charpoly", "-"],
        input=P2_EDGELIST,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["result"]["charpoly"] == [-1, 0, 1]


def test_console_script_help():
    proc = subprocess.run(
        [sys.executable, "-m", "pstwalk", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    for name in ("charpoly", "spectrum", "cospectral", "pst", "compose", "search", "verify"):
        assert name in proc.stdout

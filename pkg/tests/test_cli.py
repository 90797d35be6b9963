import io
import json

import pytest

from twographs.cli import main
from twographs.formats import format_graph, parse_graph
from twographs.graphs import complete_graph, named_figure


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, g, fmt="edge-list"):
    path = tmp_path / name
    path.write_text(format_graph(g, fmt))
    return str(path)


def test_gen_named_figure(capsys):
    code, out, _ = run_cli(capsys, "gen", "named-figure", "--name", "x1_6")
    assert code == 0
    assert parse_graph(out, "edge-list") == named_figure("x1_6")


def test_gen_families(capsys):
    code, out, _ = run_cli(capsys, "gen", "cycle", "--n", "5")
    assert code == 0
    assert out.splitlines()[0] == "5"
    code, out, _ = run_cli(capsys, "gen", "complete", "--n", "4", "--out-format", "graph6")
    assert code == 0
    assert parse_graph(out, "graph6") == complete_graph(4)


def test_gen_errors(capsys):
    code, _, err = run_cli(capsys, "gen", "paley")
    assert code == 2 and "--q" in err
    code, _, err = run_cli(capsys, "gen", "named-figure", "--name", "nope")
    assert code == 2


def test_canon_literal(capsys):
    code, out, _ = run_cli(capsys, "canon", "--graph", "n=3;12")
    assert code == 0
    assert out.startswith("cert: ")
    code2, out2, _ = run_cli(capsys, "canon", "--graph", "n=3;23")
    assert out == out2


def test_equiv_exit_codes(capsys, tmp_path):
    a = write_graph(tmp_path, "a.el", named_figure("x3_3"))
    b = write_graph(tmp_path, "b.el", named_figure("x4_3"))
    code, out, _ = run_cli(capsys, "equiv", a, b)
    assert code == 0
    assert out.splitlines()[0] == "equivalent: yes"
    assert out.count("cert: ") == 2

    c = write_graph(tmp_path, "c.el", named_figure("x1_6"))
    d = write_graph(tmp_path, "d.el", named_figure("x2_6"))
    code, out, _ = run_cli(capsys, "equiv", c, d)
    assert code == 1
    assert out.splitlines()[0] == "equivalent: no"

    code, _, err = run_cli(capsys, "equiv", a, d)
    assert code == 2 and "vertex counts" in err

    (tmp_path / "bad.el").write_text("3\n1 999\n")
    code, _, err = run_cli(capsys, "equiv", a, str(tmp_path / "bad.el"))
    assert code == 2


def test_spectrum_output(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--graph", "n=4;")
    assert code == 0
    assert out.strip() == "3,-1,-1,-1"


def test_norms_json(capsys):
    code, out, _ = run_cli(
        capsys, "norms", "--graph", "n=6;12,13,24,34", "--family", "one", "--m", "3"
    )
    assert code == 0
    row = json.loads(out)
    assert row["n"] == 6 and row["m"] == 3
    assert abs(row["value"] - 1.32) < 1e-9

    code, out, _ = run_cli(
        capsys,
        "norms",
        "--graph",
        "n=5;12",
        "--family",
        "inf",
        "--m",
        "4",
    )
    assert abs(json.loads(out)["value"] - 1.75) < 1e-9


def test_norms_distribution(capsys):
    code, out, _ = run_cli(
        capsys,
        "norms",
        "--graph",
        "n=6;12,13,24,34",
        "--family",
        "one",
        "--m",
        "3",
        "--distribution",
    )
    row = json.loads(out)
    counts = sorted(b["count"] for b in row["distribution"])
    assert counts == [8, 12]


def test_norms_m_range(capsys):
    code, out, _ = run_cli(
        capsys, "norms", "--graph", "n=4;", "--family", "one", "--m", "1-4"
    )
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["m"] for r in rows] == [1, 2, 3, 4]
    assert rows[0]["value"] == 1.0


def test_deck_listing_and_compare(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "deck", "--graph", "n=6;12,13,24,34")
    assert code == 0
    assert out.count("cert: ") == 1 and out.strip().endswith("x6")

    a = write_graph(tmp_path, "a.el", named_figure("x1_6"))
    b = write_graph(tmp_path, "b.el", named_figure("x2_6"))
    code, out, _ = run_cli(capsys, "deck", a, "--compare", b)
    assert code == 1
    assert out.strip() == "iso: no  switch-equiv: no"

    code, out, _ = run_cli(capsys, "deck", a, "--compare", a)
    assert code == 0
    assert out.strip() == "iso: yes  switch-equiv: yes"


def test_census_writes_table(capsys, tmp_path):
    out_path = tmp_path / "census_5.tsv"
    code, out, _ = run_cli(capsys, "census", "--n", "5", "--out", str(out_path))
    assert code == 0
    assert "switching-equivalence=7" in out
    lines = [l for l in out_path.read_text().splitlines() if not l.startswith("#")]
    assert len(lines) == 7


def test_census_stretch_flag(capsys, tmp_path):
    code, _, err = run_cli(capsys, "census", "--n", "8", "--out", str(tmp_path / "c8.tsv"))
    assert code == 2 and "--stretch" in err


def test_verify_claims(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "spectrum", "--n", "5")
    assert code == 0 and out.startswith("PASS")

    code, out, _ = run_cli(capsys, "verify", "--claim", "one-norm", "--n", "5")
    assert code == 0 and out.startswith("PASS")
    assert "min separation" in out

    code, out, _ = run_cli(capsys, "verify", "--claim", "infinity-norm", "--n", "6")
    assert code == 1 and out.startswith("FAIL")
    assert "witness" in out

    code, out, _ = run_cli(capsys, "verify", "--claim", "deck", "--n", "5")
    assert code == 0 and out.startswith("PASS")

    code, _, err = run_cli(capsys, "verify", "--claim", "deck", "--n", "12")
    assert code == 2


def test_frame_pipeline(capsys, monkeypatch):
    code, seidel_text, _ = run_cli(capsys, "gen", "paley", "--q", "25")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(seidel_text))
    code, out, _ = run_cli(capsys, "frame", "analyze", "-")
    assert code == 0
    lines = dict(
        line.split(": ", 1) for line in out.splitlines() if ": " in line
    )
    assert lines["n"] == "26"
    assert lines["k"] == "13"
    assert lines["c"] == "0.1"
    assert lines["lambda1"] == "-5"
    assert float(lines["projection-residual"]) < 1e-10


def test_frame_vectors_tsv(capsys, tmp_path):
    code, seidel_text, _ = run_cli(capsys, "gen", "paley", "--q", "9")
    path = tmp_path / "paley10.seidel"
    path.write_text(seidel_text)
    code, out, _ = run_cli(capsys, "frame", "vectors", str(path))
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 10 and len(rows[0]) == 5


def test_frame_rejects_non_signature(capsys, tmp_path):
    path = write_graph(tmp_path, "c5.seidel", __import__("twographs").cycle_graph(5), "seidel")
    code, _, err = run_cli(capsys, "frame", "analyze", str(path))
    assert code == 2 and "signature" in err


def test_threads_do_not_change_bytes(capsys):
    outs = []
    for t in ("1", "2", "3"):
        code, out, _ = run_cli(
            capsys,
            "--threads",
            t,
            "norms",
            "--graph",
            "n=8;12,23,34,45,56,67,78,18",
            "--family",
            "one",
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_parse_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "junk.el"
    path.write_text("not a graph\n1 2\n")
    code, _, err = run_cli(capsys, "canon", str(path))
    assert code == 2 and "error" in err


def test_console_script_pipeline():
    import shutil
    import subprocess

    exe = shutil.which("twographs")
    if exe is None:
        pytest.skip("console script not on PATH")
    gen = subprocess.run(
        [exe, "gen", "paley", "--q", "25"], capture_output=True, text=True
    )
    assert gen.returncode == 0
    ana = subprocess.run(
        [exe, "frame", "analyze", "-"],
        input=gen.stdout,
        capture_output=True,
        text=True,
    )
    assert ana.returncode == 0
    fields = dict(
        line.split(": ", 1) for line in ana.stdout.splitlines() if ": " in line
    )
    assert fields["k"] == "13"
    assert fields["c"] == "0.1"
    assert fields["lambda1"] == "-5"

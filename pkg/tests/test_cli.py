"""End-to-end tests for the command-line driver: exit codes, file formats,
and byte-level determinism."""

from __future__ import annotations

import json

import pytest

from diskpack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def gen(tmp_path, capsys, n=12, seed=3, box=2.5):
    pts = tmp_path / "pts.csv"
    code, _, _ = run(
        capsys, "gen", "--n", str(n), "--seed", str(seed), "--box", str(box),
        "-o", str(pts),
    )
    assert code == 0
    return pts


def test_gen_writes_parseable_csv(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    lines = pts.read_text().strip().splitlines()
    assert len(lines) == 12
    from fractions import Fraction

    for line in lines:
        x, y = line.split(",")
        Fraction(x), Fraction(y)


def test_gen_deterministic(tmp_path, capsys):
    a = gen(tmp_path / "a", capsys) if (tmp_path / "a").mkdir() is None else None
    b = gen(tmp_path / "b", capsys) if (tmp_path / "b").mkdir() is None else None
    assert a.read_bytes() == b.read_bytes()


def test_solve_matches_oracle_and_exit_codes(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    code, out, _ = run(capsys, "oracle", "--points", str(pts))
    assert code == 0
    want = json.loads(out)["value"]
    assert want >= 1

    code, out, _ = run(capsys, "solve", "--points", str(pts), "--k", str(want))
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["value"] == want and len(doc["cycles"]) == want

    code, out, _ = run(
        capsys, "solve", "--points", str(pts), "--k", str(want + 1)
    )
    assert code == 1  # infeasible k
    assert json.loads(out)["value"] == want


def test_solve_output_byte_identical(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    _, out1, _ = run(capsys, "solve", "--points", str(pts), "--k", "1")
    _, out2, _ = run(capsys, "solve", "--points", str(pts), "--k", "1")
    assert out1 == out2


def test_verify_roundtrip_and_rejection(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    code, out, _ = run(capsys, "solve", "--points", str(pts), "--k", "1")
    cycles = json.loads(out)["cycles"]
    sol = tmp_path / "sol.json"
    sol.write_text(json.dumps({"cycles": cycles}))
    code, out, _ = run(
        capsys, "verify", "--points", str(pts), "--solution", str(sol)
    )
    assert code == 0 and json.loads(out)["valid"]

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[0, 1]]))  # two vertices never form a cycle
    code, out, _ = run(
        capsys, "verify", "--points", str(pts), "--solution", str(bad)
    )
    assert code == 1 and not json.loads(out)["valid"]


def test_decompose_json_and_svg(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    svg = tmp_path / "dec.svg"
    code, out, _ = run(
        capsys, "decompose", "--points", str(pts), "--svg", str(svg)
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["width"] > 0 and doc["nodes"]
    text = svg.read_text()
    assert text.startswith("<svg") and "<circle" in text


def test_arcs_counts_and_listing(capsys):
    code, out, _ = run(capsys, "arcs", "--m", "3", "--z", "1", "--count-only")
    assert code == 0
    assert json.loads(out) == {"count": 5, "m": 3, "z": 1}  # Catalan(3)

    code, out, _ = run(capsys, "arcs", "--m", "2", "--z", "2")
    doc = json.loads(out)
    assert doc["count"] == 3 == len(doc["pairings"])  # (2m-1)!! at z >= m


def test_refined_mode_flag_passthrough(tmp_path, capsys):
    pts = gen(tmp_path, capsys)
    code, out, _ = run(
        capsys, "solve", "--points", str(pts), "--k", "1",
        "--mode", "refined", "--z", "3",
    )
    doc = json.loads(out)
    assert code in (0, 1)
    assert "z_too_small" in doc


def test_input_errors_exit_2(tmp_path, capsys):
    missing = tmp_path / "nope.csv"
    code, _, err = run(capsys, "solve", "--points", str(missing), "--k", "1")
    assert code == 2 and "error:" in err

    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nnot-a-number,3\n")
    code, _, err = run(capsys, "solve", "--points", str(bad), "--k", "1")
    assert code == 2 and "bad.csv:2" in err

    with pytest.raises(SystemExit) as exc:
        main(["solve", "--points", str(bad)])  # missing required --k
    assert exc.value.code == 2


def test_bench_runtime_csv(tmp_path, capsys):
    out_csv = tmp_path / "bench.csv"
    plot = tmp_path / "bench.svg"
    code, _, _ = run(
        capsys, "bench", "--suite", "runtime", "--sizes", "1", "2",
        "-o", str(out_csv), "--plot", str(plot),
    )
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "k,n,value,seconds"
    assert [line.split(",")[2] for line in lines[1:]] == ["1", "2"]
    assert plot.read_text().startswith("<svg")


def test_bench_width_csv(tmp_path, capsys):
    out_csv = tmp_path / "width.csv"
    code, _, _ = run(
        capsys, "bench", "--suite", "width", "--sizes", "25", "40",
        "-o", str(out_csv),
    )
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0] == "n,l,width,K"
    for line in lines[1:]:
        n, ell, width, K = line.split(",")
        assert float(K) == pytest.approx(
            float(width) / float(ell) ** 0.5, rel=1e-3
        )

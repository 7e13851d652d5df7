import json

import pytest

from zdbkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--field", "f256_paper")
    assert code == 0
    assert "q=256" in out


def test_field_json(capsys):
    code, out, _ = run(capsys, "--out", "json", "field", "--field", "f16")
    assert code == 0
    data = json.loads(out)
    assert data["q"] == 16


def test_analyze_catalog(capsys):
    code, out, _ = run(capsys, "analyze", "--fn", "catalog:14")
    assert code == 0
    assert "delta_max: 2" in out
    assert "[-32, -16, 0, 16, 32]" in out


def test_zdb_check(capsys):
    code, out, _ = run(capsys, "zdb-check", "--fn", "catalog:2",
                       "--expect-delta", "2")
    assert code == 0
    code, _, _ = run(capsys, "zdb-check", "--fn", "catalog:2",
                     "--expect-delta", "4")
    assert code == 1


def test_walsh_power_sum(capsys):
    code, out, _ = run(capsys, "walsh", "--fn", "catalog:13",
                       "--power-sum-delta", "2")
    assert code == 0


def test_pds_predict(capsys):
    code, out, _ = run(capsys, "pds", "predict", "--p", "2", "--t", "1",
                       "--n", "8")
    assert code == 0
    assert "(256, 85, 24, 30)" in out
    assert "negative_latin" in out


def test_pds_verify(capsys):
    code, out, _ = run(capsys, "pds", "verify", "--fn", "catalog:4")
    assert code == 0
    assert "certified PDS" in out
    code, _, err = run(capsys, "pds", "verify", "--fn", "catalog:4",
                       "--params", "256,85,24,29")
    assert code == 1


def test_srg_iso_aut_flow(capsys, tmp_path):
    g14 = tmp_path / "g14.graph"
    g13 = tmp_path / "g13.graph"
    code, _, _ = run(capsys, "srg", "build", "--fn", "catalog:14",
                     "--graph-out", str(g14))
    assert code == 0
    code, _, _ = run(capsys, "srg", "build", "--fn", "catalog:13",
                     "--graph-out", str(g13))
    assert code == 0
    code, out, _ = run(capsys, "srg", "verify", "--graph", str(g14),
                       "--params", "256,85,24,30")
    assert code == 0 and "rank2=256" in out
    code, _, _ = run(capsys, "srg", "verify", "--graph", str(g14),
                     "--params", "256,85,24,31")
    assert code == 1
    code, out, _ = run(capsys, "iso", "--a", str(g13), "--b", str(g14))
    assert code == 0 and "isomorphic: True" in out
    # a small graph for aut
    small = tmp_path / "c5.graph"
    small.write_text("v=5\n0\n1\n2\n4\n9\n")  # the 5-cycle, lower triangle
    code, out, _ = run(capsys, "aut", "--graph", str(small))
    assert code == 0 and "|Aut| = 10" in out


def test_search_newapn(capsys):
    code, out, _ = run(capsys, "search", "newapn", "--field", "f16",
                       "--exhaustive")
    assert code == 0
    assert "closed form agreed" in out


def test_search_newfun_sampled(capsys):
    code, out, _ = run(capsys, "search", "newfun", "--field", "f81",
                       "--samples", "3", "--seed", "5")
    assert code == 0
    assert "checked 3 triples" in out


def test_injection_space(capsys):
    code, out, _ = run(capsys, "injection-space", "--g", "catalog:14",
                       "--gamma", "w^11")
    assert code == 0
    assert "dim=" in out


def test_ccc(capsys):
    code, out, _ = run(capsys, "ccc", "--fn", "catalog:14")
    assert code == 0
    assert "match=True" in out


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main([]) == 2
    assert main(["pds"]) == 2


def test_missing_file(capsys):
    assert main(["analyze", "--fn", "/nonexistent/f.fn"]) == 2


def test_write_report_next_to_input(capsys, tmp_path, monkeypatch):
    fn = tmp_path / "cube.fn"
    fn.write_text("p=2\nn=4\nmodulus=1,1,0,0,1\nterm 3 1\n")
    monkeypatch.chdir(tmp_path)
    code = main(["--out", "json", "--write-report", "analyze",
                 "--fn", str(fn)])
    assert code == 0
    report = tmp_path / "cube.fn.report.json"
    assert report.exists()
    data = json.loads(report.read_text())
    assert data["delta_max"] == 2


def test_table1_cli_writes_reports(capsys, tmp_path):
    code = main(["table1", "--report-dir", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "table1.report.json").exists()
    assert (tmp_path / "table1.report.txt").exists()
    data = json.loads((tmp_path / "table1.report.json").read_text())
    assert data["class_count"] == 15
    assert data["partition_matches"] is True

import json

import pytest

from stabrec import cli, models, polyring, regions
from stabrec.cli import RunRequest, main, parse_region
from stabrec.verify import _code


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_report_toric3_json(capsys):
    code, out, _ = run(
        capsys, "report", "--model", "toric3", "--L", "8", "--region", "cube:3",
        "--methods", "all",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["entropy"]["entropy_a"] == 55
    ri = payload["recinfo"]
    assert ri["mu_definition"] == ri["mu_bound"] == ri["mu_nlss"] == 1
    assert payload["agreement"] is True


def test_report_cluster2_square(capsys):
    code, out, _ = run(
        capsys, "report", "--model", "cluster2", "--L", "12", "--region", "square:4"
    )
    assert code == 0
    assert json.loads(out)["recinfo"]["mu_definition"] == 4


def test_report_guard_violation_exits_1(capsys):
    code, _, err = run(
        capsys, "report", "--model", "haah", "--L", "9", "--region", "cube:10"
    )
    assert code == 1
    assert "error" in err


def test_report_method_subset(capsys):
    code, out, _ = run(
        capsys, "report", "--model", "toric2", "--L", "8", "--region", "square:2",
        "--methods", "def,nlss",
    )
    assert code == 0
    ri = json.loads(out)["recinfo"]
    assert "mu_bound" not in ri and ri["mu_definition"] == 2


def test_report_generators_listing(capsys):
    code, out, _ = run(
        capsys, "report", "--model", "toric2", "--L", "8", "--region", "square:2",
        "--generators",
    )
    assert code == 0
    gens = json.loads(out)["generators"]
    assert len(gens) == 2
    laws = [g["gauss_law"] for g in gens if g["gauss_law"]]
    assert laws and all("bulk" in law for law in laws)


def test_method_disagreement_exits_2(capsys, monkeypatch):
    monkeypatch.setattr("stabrec.recinfo.mu_nlss", lambda *a, **k: 99)
    code, _, _ = run(
        capsys, "report", "--model", "toric2", "--L", "8", "--region", "square:2"
    )
    assert code == 2


def test_sweep_table(capsys):
    code, out, _ = run(
        capsys, "sweep", "--models", "haah", "--R", "2..3", "--L", "10",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 3
    assert lines[1].split(",")[5] == "22" and lines[2].split(",")[5] == "34"


def test_sweep_disagreement_exit(capsys, monkeypatch):
    monkeypatch.setattr("stabrec.cli.CLOSED_FORMS", {"toric2": lambda R: 99})
    code, _, _ = run(capsys, "sweep", "--models", "toric2", "--R", "2", "--L", "8")
    assert code == 2


def test_export(capsys):
    code, out, _ = run(capsys, "export", "--model", "toric2", "--L", "2")
    assert code == 0
    assert len(out.strip().split("\n")) == 8


def test_run_request_round_trip():
    req = RunRequest(
        command="report", model="xcube", L=10, bc="pbc", region="cube:3",
        methods="all", window=2, fmt="json",
    )
    assert RunRequest.from_dict(json.loads(json.dumps(req.to_dict()))) == req


def test_parse_region_forms():
    t3 = _code("toric3", 12)
    assert parse_region(t3, "cube:3").size == regions.cuboid_region(t3, extents=3).size
    assert parse_region(t3, "cuboid:2x3x4").extents == (2, 3, 4)
    st = parse_region(t3, "solidtorus:5x5x5:z:6")
    assert st.shape == "solidtorus"
    c2 = _code("cluster2", 12)
    assert parse_region(c2, "smooth:4").shape == "smooth"
    with pytest.raises(ValueError):
        parse_region(t3, "blob:3")


def test_verify_negative_control(capsys, monkeypatch):
    # corrupting the recursion counter must fail the named haah row
    from stabrec import verify

    monkeypatch.setattr(polyring, "haah_nlss_count", lambda R, **k: 0)
    haah_row = [row for row in verify.ROWS if "haah" in row[0]]
    monkeypatch.setattr(verify, "ROWS", haah_row)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    line = [l for l in out.split("\n") if "haah" in l][0]
    assert "FAIL" in line


def test_verify_positive_row(capsys, monkeypatch):
    from stabrec import verify

    monkeypatch.setattr(verify, "ROWS", [verify.ROWS[0]])
    code, out, _ = run(capsys, "verify", "--verbose")
    assert code == 0
    assert "[PASS] 1 toric2 square cut" in out

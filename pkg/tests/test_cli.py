import json

import pytest

from cobforge import cli, polytope
from cobforge.cli import main


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_polytope(path, p):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(polytope.to_dict(p), fh)


def test_milnor_table_value(capsys):
    assert main(["milnor", "--n", "6", "--k", "3", "--table", "L"]) == 0
    assert "-189" in capsys.readouterr().out


def test_milnor_oracle_agreement(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["milnor", "--n", "4", "--k", "2", "--oracle", "--json", str(out)]) == 0
    captured = capsys.readouterr().out
    assert "15" in captured and "agrees" in captured
    report = read_json(out)
    assert report["command"] == "milnor"
    assert report["outputs"]["s_dkn"] == "15"
    assert report["outputs"]["oracle"] == "15"
    assert all(c["passed"] for c in report["checks"])


def test_milnor_out_of_range_exits_nonzero(capsys):
    assert main(["milnor", "--n", "3", "--k", "5"]) == 1
    assert "error" in capsys.readouterr().err


def test_gcd_check(tmp_path, capsys):
    out = tmp_path / "gcd.json"
    assert main(["gcd-check", "--n", "14", "--json", str(out)]) == 0
    assert read_json(out)["outputs"] == {"gcd": "1", "holds": True}
    assert main(["gcd-check", "--n", "4"]) == 1  # gcd 5: check fails
    assert main(["gcd-check", "--n", "13"]) == 1  # odd: domain error


def test_witness(tmp_path):
    out = tmp_path / "witness.json"
    assert main(["witness", "--n", "14", "--p", "5", "--json", str(out)]) == 0
    report = read_json(out)
    assert report["outputs"]["k"] == 5
    assert int(report["outputs"]["residue"]) != 0
    assert main(["witness", "--n", "8", "--p", "3"]) == 1


def test_plan_report(tmp_path, capsys):
    out = tmp_path / "plan.json"
    assert main(["plan", "--n", "14", "--json", str(out)]) == 0
    report = read_json(out)
    doc = report["outputs"]["plan"]
    assert doc["n"] == 14 and doc["a"] == 1
    assert doc["predicted_milnor"] == "1"
    assert doc["base_milnor"] == "15"
    assert len(doc["counts"]) == 13
    assert all(c["passed"] for c in report["checks"])
    assert main(["plan", "--n", "4"]) == 1


def test_polytope_cut_vertex_roundtrip(tmp_path):
    infile = tmp_path / "simplex3.json"
    outfile = tmp_path / "cut.json"
    write_polytope(infile, polytope.simplex(3))
    rc = main(
        ["polytope", "cut-vertex", "--infile", str(infile), "--vertex", "0", "--out", str(outfile)]
    )
    assert rc == 0
    result = polytope.from_dict(read_json(outfile))
    assert result.facet_count == 5 and len(result.vertices) == 6


def test_polytope_cut_face_and_iso(tmp_path):
    s = polytope.simplex(3)
    q = polytope.cut_vertex(s, 0)
    qfile = tmp_path / "q.json"
    write_polytope(qfile, q)
    gverts = [v for v in q.vertices if s.facet_count in v]
    edge = sorted(frozenset.intersection(*gverts[1:]))
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    rc = main(
        [
            "polytope",
            "cut-face",
            "--infile",
            str(qfile),
            "--facets",
            ",".join(str(f) for f in edge),
            "--out",
            str(first),
        ]
    )
    assert rc == 0
    vertex_face = sorted(gverts[0])
    rc = main(
        [
            "polytope",
            "cut-face",
            "--infile",
            str(qfile),
            "--facets",
            ",".join(str(f) for f in vertex_face),
            "--out",
            str(second),
        ]
    )
    assert rc == 0
    iso_report = tmp_path / "iso.json"
    rc = main(
        ["polytope", "iso", "--first", str(first), "--second", str(second), "--json", str(iso_report)]
    )
    assert rc == 0
    report = read_json(iso_report)
    assert report["outputs"]["isomorphic"] is True
    assert sorted(report["outputs"]["facet_bijection"]) == list(range(6))


def test_polytope_iso_negative(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    write_polytope(a, polytope.simplex(3))
    cube = polytope.product(
        polytope.product(polytope.simplex(1), polytope.simplex(1)), polytope.simplex(1)
    )
    write_polytope(b, cube)
    assert main(["polytope", "iso", "--first", str(a), "--second", str(b)]) == 1


def test_polytope_hvec(tmp_path):
    infile = tmp_path / "cut.json"
    write_polytope(infile, polytope.cut_vertex(polytope.simplex(3), 0))
    out = tmp_path / "hvec.json"
    assert main(["polytope", "hvec", "--infile", str(infile), "--json", str(out)]) == 0
    report = read_json(out)
    assert report["outputs"]["h_vector"] == [1, 2, 2, 1]
    assert report["outputs"]["f_vector"] == [6, 9, 5, 1]


def test_polytope_apply_plan(tmp_path):
    plan_file = tmp_path / "plan.json"
    out = tmp_path / "poly.json"
    doc = {
        "n": 4,
        "a": 1,
        "base_milnor": "5",
        "counts": [1, 0, 0],
        "predicted_milnor": str(5 - 10),
    }
    plan_file.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["polytope", "apply-plan", "--plan", str(plan_file), "--out", str(out)]) == 0
    result = polytope.from_dict(read_json(out))
    assert len(result.vertices) == 18
    # corrupt the predicted value: verification must fail before any cutting
    doc["predicted_milnor"] = "99"
    plan_file.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["polytope", "apply-plan", "--plan", str(plan_file)]) == 1


def test_polytope_rigidity(tmp_path):
    out = tmp_path / "rig.json"
    assert main(["polytope", "rigidity", "--n", "3", "--json", str(out)]) == 0
    report = read_json(out)
    assert report["outputs"]["delta_point"] == "-4"
    assert report["outputs"]["delta_top"] == "-2"
    assert all(c["passed"] for c in report["checks"])


def test_reproduce_passes(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("COBFORGE_MAX_N", "8")
    out = tmp_path / "rep.json"
    assert main(["reproduce", "--json", str(out)]) == 0
    report = read_json(out)
    assert report["inputs"]["max_n"] == 8
    assert report["checks"] and all(c["passed"] for c in report["checks"])
    assert "checks passed" in capsys.readouterr().out


def test_reproduce_detects_corrupted_table(monkeypatch):
    monkeypatch.setenv("COBFORGE_MAX_N", "6")
    corrupted = dict(cli.EXPECTED_L_TABLES)
    corrupted[6] = (70, -189, 239)
    monkeypatch.setattr(cli, "EXPECTED_L_TABLES", corrupted)
    assert main(["reproduce"]) == 1


def test_reports_have_no_timestamps(tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["witness", "--n", "14", "--p", "3", "--json", str(out1)]) == 0
    assert main(["witness", "--n", "14", "--p", "3", "--json", str(out2)]) == 0
    assert out1.read_text() == out2.read_text()


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["milnor"])  # missing required arguments
    assert exc.value.code == 2

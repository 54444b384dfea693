import json
from fractions import Fraction as Q

from hopfbrauer.cli import main
from hopfbrauer.defio import yd_to_json
from hopfbrauer.sweedler import CFamilyDescriptor, build_C


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_single_suite(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "thm5.2", "--seed", "3", "--json", str(report_path)
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["all_pass"]
    assert all(rec["anchor"] for rec in report["checks"])
    assert "checks passed" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_verify_thm63_with_parameters(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "thm6.3", "--t", "3", "--q", "0")
    assert code == 0


def test_verify_determinism(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(capsys, "verify", "--suite", "qt", "--seed", "11", "--json", str(p1))[0] == 0
    assert run_cli(capsys, "verify", "--suite", "qt", "--seed", "11", "--json", str(p2))[0] == 0
    r1, r2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    assert r1["checks"] == r2["checks"]
    assert json.dumps(json.loads(p1.read_text())["checks"]) == json.dumps(
        json.loads(p2.read_text())["checks"]
    )


def test_classify_outputs(capsys):
    code, out, _ = run_cli(capsys, "classify", "1", "2", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["azumaya"] is True
    assert payload["bm0"] == {"beta": "1", "square_class": 1}
    code, out, _ = run_cli(capsys, "classify", "1", "0", "0")
    payload = json.loads(out)
    assert payload["azumaya"] and payload["bm0"]["beta"] == "0"
    assert payload["membership"] == {"i": "all", "iota": "all"}


def test_classify_non_azumaya_message(capsys):
    code, out, _ = run_cli(capsys, "classify", "1", "1", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["azumaya"] is False and "not Azumaya" in payload["note"]


def test_classify_parse_failure_is_exit_2(capsys):
    assert run_cli(capsys, "classify", "one", "2", "0")[0] == 2


def test_product_presentation(capsys):
    code, out, _ = run_cli(capsys, "product", "1", "0", "2", "1", "1", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["relations"]["XY+YX"] == "2"
    assert payload["structure"]["dim"] == 4


def test_conjugate(capsys):
    code, out, _ = run_cli(capsys, "conjugate", "3", "2", "5", "7/3")
    assert code == 0
    assert out.strip() == "C(3;14/3,15/7)"
    assert run_cli(capsys, "conjugate", "3", "2", "5", "0")[0] == 2


def test_transport(capsys):
    code, out, _ = run_cli(capsys, "transport", "psi", "1", "0", "1", "--param", "2")
    assert code == 0 and out.strip() == "C(2;2,1)"
    code, out, _ = run_cli(capsys, "transport", "phi", "5", "1", "3")
    assert code == 0 and out.strip() == "C(5;3,1)"
    assert run_cli(capsys, "transport", "psi", "1", "1", "1", "--param", "2")[0] == 2
    assert run_cli(capsys, "transport", "psi", "1", "0", "1")[0] == 2


def test_intersect(capsys):
    code, out, _ = run_cli(capsys, "intersect", "2", "1/2")
    assert code == 0
    assert "nontrivial" in out and "witness" in out


def test_kernel_witness(capsys):
    code, out, _ = run_cli(capsys, "kernel-witness")
    assert code == 0
    assert out.count("PASS") == 6


def test_counterexample(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "2", "3")
    assert code == 0
    assert "closure fails" in out
    assert run_cli(capsys, "counterexample", "1", "3")[0] == 2


def test_theorem61_builtin(capsys):
    code, out, _ = run_cli(capsys, "theorem61", "--c", "1", "1", "1")
    assert code == 0
    assert "three-way equivalence holds: True" in out


def test_theorem61_from_file(capsys, tmp_path):
    from hopfbrauer.e2 import build_c_e2

    path = tmp_path / "alg.json"
    path.write_text(json.dumps(yd_to_json(build_c_e2(1, 2, 3), hopf_name="E2")))
    code, out, _ = run_cli(capsys, "theorem61", str(path))
    assert code == 0


def test_define_builtin_and_files(capsys, tmp_path):
    assert run_cli(capsys, "define", "H4")[0] == 0
    good = tmp_path / "c.json"
    good.write_text(json.dumps(yd_to_json(build_C(CFamilyDescriptor(Q(1), Q(1), Q(0))), "H4")))
    code, out, _ = run_cli(capsys, "define", str(good))
    assert code == 0 and "valid yd definition" in out

    bad_schema = tmp_path / "bad.json"
    obj = json.loads(good.read_text())
    del obj["coaction"]
    obj["coproduct"] = "nope"
    bad_schema.write_text(json.dumps(obj))
    code, _, err = run_cli(capsys, "define", str(bad_schema))
    assert code == 2

    corrupted = tmp_path / "corrupt.json"
    obj = json.loads(good.read_text())
    obj["mult"][1][1][1] = "9"
    corrupted.write_text(json.dumps(obj))
    code, out, _ = run_cli(capsys, "define", str(corrupted))
    assert code == 1 and "invalid" in out

    assert run_cli(capsys, "define", str(tmp_path / "missing.json"))[0] == 2

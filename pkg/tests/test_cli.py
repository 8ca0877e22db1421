import json

import pytest

from surgery_obstruction.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


@pytest.mark.parametrize("argv, expected", [
    (("dedekind", "1", "9"), {"s": "14/27"}),
    (("dedekind", "7", "1"), {"s": "0/1"}),
    (("dedekind", "-1", "3"), {"s": "-1/18"}),
])
def test_dedekind(capsys, argv, expected):
    code, doc, _ = run_json(capsys, *argv)
    assert code == 0 and doc == expected


def test_dedekind_both_methods(capsys):
    code, doc, _ = run_json(capsys, "dedekind", "4", "9", "--method", "both")
    assert code == 0 and doc["direct"] == doc["fast"] == "-4/27"


def test_dedekind_not_coprime(capsys):
    code, doc, err = run_json(capsys, "dedekind", "2", "4")
    assert code == 2
    assert doc == {"status": "error", "error_kind": "NotCoprime", "message": "gcd(2, 4) = 2"}
    assert "NotCoprime" in err


@pytest.mark.parametrize("argv, lam, rev", [
    (("lambda", "0", "9", "1", "--normalization=paper"), "-14/27", "14/27"),
    (("lambda", "0", "1", "1", "--normalization=walker"), "0/1", "0/1"),
    (("lambda", "1", "1", "1", "--normalization=walker"), "1/1", "-1/1"),
])
def test_lambda(capsys, argv, lam, rev):
    code, doc, _ = run_json(capsys, *argv)
    assert code == 0 and doc["lambda"] == lam and doc["lambda_reversed"] == rev


def test_erratum_allowed(capsys):
    code, doc, _ = run_json(capsys, "erratum", "9", "1", "2", "3")
    assert code == 0
    assert {k: doc[k] for k in ("erroneous", "corrected", "epsilon", "ell0", "six_ps")} == {
        "erroneous": "CONTRADICTION", "corrected": "ALLOWED", "epsilon": 1, "ell0": 1,
        "six_ps": 28}
    assert doc["constraint_check"] is True


def test_erratum_ruled_out(capsys):
    code, doc, _ = run_json(capsys, "erratum", "9", "1", "0", "3")
    assert (doc["erroneous"], doc["corrected"]) == ("CONTRADICTION", "RULED_OUT")


@pytest.mark.parametrize("argv, kind, code", [
    (("erratum", "9", "1", "5", "3"), "NotHomologyCompatible", 2),
    (("erratum", "9", "1", "1", "9"), "NotHomologyCompatible", 2),
    (("erratum", "9", "1", "10", "9"), "NullHomologousKnot", 2),
    (("erratum", "27", "1", "2", "3"), "HypothesisViolated", 3),
])
def test_erratum_errors(capsys, argv, kind, code):
    got, doc, _ = run_json(capsys, *argv)
    assert got == code and doc["error_kind"] == kind


def test_enumerate(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "9", "1", "--m-range", "0:5", "--ell-range", "1:6")
    assert code == 0
    assert [(r["m"], r["ell"], r["epsilon"], r["ell0"], r["verdict"]) for r in doc["scenarios"]] == [
        (0, 3, -1, 1, "RULED_OUT"), (2, 3, 1, 1, "ALLOWED"),
        (3, 6, -1, 4, "RULED_OUT"), (5, 6, 1, 4, "ALLOWED")]
    assert doc["normalization"] == "paper_p2" and doc["p"] == 9 and doc["q"] == 1


def test_enumerate_negative_range(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "9", "1", "--m-range=-5:5", "--ell-range", "1:6")
    assert code == 0 and len(doc["scenarios"]) == 4


def test_enumerate_hypothesis(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "27", "1", "--m-range", "0:5", "--ell-range", "1:6")
    assert code == 3 and doc["error_kind"] == "HypothesisViolated"


def test_enumerate_q2(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "9", "2", "--m-range", "0:20",
                            "--ell-range", "1:20")
    assert code == 0 and doc["scenarios"]
    for r in doc["scenarios"]:
        assert (r["verdict"] == "ALLOWED") == ((2 * r["epsilon"] - r["ell0"]) % 3 == 0)


def test_enumerate_walker(capsys):
    code, doc, _ = run_json(capsys, "enumerate", "9", "1", "--m-range", "0:50",
                            "--ell-range", "1:50", "--normalization", "walker")
    assert doc["normalization"] == "walker_p1"
    assert {r["verdict"] for r in doc["scenarios"]} == {"CONTRADICTION"}


@pytest.mark.parametrize("bad", ["0-5", "5:0", "a:b", "3"])
def test_bad_range_is_parse_error(capsys, bad):
    code, _, _ = run(capsys, "enumerate", "9", "1", "--m-range", bad, "--ell-range", "1:6")
    assert code == 4


def test_theorem2(capsys):
    code, doc, _ = run_json(capsys, "theorem2", "9", "1", "--bound", "10")
    assert code == 0 and doc["erroneous_universal_contradiction"]
    assert any((a["m"], a["ell"], a["epsilon"]) == (2, 3, 1) for a in doc["allowed"])


def test_banding_torus(capsys):
    code, doc, _ = run_json(capsys, "banding", "--torus", "9")
    assert (doc["pre_erratum"], doc["post_erratum"]) == ("NO_BANDING", "INCONCLUSIVE_ERRATUM")
    code, doc, _ = run_json(capsys, "banding", "--torus", "5")
    assert doc["pre_erratum"] == "INCONCLUSIVE"
    assert any("known" in n for n in doc["notes"])


def test_banding_invalid_torus(capsys):
    code, doc, _ = run_json(capsys, "banding", "--torus", "4")
    assert code == 2 and doc["error_kind"] == "InvalidTorusParameter"


def test_banding_knot_file(capsys, tmp_path):
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"name": "K", "determinant": 45, "signature": 8, "a2": 2,
                             "quasi_alternating": True,
                             "branched_cover_surgery": {"p": 45, "q": 7, "a2_of_core_knot": 1}}))
    code, doc, _ = run_json(capsys, "banding", "--knot", str(f))
    assert code == 0 and doc["pre_erratum"] == "NO_BANDING"
    assert doc["constraint"] == "eps*7 ≡ ell0 (mod 3) for p=45, q=7"


def test_banding_missing_cover(capsys, tmp_path):
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"name": "K", "determinant": 9, "signature": -8, "a2": 0,
                             "quasi_alternating": True}))
    code, doc, _ = run_json(capsys, "banding", "--knot", str(f))
    assert code == 2 and doc["error_kind"] == "MissingCoverData"


@pytest.mark.parametrize("content", ["{not json", '{"name": "K"}'])
def test_banding_malformed_file(capsys, tmp_path, content):
    f = tmp_path / "k.json"
    f.write_text(content)
    code, _, _ = run(capsys, "banding", "--knot", str(f))
    assert code == 4


def test_banding_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "banding", "--knot", str(tmp_path / "nope.json"))
    assert code == 4


def test_banding_table_jsonl(capsys):
    code, out, _ = run(capsys, "banding", "--table", "9", "--jsonl")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["k"] for r in rows] == [3, 5, 7, 9]
    assert all({"pre_erratum", "post_erratum", "constraint", "notes"} <= set(r) for r in rows)


def test_human_output_is_default(capsys):
    code, out, _ = run(capsys, "dedekind", "1", "9")
    assert code == 0 and out.strip() == "s(1, 9) = 14/27"


def test_output_is_deterministic(capsys):
    argv = ("enumerate", "45", "2", "--m-range=-50:50", "--ell-range", "1:50")
    first = run_json(capsys, *argv)[1]
    assert run_json(capsys, *argv)[1] == first


def test_selftest_quick(capsys):
    code, doc, err = run_json(capsys, "selftest", "--level=quick")
    assert code == 0 and doc["failed"] == 0 and doc["passed"] == len(doc["checks"])
    assert "PASS" in err


def test_selftest_detects_injected_fault(capsys):
    code, doc, _ = run_json(capsys, "selftest", "--level=quick", "--inject-fault")
    assert code != 0 and doc["failed"] > 0


def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 4

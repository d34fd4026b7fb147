"""命令行: 子命令、输出格式与退出状态"""
import json

import pytest

from checks import suites
from checks.suites import WorkItem
from main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_config, main, run


def invoke(*argv):
    return run(build_config(list(argv)))


def test_apply_delta():
    status, document = invoke("apply", "--op", "delta", "--d", "3", "--poly", "p1^3", "--threads", "1")
    assert status == EXIT_OK
    assert document == "2*p3"


@pytest.mark.parametrize("op", ["cutjoin", "delta", "group"])
def test_apply_kinds_agree(op):
    status, document = invoke("apply", "--op", op, "--d", "2", "--poly", "p2^2", "--threads", "1")
    assert status == EXIT_OK
    assert document == "4*p4 + 2*p1^2*p2"


def test_apply_beta():
    status, document = invoke("apply", "--op", "beta", "--beta", "1,2,3", "--poly", "p3", "--threads", "1")
    assert (status, document) == (EXIT_OK, "p3 + p1^3")


def test_apply_wmatrix():
    status, document = invoke("apply", "--op", "wmatrix", "--d", "2", "--poly", "p1^2", "--N", "1",
                              "--threads", "1")
    assert (status, document) == (EXIT_OK, "X11^2")


def test_apply_wmatrix_csv():
    status, document = invoke("apply", "--op", "wmatrix", "--d", "2", "--poly", "p1^2", "--N", "1",
                              "--format", "csv", "--threads", "1")
    assert status == EXIT_OK
    assert document.splitlines() == ["N,monomial,coeff", "1,X11^2,1"]


def test_hurwitz_text_has_all_columns():
    status, document = invoke("hurwitz", "--d", "2", "--n", "3", "--k", "2", "--threads", "1")
    assert status == EXIT_OK
    lines = document.splitlines()
    assert lines[0].split() == ["n", "d", "k", "α", "h", "ĥ"]
    assert lines[1].split() == ["3", "2", "2", "(3)", "6", "6"]
    assert lines[-1].split() == ["3", "2", "2", "(1^3)", "0", "3"]


def test_apply_json():
    status, document = invoke("apply", "--d", "2", "--poly", "1/2*p1^2", "--format", "json", "--threads", "1")
    assert status == EXIT_OK
    assert json.loads(document) == {"terms": [{"coeff": "1/2", "monomial": [[2, 1]]}]}


def test_hurwitz_csv():
    status, document = invoke("hurwitz", "--d", "2", "--n", "3", "--k", "2", "--format", "csv", "--threads", "1")
    assert status == EXIT_OK
    assert "(3),6,6" in document
    assert "(1^3),0,3" in document


def test_output_independent_of_threads():
    args = ("hurwitz", "--d", "2", "--n", "4", "--k", "2", "--format", "csv")
    assert invoke(*args, "--threads", "1") == invoke(*args, "--threads", "2")
    apply_args = ("apply", "--d", "3", "--poly", "p1^4 + 1/3*p2*p1^2 - p4", "--format", "json")
    assert invoke(*apply_args, "--threads", "1") == invoke(*apply_args, "--threads", "2")


def test_series_json():
    status, document = invoke("series", "--d", "2", "--w-max", "2", "--k-max", "1", "--format", "json",
                              "--threads", "1")
    assert status == EXIT_OK
    terms = json.loads(document)["terms"]
    assert {"coeff": "1/2", "monomial": [[2, 1]], "z": 1} in terms
    assert {"coeff": "1", "monomial": [], "z": 0} in terms


def test_series_connected_text():
    status, document = invoke("series", "--d", "2", "--w-max", "2", "--k-max", "1", "--connected",
                              "--threads", "1")
    assert status == EXIT_OK
    assert document.splitlines() == ["z^0: p1", "z^1: 1/2*p2"]


def test_classify():
    status, document = invoke("classify", "--n", "3", "--perm", "1,2;3", "--tuple", "1,3,2",
                              "--format", "json", "--threads", "1")
    assert status == EXIT_OK
    assert json.loads(document) == {"alpha": "(1 2)(3)", "tuple": [1, 3, 2],
                                    "tau": "(1 3)(2)", "distances": [1, 1, 1]}


def test_verify_theorem_w():
    status, document = invoke("verify", "--suite", "theorem-w", "--theorem-n-max", "4",
                              "--theorem-d-max", "3", "--cutjoin-w-max", "5", "--threads", "1")
    assert status == EXIT_OK
    assert "PASS" in document


@pytest.mark.slow
def test_verify_theorem_w_default_bounds():
    status, _ = invoke("verify", "--suite", "theorem-w")
    assert status == EXIT_OK


def _always(ok, detail):
    return ok, detail


def _failing_plan(bounds):
    return [WorkItem("commute", "通过项", _always, (True, "")),
            WorkItem("commute", "失败项", _always, (False, "左右不等")),
            WorkItem("commute", "更大的失败项", _always, (False, "同样不等"))]


@pytest.mark.parametrize("output_format", ["text", "json", "csv"])
def test_verify_failure_exits_one_with_counterexample(monkeypatch, output_format):
    monkeypatch.setitem(suites.PLANNERS, "commute", _failing_plan)
    status, document = invoke("verify", "--suite", "commute", "--format", output_format, "--threads", "1")
    assert status == EXIT_FAILED
    if output_format == "text":
        assert "最小反例 [失败项] 左右不等" in document
        assert document.endswith("结果: FAIL (3 项检查)")
    elif output_format == "json":
        summary = json.loads(document)
        assert summary["passed"] is False
        assert summary["suites"][0]["counterexample"] == {"label": "失败项", "detail": "左右不等"}
    else:
        assert document.splitlines()[1] == "commute,3,0,失败项"


@pytest.mark.slow
def test_verify_all_default_bounds():
    status, _ = invoke("verify", "--suite", "all")
    assert status == EXIT_OK


@pytest.mark.parametrize("argv", [
    ("apply", "--poly", "p1 +", "--threads", "1"),
    ("apply", "--poly", "q1", "--threads", "1"),
    ("apply", "--threads", "1"),
    ("apply", "--op", "beta", "--poly", "p1", "--threads", "1"),
    ("apply", "--op", "delta", "--d", "1", "--poly", "p1", "--threads", "1"),
    ("classify", "--n", "3", "--perm", "1,2", "--tuple", "1,1", "--threads", "1"),
])
def test_usage_errors(argv):
    status, document = invoke(*argv)
    assert status == EXIT_USAGE
    assert document == ""


def test_invalid_config_exits_two():
    with pytest.raises(SystemExit) as excinfo:
        main(["series", "--w-max", "0"])
    assert excinfo.value.code == EXIT_USAGE


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as excinfo:
        build_config(["apply", "--d", "two"])
    assert excinfo.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        build_config(["frobnicate"])
    assert excinfo.value.code == EXIT_USAGE


def test_main_prints_document(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["apply", "--d", "2", "--poly", "p1^2", "--threads", "1"])
    assert excinfo.value.code == EXIT_OK
    assert capsys.readouterr().out == "p2\n"


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE}) == 3

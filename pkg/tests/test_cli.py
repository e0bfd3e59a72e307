import json

import pytest

from lamspace.cli import job_to_argv, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform_of_e(capsys):
    code, out, _ = run(capsys, "transform", "--lambda", "cesaro", "--seq", "e", "--depth", "8")
    assert code == 0
    assert json.loads(out)["values"] == [1.0] * 8


def test_transform_csv(capsys):
    code, out, _ = run(capsys, "transform", "--lambda", "cesaro", "--seq", "unit(0)", "--op", "inverse",
                       "--depth", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,1.0", "1,-1.0", "2,0.0"]


def test_classify_harmonic_never_holds(capsys):
    code, out, _ = run(capsys, "classify", "--lambda", "cesaro", "--seq", "harmonic", "--space", "cs_lambda")
    verdict = json.loads(out)["verdicts"][0]
    assert verdict["conclusion"] in ("Fails", "Inconclusive")
    assert code in (2, 3)


def test_gallery_example(capsys):
    code, out, _ = run(capsys, "gallery", "--id", "cs-not-cs0", "--lambda", "cesaro", "--depth", "1024")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert report["witnesses"][0]["transform_claim"] == "Lambda_n(x) = 1/(n+2)^2"


@pytest.mark.parametrize("argv,code", [
    (["dual", "--lambda", "cesaro", "--seq", "harmonic", "--dual", "m4", "--depth", "512"], 0),
    (["dual", "--lambda", "cesaro", "--seq", "e", "--dual", "beta(bs)", "--depth", "512"], 2),
    (["matclass", "--matrix", "zero", "--source", "cs", "--target", "l1", "--depth", "64"], 0),
    (["matclass", "--lambda", "cesaro", "--matrix", "lambda", "--source", "cs_lambda", "--target", "l1",
      "--depth", "128"], 2),
    (["matclass", "--lambda", "cesaro", "--matrix", "rule(gap(k)/lambda(n))", "--source", "cs",
      "--target", "c", "--depth", "128"], 0),
    (["matclass", "--matrix", "rows([[1],[0,1]];zero)", "--source", "cs0", "--target", "linf",
      "--depth", "64"], 0),
    (["matclass", "--lambda", "cesaro", "--matrix", "one-row(harmonic)", "--structure", "general",
      "--width", "256", "--source", "cs_lambda", "--target", "c", "--depth", "256"], 0),
    (["regularity", "--lambda", "geometric(2)", "--depth", "1000"], 0),
    (["basis", "--lambda", "cesaro", "--seq", "gallery(cs-not-cs0)"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize("argv", [
    ["transform", "--lambda", "custom(1,3)", "--seq", "e"],
    ["transform", "--lambda", "cesaro", "--seq", "list(1,2)"],
    ["transform", "--lambda", "cesaro", "--seq", "expr(open(k))"],
    ["classify", "--seq", "e", "--space", "cs_lambda"],
    ["classify", "--lambda", "cesaro", "--seq", "e", "--space", "cs_lambda", "--format", "csv"],
    ["matclass", "--matrix", "zero", "--source", "cs", "--target", "bs"],
    ["dual", "--lambda", "cesaro", "--seq", "e", "--dual", "m1", "--subset-depth", "20"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error") or code == 1


def test_job_file_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "transform", "--lambda", "power(2)", "--seq", "gallery(bs-not-cs)", "--depth", "6")
    first = json.loads(out)
    job = tmp_path / "job.json"
    job.write_text(json.dumps(first["job"]))
    code2, out2, _ = run(capsys, "run", str(job))
    assert code == code2 == 0 and out2 == out


def test_job_file_with_structured_weights(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text(json.dumps({"command": "transform", "lambda": {"family": "geometric", "r": 2},
                               "seq": "e", "depth": 4}))
    code, out, _ = run(capsys, "run", str(job))
    assert code == 0 and json.loads(out)["values"] == [1.0] * 4


def test_bad_job_file(capsys, tmp_path):
    job = tmp_path / "job.json"
    job.write_text("[1, 2]")
    assert run(capsys, "run", str(job))[0] == 1
    assert run(capsys, "run", str(tmp_path / "missing.json"))[0] == 1
    with pytest.raises(Exception):
        job_to_argv({"depth": 3})


def test_byte_identical_reports(capsys):
    argv = ["dual", "--lambda", "cesaro", "--seq", "harmonic", "--dual", "beta(cs)", "--depth", "512"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]

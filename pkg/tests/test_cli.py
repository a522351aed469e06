import json

import pytest

from weakgeo.cli import EXIT_NOT_FOUND, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, main
from weakgeo.report import validate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_repro_a12_json(capsys):
    code, out, _ = run(capsys, "repro", "a12", "--json")
    assert code == EXIT_OK
    doc = json.loads(out)
    validate(doc)
    pts = doc["violations"][0]["assignment"]
    assert [pts[k] for k in ("o", "a", "b", "c")] == [["0/1", "1/1"], ["1/1", "0/1"], ["2/1", "0/1"], ["0/1", "0/1"]]


def test_repro_without_the_counterexample_exits_2(capsys):
    code, out, _ = run(capsys, "repro", "a12", "--model", "q:c=1")
    assert code == EXIT_NOT_FOUND
    assert "hypothesis-mismatch" in out


def test_medians_gf5(capsys):
    code, out, _ = run(capsys, "theorem", "medians", "--model", "gf:5:c=2", "--exhaustive", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["violations"] == []


def test_medians_gf3_expected_counterexample(capsys):
    code, out, _ = run(capsys, "theorem", "medians", "--model", "gf:3:c=1", "--exhaustive", "--expect-counterexample")
    assert code == EXIT_OK
    assert "VIOLATION medians" in out
    code, _, _ = run(capsys, "theorem", "medians", "--model", "gf:3:c=1", "--exhaustive")
    assert code == EXIT_VIOLATIONS
    code, _, _ = run(capsys, "theorem", "medians", "--model", "gf:5:c=2", "--expect-counterexample")
    assert code == EXIT_NOT_FOUND


def test_violations_exit_1(capsys):
    code, _, _ = run(capsys, "axioms", "--model", "q:c=-2", "--axiom", "A12", "--samples", "5")
    assert code == EXIT_VIOLATIONS


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["axioms"],
    ["axioms", "--model", "nonsense"],
    ["axioms", "--model", "gf:5:c=1"],
    ["axioms", "--model", "q:c=1", "--exhaustive"],
    ["axioms", "--model", "gf:5:c=2", "--axiom", "A1"],
    ["axioms", "--model", "gf:5:c=2", "--axiom", "A99"],
    ["axioms", "--model", "gf:5:c=2", "--samples", "4", "--exhaustive"],
    ["hjelmslev", "--model", "q:c=1"],
    ["theorem", "medians", "--model", "q:c=1"],
    ["theorem", "medians", "--model", "gf:3:c=1", "--char3-guard"],
    ["theorem", "sl-general", "--model", "gf:5:c=2"],
    ["theorem", "sl-orderfree", "--model", "gf:5:c=2", "--samples", "3"],
    ["facts", "--id", "F9", "--samples", "3"],
    ["facts", "--id", "F1", "--samples", "0"],
    ["facts", "--id", "F1", "--model", "gf:5:c=2"],
    ["repro", "a12", "--model", "gf:5:c=2"],
])
def test_usage_errors_exit_64(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == EXIT_USAGE


def test_json_is_byte_identical_across_runs_and_worker_counts(capsys, monkeypatch, tmp_path):
    argv = ["facts", "--id", "L1", "--samples", "60", "--seed", "3", "--json", "--no-timing"]
    monkeypatch.setenv("WEAKGEO_WORKERS", "1")
    _, first, _ = run(capsys, *argv)
    monkeypatch.setenv("WEAKGEO_WORKERS", "2")
    _, second, _ = run(capsys, *argv, "--out", str(tmp_path / "r.json"))
    assert first == second
    assert (tmp_path / "r.json").read_text() == first
    validate(json.loads(first))


def test_text_summary_and_seed_default(capsys):
    code, out, _ = run(capsys, "theorem", "sl-general", "--model", "q:c=1", "--samples", "5")
    assert code == EXIT_OK
    assert out.startswith("theorem sl-general [q:c=1] sampled(5, 0)")


def test_hjelmslev_subset(capsys):
    code, out, _ = run(capsys, "hjelmslev", "--model", "gf:3:c=1", "--axiom", "H5", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["witnesses"][0]["check"] == "H5"


def test_other_theorems(capsys):
    for name in ("median-uniqueness", "sl-orderfree", "bisector-facts"):
        code, _, _ = run(capsys, "theorem", name, "--model", "gf:3:c=1")
        assert code == EXIT_OK, name

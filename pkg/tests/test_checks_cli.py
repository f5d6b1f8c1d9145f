import json

import pytest

from tableau_orders.checks import (
    CheckReport,
    RunConfig,
    check_dmn_tableau,
    check_pole_tableau,
    increasing_sequences,
    paired_sequences,
    run_check,
    split_instances,
    workers_from_env,
)
from tableau_orders.cli import main
from tableau_orders.embeddings import pole
from tableau_orders.tableaux import LRTableau


def test_run_config_validation():
    RunConfig()
    with pytest.raises(ValueError):
        RunConfig(field_primes=(4,))
    with pytest.raises(ValueError):
        RunConfig(workers=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_run_check_unknown_name():
    with pytest.raises(ValueError, match="unknown check"):
        run_check("no-such-check", RunConfig())


def test_instance_generators():
    assert increasing_sequences(2, 1, 3) == [
        (0,),
        (1,),
        (2,),
        (0, 1),
        (0, 2),
        (1, 2),
        (0, 1, 2),
    ]
    pairs = paired_sequences(3)
    assert ((0, 1), ()) in pairs and ((1, 3), (0,)) in pairs
    assert ((1, 3), (0, 2)) not in pairs  # second sequence must be shorter
    assert all(len(n) < len(m) and (not n or n[-1] < m[-1]) for m, n in pairs)
    cases = split_instances(4)
    assert ("gap", (0, 2), ()) in cases
    assert ("run", (0, 1), ()) in cases
    assert ("boundary", (0, 2), (1,)) in cases
    for case, m, n in cases:
        assert len(n) < len(m)


def test_reports_are_worker_count_invariant():
    base = RunConfig(max_weight_r=3, max_beta_weight=6, max_height=4, workers=1)
    two = RunConfig(max_weight_r=3, max_beta_weight=6, max_height=4, workers=2)
    for name in ("phi-orders", "dmn-tableau"):
        a = run_check(name, base)
        b = run_check(name, two)
        assert (a.passed, a.instances, a.digest, a.counterexample) == (
            b.passed,
            b.instances,
            b.digest,
            b.counterexample,
        )


def test_field_digests_match_across_primes_small():
    cfg = RunConfig(max_height=4)
    reports = [check_pole_tableau(cfg, p) for p in (2, 3, 5)]
    assert len({r.digest for r in reports}) == 1
    reports = [check_dmn_tableau(cfg, p) for p in (2, 3, 5)]
    assert len({r.digest for r in reports}) == 1


def test_merge_takes_first_counterexample():
    import time

    from tableau_orders.checks import _merge

    results = [
        {"instances": 1},
        {"instances": 1, "counterexample": {"which": "first"}},
        {"instances": 1, "counterexample": {"which": "second"}},
    ]
    report = _merge("demo", results, time.time())
    assert not report.passed
    assert report.counterexample == {"which": "first"}
    assert report.instances == 3


def test_checks_are_deterministic():
    cfg = RunConfig(max_weight_r=3, max_beta_weight=5, max_height=3)
    for name in ("f-map", "ses-exactness"):
        a, b = run_check(name, cfg), run_check(name, cfg)
        assert (a.passed, a.instances, a.digest) == (b.passed, b.instances, b.digest)


def test_workers_from_env(monkeypatch):
    monkeypatch.delenv("TABLEAU_ORDERS_WORKERS", raising=False)
    assert workers_from_env() == 1
    monkeypatch.setenv("TABLEAU_ORDERS_WORKERS", "3")
    assert workers_from_env() == 3


def test_report_text_and_dict():
    report = CheckReport("demo", 5, False, {"reason": "x"}, 0.5)
    assert "FAIL" in report.text() and "counterexample" in report.text()
    assert report.to_dict()["instances"] == 5


# ---------------------------------------------------------------------------
# command line


def test_cli_enumerate_weight(capsys):
    assert main(["enumerate", "syt-weight", "--r", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert all(set(json.loads(line)) == {"shape", "rows"} for line in lines)


def test_cli_enumerate_shape(capsys):
    assert main(["enumerate", "syt-shape", "--beta", "[1]"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 1


def test_cli_enumerate_lr(capsys):
    assert main(
        ["enumerate", "lr-rook", "--beta", "[5,4,3,2,1]", "--gamma", "[4,3,2,1]"]
    ) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 26
    chains = [tuple(tuple(p) for p in json.loads(x)["chain"]) for x in lines]
    assert ((4, 3, 2, 1), (4, 3, 3, 1, 1), (5, 3, 3, 2, 1), (5, 4, 3, 2, 1)) in chains


def test_cli_check_pass_and_fail_paths(capsys):
    assert main(["check", "box-eq-dom", "--r", "4"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert main(["check", "box-eq-dom", "--r", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True and data["check"] == "box-eq-dom"


def test_cli_check_unknown_name_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["check", "no-such"])
    assert exc.value.code == 2


def test_cli_missing_required_flag_is_usage_error(capsys):
    assert main(["enumerate", "syt-weight"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_hasse_outputs_match(capsys):
    assert main(["hasse", "syt", "--r", "1", "--order", "dom"]) == 0
    one = capsys.readouterr().out
    assert one.count("label=") == 1 and "->" not in one
    outputs = []
    for order in ("box", "dom"):
        assert main(["hasse", "syt", "--r", "4", "--order", order]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_cli_hasse_lr(capsys):
    assert main(
        ["hasse", "lr-rook", "--beta", "[3,2,1]", "--gamma", "[2,1]", "--order", "box"]
    ) == 0
    assert "digraph" in capsys.readouterr().out


def test_cli_hom(tmp_path, capsys):
    p0 = pole((0,), 2)
    a = tmp_path / "a.json"
    a.write_text(p0.to_json())
    b = tmp_path / "b.json"
    b.write_text(json.dumps({"field": 2, "ambient": [], "generators": []}))
    assert main(["hom", str(a), str(a)]) == 0
    assert capsys.readouterr().out.strip() == "1"
    assert main(["hom", str(a), str(b)]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["hom", str(a), str(tmp_path / "missing.json")]) == 2


def test_cli_out_file(tmp_path):
    target = tmp_path / "hasse.dot"
    assert main(["hasse", "syt", "--r", "2", "--order", "dom", "--out", str(target)]) == 0
    assert target.read_text().startswith("digraph")

"""CLI contract: config round-trip, exit codes, determinism, subcommands."""
import json
import re

import numpy as np
import pytest

from ellgt.cli import RunConfig, emit_report, main, run_suite
from ellgt.errors import DomainError


def test_config_round_trip():
    cfg = RunConfig(N=3, n=4, q=0.25, p=0.08, lam=(0.4, 0.2, 0.0),
                    w=(0.5, 0.9, 1.4, 2.2), seed=11, tol=1e-8,
                    suites=("special", "rmatrix"))
    blob = json.dumps(cfg.to_dict())
    back = RunConfig.from_dict(json.loads(blob))
    assert back == cfg


def test_config_expands_all():
    cfg = RunConfig(suites=("all",))
    assert set(cfg.suites) == {"special", "rmatrix", "minors", "gtbasis",
                               "weightfn", "gl2"}


def test_config_rejects_unknown_suite():
    with pytest.raises(DomainError):
        RunConfig(suites=("nonsense",))


def test_config_desk_scale_guard():
    with pytest.raises(DomainError):
        RunConfig(N=5)
    with pytest.raises(DomainError):
        RunConfig(n=7)


def test_run_suite_report_shape_and_exit(capsys):
    rc = main(["verify", "--suite", "special", "--seed", "4"])
    out = capsys.readouterr().out
    report = json.loads(out)
    assert rc == 0
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] == len(report["checks"])
    for chk in report["checks"]:
        assert set(chk) == {"name", "residual", "threshold", "passed",
                            "seconds"}


def test_report_determinism():
    cfg = RunConfig(suites=("special",), seed=9)
    a = emit_report(run_suite(cfg))
    b = emit_report(run_suite(cfg))
    scrub = lambda s: re.sub(r'"seconds": [0-9eE.+-]+', '"seconds": 0', s)
    assert scrub(a) == scrub(b)


def test_tolerance_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ELLGT_TOL", "1e-3")
    rc = main(["verify", "--suite", "gl2", "--seed", "4", "--l", "1"])
    report = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert report["config"]["tol"] == 1e-3
    assert report["config"]["l_values"] == [1]
    named = {c["name"]: c for c in report["checks"]}
    assert named["gl2.gl2_basis_actions"]["threshold"] == 1e-3


def test_failing_check_gives_exit_one(capsys, monkeypatch):
    import ellgt.suites as suites_mod
    from ellgt.suites import Check

    def fake(params, rng):
        return [Check("always_fails", 1.0, 1e-9, False, 0.0)]

    monkeypatch.setitem(suites_mod.SUITES, "special", fake)
    rc = main(["verify", "--suite", "special"])
    report = json.loads(capsys.readouterr().out)
    assert rc == 1
    assert report["summary"]["failed"] == 1


def test_partition_command_modes_agree(capsys):
    rc = main(["partition", "--N", "2", "--K", "1", "--L", "2",
               "--zs", "0.77", "--alpha", "11", "--beta", "21",
               "--w", "0.83", "1.71", "--mode", "both"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["mode_agreement"] < 1e-12


def test_minor_command(capsys):
    rc = main(["minor", "--N", "2", "--rows", "1", "--cols", "2",
               "--z", "0.42", "--state", "111", "--w", "0.83", "1.71", "0.42"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert set(out["coefficients"]) == {"211", "121", "112"}


def test_gtbasis_command(capsys):
    rc = main(["gtbasis", "--N", "2", "--I", "112", "--variant", "prime",
               "--w", "0.83", "1.71", "0.42"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert all(v < 1e-9 for v in out["eigenvalue_residuals"].values())


def test_weightfn_command(capsys):
    rc = main(["weightfn", "--N", "2", "--I", "112",
               "--w", "0.83", "1.71", "0.42"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["order"][0] == "211"
    mat = np.array(out["matrix"])
    assert mat.shape == (3, 3, 2)  # complex encoded as [re, im]


def test_rmatrix_command(capsys):
    rc = main(["rmatrix", "--N", "2", "--z", "0.77"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["checks"]["dybe_residual"] < 1e-10
    assert out["checks"]["unitarity_residual"] < 1e-10


def test_cli_error_handling(capsys):
    rc = main(["gtbasis", "--N", "2", "--I", "132",
               "--w", "0.83", "1.71", "0.42"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_empty_suite_reports_zero_checks():
    report = run_suite(RunConfig(suites=()))
    assert report["summary"] == {"total": 0, "passed": 0, "failed": 0,
                                 "seconds": report["summary"]["seconds"]}


def test_partition_command_degrades_beyond_cap(capsys):
    rc = main(["partition", "--N", "3", "--K", "1,1,1,1", "--L", "2,2,2,2",
               "--zs", "0.7,0.8,0.9,1.1", "--alpha", "111", "--beta", "221",
               "--w", "0.83", "1.71", "0.42", "--mode", "both"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert out["enumerate"] is None
    assert "sequential" in out

"""Experiment harness: registry, config handling, reports, determinism."""

import json

import numpy as np
import pytest

from thinset_lab import (
    EXPERIMENT_IDS,
    CheckResult,
    DomainError,
    ExperimentReport,
    default_config,
    emit_report,
    parse_report,
    run_experiment,
)

def test_registry_and_default_config_isolation():
    assert EXPERIMENT_IDS == tuple(f"E{i}" for i in range(1, 12))
    cfg = default_config("E5")
    cfg["trials"] = -1
    assert default_config("E5")["trials"] != -1
    with pytest.raises(DomainError):
        default_config("E12")


def test_unknown_config_key_rejected():
    with pytest.raises(DomainError):
        run_experiment("E10", {"bogus": 1})


def test_seed_coerced_to_int():
    report = run_experiment("E10", {"seed": "3", "size_max": 5})
    assert report.config["seed"] == 3


def test_run_experiment_reduced_e7_passes():
    report = run_experiment("E7", {"checkpoints": [100, 1000, 10_000, 100_000]})
    assert report.experiment_id == "E7"
    assert report.passed
    names = [c.name for c in report.checks]
    assert "squares_power_log_exponent" in names
    assert report.runtime_ms > 0.0


def test_run_experiment_reduced_e10_passes():
    report = run_experiment("E10", {"size_max": 8})
    assert report.passed
    assert report.config["size_max"] == 8


def test_emit_csv_row_count_and_shape():
    report = run_experiment("E10", {"size_max": 6})
    payload = emit_report(report, fmt="csv").decode()
    lines = payload.strip().split("\n")
    assert lines[0] == "experiment_id,check,statistic,fitted_constant,passed"
    assert len(lines) == len(report.checks) + 1
    assert all(line.split(",")[0] == "E10" for line in lines[1:])


def test_emit_json_excludes_wall_clock_by_default():
    report = run_experiment("E10", {"size_max": 5})
    payload = emit_report(report)
    assert b"runtime" not in payload
    with_meta = emit_report(report, include_meta=True)
    obj = json.loads(with_meta)
    assert obj["meta"]["runtime_ms"] > 0.0
    with pytest.raises(DomainError):
        emit_report(report, fmt="yaml")


def test_empty_checks_document_is_valid():
    report = ExperimentReport("E1", {"seed": 0}, (), 1.0, ())
    assert json.loads(emit_report(report))["checks"] == []
    assert emit_report(report, fmt="csv").decode().strip().count("\n") == 0


def test_parse_emit_round_trip_on_random_reports():
    rng = np.random.default_rng(61)
    for _ in range(20):
        checks = tuple(
            CheckResult(
                name=f"check_{i}",
                statistic=float(rng.standard_normal()),
                fitted_constant=float(rng.uniform(0.1, 9.0)),
                passed=bool(rng.integers(0, 2)),
            )
            for i in range(int(rng.integers(0, 6)))
        )
        report = ExperimentReport(
            experiment_id=f"E{int(rng.integers(1, 12))}",
            config={"seed": int(rng.integers(0, 100)), "trials": int(rng.integers(1, 50))},
            checks=checks,
            runtime_ms=float(rng.uniform(0.1, 500.0)),
            artifacts=(),
        )
        assert parse_report(emit_report(report, include_meta=True)) == report


def test_reports_byte_identical_across_reruns():
    cfg = {"size_max": 6}
    a = emit_report(run_experiment("E10", cfg))
    b = emit_report(run_experiment("E10", cfg))
    assert a == b
    cfg2 = {"suite_size": 2, "trials": 60}
    x = emit_report(run_experiment("E2", cfg2))
    y = emit_report(run_experiment("E2", cfg2))
    assert x == y


def test_seed_changes_statistics():
    a = run_experiment("E2", {"suite_size": 2, "trials": 60, "seed": 0})
    b = run_experiment("E2", {"suite_size": 2, "trials": 60, "seed": 1})
    assert [c.statistic for c in a.checks] != [c.statistic for c in b.checks]

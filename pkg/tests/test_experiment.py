"""Sweep harness: record schema, exact reporting, deterministic emission."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from fthresholds.errors import DomainError
from fthresholds.experiment import (
    CSV_HEADER,
    SweepIssue,
    SweepRecord,
    convergence_report,
    emit,
    largest_exponent,
    report_to_json,
    sweep,
)
from fthresholds.reduction import IntegerIdeal


def cusp():
    return IntegerIdeal.from_strings(["x^2 + y^3"], 2)


def test_exponent_selection():
    assert largest_exponent(5, 10**4) == 5  # 5^5 = 3125
    assert largest_exponent(7, 10**4) == 4  # 7^4 = 2401
    assert largest_exponent(3, 10) == 2
    assert largest_exponent(11, 10) is None


def test_sweep_example_records():
    records = sweep(cusp(), [5, 7], 10**4)
    assert [(r.p, r.e) for r in records] == [(5, 5), (7, 4)]


def test_sweep_degenerate_skip():
    issues = []
    records = sweep(IntegerIdeal.from_strings(["2*x"], 1), [2, 3], 100, issues=issues)
    assert [r.p for r in records] == [3]
    assert [(i.p, i.kind) for i in issues] == [(2, "degenerate")]


def test_sweep_maximal_ideal_value():
    records = sweep(IntegerIdeal.from_strings(["x", "y"], 2), [3], 10)
    assert len(records) == 1
    r = records[0]
    assert (r.p, r.e, r.nu) == (3, 2, 16)
    assert (r.low, r.high) == (Fraction(16, 9), Fraction(2))


def test_convergence_report_gap():
    rec = SweepRecord(p=7, e=1, nu=5, low=Fraction(5, 7), high=Fraction(6, 7), elapsed_ms=0)
    rep = convergence_report([rec], Fraction(5, 6))
    assert rep.max_gap == Fraction(5, 42)
    assert rep.below_lct_ok is True
    assert rep.monotone_ok is True


def test_convergence_report_no_target():
    rec = SweepRecord(p=7, e=1, nu=5, low=Fraction(5, 7), high=Fraction(6, 7), elapsed_ms=3)
    rep = convergence_report([rec])
    assert rep.max_gap is None and rep.below_lct_ok is None
    assert rep.monotone_ok is True
    payload = json.loads(report_to_json(rep))
    assert "target_lct" not in payload and "max_gap" not in payload
    assert payload["monotone_ok"] is True


def test_convergence_report_empty():
    with pytest.raises(DomainError):
        convergence_report([])


def test_monotone_flag_detects_violation():
    a = SweepRecord(p=3, e=1, nu=2, low=Fraction(2, 3), high=Fraction(1), elapsed_ms=0)
    b = SweepRecord(p=3, e=2, nu=5, low=Fraction(5, 9), high=Fraction(6, 9), elapsed_ms=0)
    rep = convergence_report([a, b])
    assert rep.monotone_ok is False


def test_emit_csv_and_json(tmp_path: Path):
    records = sweep(cusp(), [5, 7], 100)
    rep = convergence_report(records, Fraction(5, 6))
    csv_path = tmp_path / "report.csv"
    emit(rep, "csv", csv_path)
    lines = csv_path.read_text().splitlines()
    assert lines[0] == CSV_HEADER == "p,e,nu,low,high,elapsed_ms"
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[0] == "5" and "/" in first[3]

    json_path = tmp_path / "report.json"
    emit(rep, "json", json_path)
    payload = json.loads(json_path.read_text())
    assert payload["target_lct"] == "5/6"
    assert payload["below_lct_ok"] is True
    assert all("elapsed_ms" not in r for r in payload["records"])
    assert [r["p"] for r in payload["records"]] == [5, 7]


def test_emit_empty_report_errors(tmp_path: Path):
    rep = convergence_report(
        [SweepRecord(p=5, e=1, nu=3, low=Fraction(3, 5), high=Fraction(4, 5), elapsed_ms=0)]
    )
    rep.records = []
    with pytest.raises(DomainError):
        emit(rep, "json", tmp_path / "empty.json")


def test_sweep_order_independent_bytes(tmp_path: Path):
    primes = [13, 5, 11, 7]
    rep1 = convergence_report(sweep(cusp(), primes, 1000), Fraction(5, 6))
    rep2 = convergence_report(sweep(cusp(), list(reversed(primes)), 1000), Fraction(5, 6))
    assert report_to_json(rep1) == report_to_json(rep2)


def test_sweep_jobs_identical_records():
    seq = sweep(cusp(), [5, 7, 11], 1000, jobs=1)
    par = sweep(cusp(), [5, 7, 11], 1000, jobs=4)
    strip = lambda rs: [(r.p, r.e, r.nu, r.low, r.high) for r in rs]
    assert strip(seq) == strip(par)

"""Prime sweeps of fpt enclosures with exact convergence reports.

For each prime the sweep uses the largest exponent e with p^e <= q_max,
computes the enclosure of the reduced ideal, and emits records sorted by
(p, e) so output bytes are independent of scheduling.  Reports never round:
gaps and flags are exact rational statements.

JSON reports deliberately omit elapsed_ms so that repeated runs are
byte-identical; the CSV keeps the timing column for plotting.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import CapacityError, DegenerateReductionError, DomainError
from .exact import format_rational
from .frobenius import fpt_enclosure
from .reduction import IntegerIdeal, reduce_mod_p

CSV_HEADER = "p,e,nu,low,high,elapsed_ms"


@dataclass(frozen=True)
class SweepRecord:
    p: int
    e: int
    nu: int
    low: Fraction
    high: Fraction
    elapsed_ms: int


@dataclass(frozen=True)
class SweepIssue:
    """A prime that produced no record, with the reason (not fatal)."""

    p: int
    kind: str  # "degenerate" | "capacity" | "domain" | "no-exponent"
    message: str


@dataclass
class ConvergenceReport:
    target_lct: Fraction | None
    records: list[SweepRecord]
    max_gap: Fraction | None
    monotone_ok: bool
    below_lct_ok: bool | None
    trend_ok: bool | None


def largest_exponent(p: int, q_max: int) -> int | None:
    """The largest e >= 1 with p^e <= q_max, or None."""
    if p > q_max:
        return None
    e = 1
    while p ** (e + 1) <= q_max:
        e += 1
    return e


def sweep(ideal: IntegerIdeal, primes: list[int], q_max: int, *, jobs: int = 1,
          issues: list[SweepIssue] | None = None) -> list[SweepRecord]:
    """One enclosure record per usable prime, sorted by (p, e).

    Degenerate reductions and capacity failures are recorded in `issues`
    (when given) and skipped; they never abort the sweep.
    """
    if len(set(primes)) != len(primes):
        raise DomainError("primes must be distinct")
    collected: list[SweepIssue] = []

    def work(p: int) -> SweepRecord | SweepIssue:
        e = largest_exponent(p, q_max)
        if e is None:
            return SweepIssue(p, "no-exponent", f"{p} > q_max = {q_max}")
        try:
            reduced = reduce_mod_p(ideal, p)
        except DegenerateReductionError as exc:
            return SweepIssue(p, "degenerate", str(exc))
        t0 = time.perf_counter()
        try:
            enc = fpt_enclosure(reduced, e)
        except CapacityError as exc:
            return SweepIssue(p, "capacity", str(exc))
        except DomainError as exc:
            return SweepIssue(p, "domain", str(exc))
        elapsed = int(round((time.perf_counter() - t0) * 1000))
        return SweepRecord(p=p, e=e, nu=enc.nu, low=enc.low, high=enc.high,
                           elapsed_ms=elapsed)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, primes))
    else:
        results = [work(p) for p in primes]

    records = []
    for res in results:
        if isinstance(res, SweepRecord):
            records.append(res)
        else:
            collected.append(res)
    records.sort(key=lambda r: (r.p, r.e))
    collected.sort(key=lambda i: i.p)
    if issues is not None:
        issues.extend(collected)
    return records


def convergence_report(records: list[SweepRecord],
                       target: Fraction | None = None) -> ConvergenceReport:
    """Exact flags over a record list; target-dependent fields None without one."""
    if not records:
        raise DomainError("empty report")
    by_p: dict[int, list[SweepRecord]] = {}
    for r in sorted(records, key=lambda r: (r.p, r.e)):
        by_p.setdefault(r.p, []).append(r)
    monotone_ok = all(
        group[i].low <= group[i + 1].low
        for group in by_p.values()
        for i in range(len(group) - 1)
    )
    max_gap = None
    below_ok = None
    trend_ok = None
    if target is not None:
        target = Fraction(target)
        gaps = [target - r.low for r in records]
        max_gap = max(gaps)
        below_ok = all(r.low <= target for r in records)
        first, last = records[0], records[-1]
        trend_ok = (target - last.low) <= (target - first.low) \
            + (first.high - first.low) + (last.high - last.low)
    return ConvergenceReport(
        target_lct=target,
        records=sorted(records, key=lambda r: (r.p, r.e)),
        max_gap=max_gap,
        monotone_ok=monotone_ok,
        below_lct_ok=below_ok,
        trend_ok=trend_ok,
    )


def report_to_json(report: ConvergenceReport) -> str:
    """Canonical JSON serialization (bit-stable for identical inputs)."""
    obj: dict = {}
    if report.target_lct is not None:
        obj["target_lct"] = format_rational(report.target_lct)
    recs = []
    for r in report.records:
        rec = {
            "p": r.p,
            "e": r.e,
            "nu": r.nu,
            "low": format_rational(r.low),
            "high": format_rational(r.high),
        }
        if report.target_lct is not None:
            rec["gap"] = format_rational(report.target_lct - r.low)
        recs.append(rec)
    obj["records"] = recs
    obj["monotone_ok"] = report.monotone_ok
    if report.target_lct is not None:
        obj["below_lct_ok"] = report.below_lct_ok
        obj["max_gap"] = format_rational(report.max_gap)
        obj["trend_ok"] = report.trend_ok
    return json.dumps(obj) + "\n"


def report_to_csv(report: ConvergenceReport) -> str:
    lines = [CSV_HEADER]
    for r in report.records:
        lines.append(
            f"{r.p},{r.e},{r.nu},{format_rational(r.low)},"
            f"{format_rational(r.high)},{r.elapsed_ms}"
        )
    return "\n".join(lines) + "\n"


def emit(report: ConvergenceReport, fmt: str, path: str | Path) -> None:
    """Write the report; sorted records and canonical rationals keep bytes stable."""
    if not report.records:
        raise DomainError("empty report")
    if fmt == "json":
        text = report_to_json(report)
    elif fmt == "csv":
        text = report_to_csv(report)
    else:
        raise DomainError(f"unknown format {fmt!r}")
    Path(path).write_text(text, encoding="utf-8")

"""Acceptance criteria 1-9: one PASS/FAIL line each, with runtime budgets.

Each criterion runs the relevant suites and requires every named check to
pass with zero failures inside the budget.  Lines are printed as they are
decided and repeated in the pytest terminal summary.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import pytest

from boselab.harness import SuiteReport, run_suite

_REPORTS: dict[tuple[str, int], tuple[SuiteReport, float]] = {}


def _report(name: str, q: int) -> tuple[SuiteReport, float]:
    key = (name, q)
    if key not in _REPORTS:
        start = time.perf_counter()
        rep = run_suite(name, q, seed=0)
        _REPORTS[key] = (rep, time.perf_counter() - start)
    return _REPORTS[key]


@dataclass
class Criterion:
    number: int
    title: str
    runs: list[tuple[str, int, tuple[str, ...] | None]]  # (suite, q, check names or None for all)
    budget_s: float
    extra: list[str] = field(default_factory=list)


CRITERIA = [
    Criterion(1, "spread partition and Gamma meets (q=2,3)", [
        ("spread", 2, ("line_count", "pairwise_disjoint", "partition", "meets_gamma_once", "meets_gamma_q_once")),
        ("spread", 3, ("line_count", "pairwise_disjoint", "partition", "meets_gamma_once", "meets_gamma_q_once")),
    ], 5.0),
    Criterion(2, "T-line cover of PG(5,4) off Gamma and Gamma^q (q=2)", [
        ("spread", 2, ("t_line_count", "t_line_cover", "t_line_unique")),
    ], 10.0),
    Criterion(3, "subline reguli and extended rulings (q=3, >= 50 sublines)", [
        ("sublines", 3, None),
    ], 30.0),
    Criterion(4, "conic y^2 = zx Bose pointset and cone structure (q=3)", [
        ("conic_bose", 3, None),
    ], 30.0),
    Criterion(5, "five-quadric zero sets and extended rulings (q=2 exhaustive, q=3 fixtures)", [
        ("fqconic", 2, None),
        ("fqconic", 3, None),
    ], 120.0),
    Criterion(6, "conic-conic scroll order bound (q=3)", [
        ("scroll", 3, ("points", "lines_disjoint", "sampled_bound", "extension_exact_four")),
    ], 60.0),
    Criterion(7, "five case fixtures with component structure (q=3)", [
        ("classify", 3, ("fixture_1a", "fixture_1b", "fixture_1c", "fixture_2a", "fixture_2b")),
    ], 120.0),
    Criterion(8, "forward weight sum 4, round trip, perturbed rejection (q=2,3)", [
        ("unify", 2, ("forward_weight_sum", "round_trip", "enumerated", "perturbed_rejected")),
        ("unify", 3, ("forward_weight_sum", "round_trip", "enumerated", "perturbed_rejected")),
    ], 600.0),
    Criterion(9, "five-quadric meet with g equals C+ meet with g (q=3)", [
        ("unify", 3, ("cplus_meets_g",)),
    ], 600.0),
]


def evaluate(c: Criterion) -> tuple[bool, str]:
    problems: list[str] = []
    elapsed = 0.0
    for name, q, wanted in c.runs:
        rep, secs = _report(name, q)
        elapsed += secs
        if rep.failed:
            problems.append(f"{name} q={q} has {rep.failed} failed checks")
        by_name = {r.name: r for r in rep.checks}
        for w in wanted or [r.name for r in rep.checks]:
            r = by_name.get(w)
            if r is None:
                problems.append(f"{name} q={q} missing check {w}")
            elif r.status != "passed":
                problems.append(f"{name} q={q} {w} {r.status}: {r.detail}")
    if elapsed > c.budget_s:
        problems.append(f"runtime {elapsed:.1f}s over budget {c.budget_s:.0f}s")
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {c.number}: {status} {c.title} [{elapsed:.1f}s / {c.budget_s:.0f}s]"
    if problems:
        line += " :: " + "; ".join(problems[:5])
    return not problems, line


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{c.number}" for c in CRITERIA])
def test_criterion(crit: Criterion, acceptance_lines):
    ok, line = evaluate(crit)
    print(line)
    acceptance_lines.append(line)
    assert ok, line


if __name__ == "__main__":
    for crit in CRITERIA:
        print(evaluate(crit)[1])

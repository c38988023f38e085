import random

import pytest

from l2alex.checks.runner import (
    SUITES,
    CheckReport,
    SuiteResult,
    _guarded,
    coprime_pairs,
    grid_specs,
    random_spec,
    run_checks,
)
from l2alex.config.settings import CheckConfig
from l2alex.links.builder import build_link

SMALL = CheckConfig(grid_radius=2, random_cases=25, workers=2, seed=7)


def test_all_suites_pass():
    report = run_checks(SMALL)
    assert [s.name for s in report.suites] == list(SUITES)
    failures = {s.name: s.failures[:3] for s in report.suites if not s.passed}
    assert report.passed, failures
    assert all(s.cases > 0 for s in report.suites)


def test_named_subset():
    report = run_checks(SMALL, ["keychain_products", "parser_round_trip"])
    assert [s.name for s in report.suites] == ["keychain_products", "parser_round_trip"]
    data = report.to_json()
    assert data["passed"]
    assert data["cases"] == report.cases


def test_unknown_suite():
    with pytest.raises(ValueError, match="nope"):
        run_checks(SMALL, ["nope"])


def test_raising_suite_is_a_failure():
    def broken(config):
        raise RuntimeError("boom")

    result = _guarded("broken", broken, SMALL)
    assert not result.passed
    assert result.failures == ["raised RuntimeError: boom"]


def test_report_counts():
    report = CheckReport(
        suites=[
            SuiteResult(name="a", cases=3),
            SuiteResult(name="b", cases=2, failures=["x"]),
        ]
    )
    assert not report.passed
    assert (report.cases, report.failures) == (5, 1)


def test_expect_counts_cases():
    result = SuiteResult(name="s")
    result.expect(True, "fine")
    result.expect(False, "broken")
    assert (result.cases, result.failures) == (2, ["broken"])


def test_coprime_pairs():
    pairs = set(coprime_pairs(1))
    assert pairs == {(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)}


def test_grid_specs_build():
    for spec in grid_specs(2):
        build_link(spec)


def test_random_specs_build():
    rng = random.Random(3)
    for _ in range(30):
        build_link(random_spec(rng))


def test_default_grid_covers_radius_five():
    assert CheckConfig().grid_radius == 5


def test_grid_suites_at_radius_five():
    config = CheckConfig(grid_radius=5, random_cases=25, workers=3)
    report = run_checks(config, ["torres_grid", "sub_torus_links", "cabling"])
    assert report.passed, [s.failures[:3] for s in report.suites]
    torres = report.suites[0]
    pairs = [(p, q) for p, q in coprime_pairs(5)]
    assert (5, -4) in pairs and (-5, 3) in pairs
    assert torres.cases > 2 * len(pairs)


def test_sign_symmetry_checks_every_requested_case():
    config = CheckConfig(grid_radius=1, random_cases=60, workers=1, seed=11)
    report = run_checks(config, ["sign_symmetry"])
    assert report.suites[0].cases == 60
    assert report.passed

import doctest

import pytest

import semih1.linalg
from semih1.selftest import run_fixture_files, selftest


def test_same_seed_gives_identical_summaries():
    a = selftest(seed=5, max_dim=2, cases=12)
    b = selftest(seed=5, max_dim=2, cases=12)
    assert a == b


def test_different_seeds_draw_different_instances():
    a = selftest(seed=5, max_dim=2, cases=12)
    b = selftest(seed=6, max_dim=2, cases=12)
    assert a["ok"] and b["ok"]
    assert a["construction_counts"] != b["construction_counts"] or \
        a["rule_verdicts"] != b["rule_verdicts"]


def test_preconditions_rejected():
    with pytest.raises(ValueError):
        selftest(cases=0)
    with pytest.raises(ValueError):
        selftest(max_dim=0)


def test_packaged_fixtures_all_pass():
    count, failures = run_fixture_files()
    assert count == 12
    assert failures == []


def test_linalg_doctests():
    results = doctest.testmod(semih1.linalg)
    assert results.failed == 0
    assert results.attempted >= 5


def test_failure_accounting_and_shrink(monkeypatch):
    import semih1.selftest as st

    def always_fails(p, a_sample, rng):
        raise st.CaseFailure("synthetic-check", p.dim)

    monkeypatch.setattr(st, "run_case", always_fails)
    summary = st.selftest(seed=4, max_dim=2, cases=3)
    assert not summary["ok"]
    failing = [f for f in summary["failures"] if f.get("check") == "synthetic-check"]
    assert len(failing) == 3
    # the shrinker reruns smaller instances and reports the smallest failure
    assert all(f["smallest_found"]["total_dim"] >= 1 for f in failing)
    assert min(f["smallest_found"]["total_dim"] for f in failing) <= 3


def test_cli_selftest_failure_exit_code(monkeypatch, capsys):
    import semih1.cli as cli

    def fake_selftest(seed, max_dim, cases, log=None):
        return {
            "seed": seed, "max_dim": max_dim, "cases": cases,
            "fixtures_checked": 12, "fixture_failures": 0,
            "construction_counts": {}, "rule_verdicts": {},
            "failures": [{"case": 0, "check": "synthetic", "detail": ""}],
            "ok": False,
        }

    monkeypatch.setattr(cli, "selftest", fake_selftest)
    assert cli.main(["selftest", "--cases", "1", "--quiet"]) == 3
    assert "FAILURES" in capsys.readouterr().out

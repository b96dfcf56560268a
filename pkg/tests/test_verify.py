from kdelete.verify import CheckResult, build_checks, run_checks


def test_tiers_nest():
    tiny = {name for name, _ in build_checks("tiny", seed=0)}
    small = {name for name, _ in build_checks("small", seed=0)}
    desk = {name for name, _ in build_checks("desk", seed=0)}
    assert tiny < small < desk


def test_unknown_tier():
    import pytest

    with pytest.raises(ValueError):
        build_checks("galaxy", seed=0)


def test_tiny_tier_all_green_and_fast():
    results = run_checks("tiny", seed=0)
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]
    assert sum(r.seconds for r in results) < 60


def test_failures_are_captured_not_raised(monkeypatch):
    import kdelete.verify as V

    def boom():
        raise AssertionError("synthetic failure")

    monkeypatch.setattr(
        V, "build_checks", lambda tier, seed: [("boom", boom)]
    )
    results = V.run_checks("tiny", seed=0)
    assert len(results) == 1
    assert not results[0].ok
    assert "synthetic" in results[0].detail


def test_check_result_json_shape():
    res = CheckResult("x", True, "fine", 0.25)
    out = res.to_json()
    assert set(out) == {"name", "ok", "detail", "seconds"}

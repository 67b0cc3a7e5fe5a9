import pytest

from ice20v.tilings import free_energy_trend
from ice20v.verify import SUITE_CAPS, SUITES, Check, CheckResult, Outcome, SuiteRunner, SuiteType, build_checks
from ice20v.verify.tables import A_SEQUENCE, TREND_DENSITIES


def fixed(expected, actual):
    return lambda: Outcome(expected=expected, actual=actual)


def boom():
    raise ArithmeticError("division by zero")


def test_every_suite_is_registered():
    for suite in SuiteType:
        if suite is SuiteType.ALL:
            continue
        assert suite in SUITES
        assert SUITE_CAPS[suite] >= 1


def test_build_checks_caps_size():
    bound, checks = build_checks(SuiteType.STAGGERED, 10)
    assert bound == SUITE_CAPS[SuiteType.STAGGERED]
    assert checks
    bound, _ = build_checks(SuiteType.Z20T4, 2)
    assert bound == 2


def test_check_ids_are_unique():
    for suite in SUITES:
        _, checks = build_checks(suite, 3)
        ids = [check.check_id for check in checks]
        assert len(ids) == len(set(ids)), suite


def test_runner_expands_and_deduplicates():
    runner = SuiteRunner(["z20t4", "all", SuiteType.AN6V], max_n=2)
    assert runner.suites[0] is SuiteType.Z20T4
    assert runner.suites.count(SuiteType.AN6V) == 1
    assert len(runner.suites) == len(SuiteType) - 1


def test_runner_rejects_bad_arguments():
    with pytest.raises(ValueError):
        SuiteRunner(["z20t4"], max_n=0)
    with pytest.raises(ValueError):
        SuiteRunner(["z20t4"], max_n=2, jobs=0)
    with pytest.raises(ValueError):
        SuiteRunner(["unknown"], max_n=2)


def test_statuses():
    passing = SuiteRunner.execute(SuiteType.AN6V, Check("a", "src", fixed(1, 1)))
    assert passing.status == "pass"
    failing = SuiteRunner.execute(SuiteType.AN6V, Check("b", "src", fixed(1, 2)))
    assert failing.status == "fail"
    expected = SuiteRunner.execute(SuiteType.AN6V, Check("c", "src", fixed(1, 2), expect_failure=True))
    assert expected.status == "expected-fail"
    assert expected.ok
    surprise = SuiteRunner.execute(SuiteType.AN6V, Check("d", "src", fixed(1, 1), expect_failure=True))
    assert surprise.status == "unexpected-pass"
    assert not surprise.ok
    info = SuiteRunner.execute(SuiteType.AN6V, Check("e", "src", fixed(1, 2), informational=True))
    assert info.status == "info"
    assert info.ok


def test_errors_are_captured(caplog):
    result = SuiteRunner.execute(SuiteType.AN6V, Check("f", "src", boom))
    assert result.status == "fail"
    assert result.error == "ArithmeticError: division by zero"
    assert result.to_dict()["error"] == "ArithmeticError: division by zero"
    assert "raised ArithmeticError" in caplog.text


def test_result_dict():
    result = CheckResult(suite="an6v", check_id="x", source="src", expected=[1, True], actual=[1, True])
    assert result.to_dict() == {
        "check": "x",
        "source": "src",
        "expected": "[1, true]",
        "actual": "[1, true]",
        "status": "pass",
    }


def test_results_keep_suite_order(mocker):
    checks = [Check(f"c{index}", "src", fixed(index, index)) for index in range(20)]
    checks[7] = Check("c7", "src", fixed(7, 8))
    mocker.patch("ice20v.verify.core.build_checks", return_value=(3, checks))
    reports = SuiteRunner(["an6v"], max_n=3, jobs=4).run()
    assert len(reports) == 1
    report = reports[0]
    assert [result.check_id for result in report.results] == [f"c{index}" for index in range(20)]
    assert not report.passed
    assert [result.check_id for result in report.failures()] == ["c7"]
    data = report.to_dict()
    assert data["suite"] == "an6v"
    assert data["max_n"] == 3
    assert len(data["checks"]) == 19
    assert [item["check"] for item in data["failures"]] == ["c7"]
    assert not SuiteRunner.passed(reports)


def test_job_count_does_not_change_reports():
    first = SuiteRunner(["an6v"], max_n=3, jobs=1).run()
    second = SuiteRunner(["an6v"], max_n=3, jobs=3).run()
    assert [report.to_dict() for report in first] == [report.to_dict() for report in second]


def test_an6v_suite():
    reports = SuiteRunner(["an6v"], max_n=4).run()
    assert SuiteRunner.passed(reports)
    ids = [result.check_id for result in reports[0].results]
    assert ids[:4] == ["z6v:n=1", "z6v:n=2", "z6v:n=3", "z6v:n=4"]
    assert "census:n=3" in ids


def test_z20t4_suite():
    reports = SuiteRunner(["z20t4"], max_n=3).run()
    assert SuiteRunner.passed(reports), reports[0].failures()
    ids = {result.check_id for result in reports[0].results}
    assert {"dwbc1:n=3", "t4:n=3", "ik:n=3", "gf-oracle", "gf-identity", "trend"} <= ids


@pytest.mark.parametrize("suite", ["refined", "dwbc3", "penta", "nabc", "apm-rules", "staggered", "kasteleyn"])
def test_small_suites_pass(suite):
    reports = SuiteRunner([suite], max_n=2).run()
    assert SuiteRunner.passed(reports), reports[0].failures()


def test_yang_baxter_suite():
    """
    The negative control counts as a pass because it is expected to fail.
    """
    reports = SuiteRunner(["yang-baxter"], max_n=1).run()
    results = {result.check_id: result for result in reports[0].results}
    assert results["kagome"].status == "pass"
    assert results["negative-control"].status == "expected-fail"
    assert reports[0].passed


def test_symmetry_suite():
    reports = SuiteRunner(["symmetry"], max_n=3).run()
    assert SuiteRunner.passed(reports), reports[0].failures()


@pytest.mark.slow
def test_all_suites_default_size():
    reports = SuiteRunner(["all"], max_n=4, jobs=2).run()
    assert SuiteRunner.passed(reports), [report.failures() for report in reports]


def test_trend_landmarks():
    report = free_energy_trend(A_SEQUENCE)
    for n, density in TREND_DENSITIES.items():
        assert report.densities[n - 1] == pytest.approx(density, abs=5e-6)
    results = {result.check_id: result for result in SuiteRunner(["z20t4"], max_n=1).run()[0].results}
    assert results["trend"].status == "pass"
    assert results["trend"].detail.endswith("0.41115, 0.41532")

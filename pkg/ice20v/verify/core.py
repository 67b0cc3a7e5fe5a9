import logging
import typing as t
from concurrent.futures import ThreadPoolExecutor

from ice20v.verify.model import Check, CheckResult, SuiteReport, SuiteType
from ice20v.verify.suites import build_checks

logger = logging.getLogger(__name__)


class SuiteRunner:
    """
    Run verification suites on a thread pool.

    Checks are independent, so they run in any order. Results are reported in the order the
    suite defines them, which keeps the output byte-identical across job counts.
    """

    def __init__(self, suites: t.Iterable[t.Union[SuiteType, str]], max_n: int, jobs: int = 1) -> None:
        if max_n < 1:
            raise ValueError(f"Size bound must be positive, got max_n={max_n}")
        if jobs < 1:
            raise ValueError(f"Number of jobs must be positive, got jobs={jobs}")
        self.suites: t.List[SuiteType] = []
        for suite in suites:
            for item in SuiteType(suite).expand():
                if item not in self.suites:
                    self.suites.append(item)
        self.max_n = max_n
        self.jobs = jobs

    @staticmethod
    def execute(suite: SuiteType, check: Check) -> CheckResult:
        logger.debug(f"Running check {suite.value}/{check.check_id}")
        common = dict(
            suite=suite.value,
            check_id=check.check_id,
            source=check.source,
            expect_failure=check.expect_failure,
            informational=check.informational,
        )
        try:
            outcome = check.compute()
        except (ArithmeticError, ValueError, TypeError) as ex:
            logger.error(f"Check {suite.value}/{check.check_id} raised {ex.__class__.__name__}: {ex}")
            return CheckResult(expected=None, actual=None, error=f"{ex.__class__.__name__}: {ex}", **common)
        return CheckResult(expected=outcome.expected, actual=outcome.actual, detail=outcome.detail, **common)

    def run(self) -> t.List[SuiteReport]:
        plan: t.List[t.Tuple[SuiteReport, t.List[Check]]] = []
        for suite in self.suites:
            bound, checks = build_checks(suite, self.max_n)
            plan.append((SuiteReport(suite=suite, max_n=bound), checks))

        with ThreadPoolExecutor(max_workers=self.jobs, thread_name_prefix="ice20v-verify") as executor:
            futures = [
                (report, [executor.submit(self.execute, report.suite, check) for check in checks])
                for report, checks in plan
            ]
            reports = []
            for report, pending in futures:
                report.results = [future.result() for future in pending]
                reports.append(report)

        for report in reports:
            status = "passed" if report.passed else f"FAILED ({len(report.failures())} failures)"
            logger.info(f"Suite {report.suite.value} up to n={report.max_n}: {len(report.results)} checks, {status}")
        return reports

    @staticmethod
    def passed(reports: t.Sequence[SuiteReport]) -> bool:
        return all(report.passed for report in reports)

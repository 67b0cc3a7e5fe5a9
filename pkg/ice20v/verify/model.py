import typing as t
from dataclasses import dataclass, field
from enum import Enum

from ice20v.icemodel.report import Report


class SuiteType(Enum):
    AN6V = "an6v"
    Z20T4 = "z20t4"
    REFINED = "refined"
    DWBC3 = "dwbc3"
    PENTA = "penta"
    NABC = "nabc"
    APM_RULES = "apm-rules"
    SYMMETRY = "symmetry"
    YANG_BAXTER = "yang-baxter"
    STAGGERED = "staggered"
    KASTELEYN = "kasteleyn"
    ALL = "all"

    @classmethod
    def names(cls) -> t.List[str]:
        return [item.value for item in cls]

    def expand(self) -> t.List["SuiteType"]:
        if self is SuiteType.ALL:
            return [item for item in SuiteType if item is not SuiteType.ALL]
        return [self]


@dataclass(frozen=True)
class Outcome:
    expected: t.Any
    actual: t.Any
    detail: str = ""

    @classmethod
    def from_report(cls, report: Report) -> "Outcome":
        failures = report.failures()
        detail = "; ".join(f"{item.name}: expected {item.expected!r}, got {item.actual!r}" for item in failures[:5])
        return cls(expected=len(report), actual=len(report) - len(failures), detail=detail)


@dataclass(frozen=True)
class Check:
    """
    One unit of work of a suite. `compute` returns the outcome, `source` says where the expected
    value comes from.
    """

    check_id: str
    source: str
    compute: t.Callable[[], Outcome] = field(repr=False)
    expect_failure: bool = False
    informational: bool = False


def _text(value: t.Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text(item) for item in value) + "]"
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check_id: str
    source: str
    expected: t.Any
    actual: t.Any
    detail: str = ""
    expect_failure: bool = False
    informational: bool = False
    error: t.Optional[str] = None

    @property
    def matched(self) -> bool:
        return self.error is None and self.expected == self.actual

    @property
    def ok(self) -> bool:
        if self.informational:
            return self.error is None
        return self.matched != self.expect_failure

    @property
    def status(self) -> str:
        if self.informational:
            return "info" if self.ok else "error"
        if self.expect_failure:
            return "expected-fail" if self.ok else "unexpected-pass"
        return "pass" if self.ok else "fail"

    def to_dict(self) -> t.Dict[str, t.Any]:
        data = {
            "check": self.check_id,
            "source": self.source,
            "expected": _text(self.expected),
            "actual": _text(self.actual),
            "status": self.status,
        }
        if self.detail:
            data["detail"] = self.detail
        if self.error:
            data["error"] = self.error
        return data


@dataclass
class SuiteReport:
    suite: SuiteType
    max_n: int
    results: t.List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.ok for result in self.results)

    def failures(self) -> t.List[CheckResult]:
        return [result for result in self.results if not result.ok]

    def to_dict(self) -> t.Dict[str, t.Any]:
        return {
            "suite": self.suite.value,
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [result.to_dict() for result in self.results if result.status in ("pass", "info")],
            "expected_failures": [result.to_dict() for result in self.results if result.status == "expected-fail"],
            "failures": [result.to_dict() for result in self.failures()],
        }

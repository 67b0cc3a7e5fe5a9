import typing as t
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Finding:
    """
    One exact comparison. `detail` carries whatever helps reading a failure.
    """

    name: str
    expected: t.Any
    actual: t.Any
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class Report:
    title: str
    findings: t.List[Finding] = field(default_factory=list)

    def add(self, name: str, expected: t.Any, actual: t.Any, detail: str = "") -> Finding:
        finding = Finding(name=name, expected=expected, actual=actual, detail=detail)
        self.findings.append(finding)
        return finding

    @property
    def passed(self) -> bool:
        return all(finding.passed for finding in self.findings)

    def failures(self) -> t.List[Finding]:
        return [finding for finding in self.findings if not finding.passed]

    def __len__(self) -> int:
        return len(self.findings)

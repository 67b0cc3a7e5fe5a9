"""
Alternation conditions and sum rules of the four matrix types.

Each line of the matrix (row, column or diagonal) carries a pattern (first, last): the
non-zero entries of the relevant triple component, read from left to right or from top to
bottom, must alternate in sign starting with `first` and ending with `last`. A pattern with
first == last forces an odd, hence non-empty, sequence.
"""

import logging
import typing as t
from enum import Enum

from ice20v.apm.model import ApmMatrix
from ice20v.exactalg.eisenstein import EisensteinElt
from ice20v.icemodel.model import BoundaryKind
from ice20v.icemodel.report import Report

logger = logging.getLogger(__name__)

Pattern = t.Tuple[int, int]


class ApmType(Enum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4

    @classmethod
    def of(cls, value: t.Union["ApmType", int, str]) -> "ApmType":
        if isinstance(value, ApmType):
            return value
        return cls(int(value))

    @property
    def boundary_kind(self) -> BoundaryKind:
        return BoundaryKind(f"DWBC{self.value}")


def alternates(signs: t.Sequence[int], pattern: Pattern) -> bool:
    nonzero = [sign for sign in signs if sign]
    first, last = pattern
    if not nonzero:
        return first != last
    if nonzero[0] != first or nonzero[-1] != last:
        return False
    return all(a == -b for a, b in zip(nonzero, nonzero[1:]))


def _diagonal_pattern(kind: ApmType, offset: int) -> Pattern:
    if kind is ApmType.TYPE1:
        return (-1, 1) if offset > 0 else (1, -1)
    if kind is ApmType.TYPE2:
        return (-1, 1) if offset >= 0 else (1, -1)
    return -1, 1


def _row_pattern(kind: ApmType) -> Pattern:
    return (1, -1) if kind is ApmType.TYPE4 else (1, 1)


def _column_pattern(kind: ApmType) -> Pattern:
    return (1, -1) if kind is ApmType.TYPE4 else (-1, -1)


def violations(apm: ApmMatrix, kind: t.Union[ApmType, int]) -> t.List[str]:
    """
    Locations of every failed alternation condition, empty for a valid matrix.
    """
    kind = ApmType.of(kind)
    n = apm.n
    found = []
    for i in range(1, n + 1):
        if not alternates([apm.triple(i, j)[0] for j in range(1, n + 1)], _row_pattern(kind)):
            found.append(f"row {i}")
    for j in range(1, n + 1):
        if not alternates([apm.triple(i, j)[1] for i in range(1, n + 1)], _column_pattern(kind)):
            found.append(f"column {j}")
    for offset in range(1 - n, n):
        cells = apm.diagonal_cells(offset)
        if not alternates([apm.triple(i, j)[2] for i, j in cells], _diagonal_pattern(kind, offset)):
            found.append(f"diagonal {offset}")
    return found


def validate(apm: ApmMatrix, kind: t.Union[ApmType, int]) -> bool:
    return not violations(apm, kind)


def _sum(values: t.Iterable[EisensteinElt]) -> EisensteinElt:
    return sum(values, EisensteinElt())


def check_sum_rules(apm: ApmMatrix, kind: t.Union[ApmType, int]) -> Report:
    """
    Types 1 to 3 sum to n. Type 4 sums to 0, with row sums in ω²ℤ, column sums in ωℤ and
    diagonal sums in ℤ.
    """
    kind = ApmType.of(kind)
    n = apm.n
    report = Report(title=f"Sum rules, type {kind.value}, n={n}")
    total = apm.total()
    if kind is not ApmType.TYPE4:
        report.add("total", str(EisensteinElt(n)), str(total))
        return report
    report.add("total", "0", str(total))
    for i in range(1, n + 1):
        row = _sum(apm.row(i))
        report.add(f"row {i} in ω²ℤ", True, row.in_omega2_integers(), detail=str(row))
    for j in range(1, n + 1):
        column = _sum(apm.column(j))
        report.add(f"column {j} in ωℤ", True, column.in_omega_integers(), detail=str(column))
    for offset in range(1 - n, n):
        diagonal = _sum(apm.value(i, j) for i, j in apm.diagonal_cells(offset))
        report.add(f"diagonal {offset} in ℤ", True, diagonal.in_integers(), detail=str(diagonal))
    return report

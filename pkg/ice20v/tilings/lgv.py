"""
Non-intersecting path determinants for quarter-turn symmetric tilings of the holey Aztec square
and for the triangle family.
"""

import logging
import math
import typing as t
from dataclasses import dataclass

from ice20v.exactalg.matrix import ExactMatrix, det_exact, sum_principal_minors
from ice20v.exactalg.poly import PolyUni
from ice20v.genfun.builders import build_refined_t4_matrix, build_t4_matrix
from ice20v.tilings.schroder import restricted_schroder, strip_schroder

logger = logging.getLogger(__name__)

# (3/2)·log(4/3), the free energy per site of the twenty-vertex model with domain walls.
FREE_ENERGY_BOUND = 1.5 * math.log(4 / 3)


def t4_count(n: int, theta: t.Any = 1) -> t.Any:
    return det_exact(build_t4_matrix(n, theta))


def t4_refined(n: int, kind: int) -> PolyUni:
    return det_exact(build_refined_t4_matrix(n, kind))


def lgv_matrix(n: int) -> ExactMatrix:
    """
    M_n with entries S̃_{i,j+1} taken from the path recursion instead of the generating function.
    """
    return ExactMatrix.from_function(n, n, lambda i, j: restricted_schroder(i, j + 1))


def t4_by_minor_sum(n: int) -> int:
    """
    Σ over endpoint subsets of the LGV minors of M_n, which det(I + M_n) expands into.
    """
    return sum_principal_minors(lgv_matrix(n))


def _triangle_matrix(n: int, offset: int, height: int) -> ExactMatrix:
    return ExactMatrix.from_function(
        n, n, lambda i, j: strip_schroder(2 * i, 2 * j + offset, height, 2 * j + offset)
    )


def triangle_count_forms(n: int) -> t.Tuple[int, int]:
    """
    det S^{(2n-1)}_{2i,2j}(2j) and det S^{(2n-1)}_{2i,2j+1}(2j+1).
    """
    if n < 1:
        raise ValueError(f"Triangle size must be positive, got n={n}")
    height = 2 * n - 1
    return det_exact(_triangle_matrix(n, 0, height)), det_exact(_triangle_matrix(n, 1, height))


def triangle_count(n: int) -> int:
    even, odd = triangle_count_forms(n)
    if even != odd:
        raise ArithmeticError(f"Triangle determinants disagree for n={n}: {even} != {odd}")
    return even


def extended_triangle_matrix(n: int, k: int = 0) -> ExactMatrix:
    """
    The odd form in a strip of height 2n-1+k, for the triangle with its top border raised by k.
    """
    if n < 1 or k < 0:
        raise ValueError(f"Extended triangle needs n >= 1 and k >= 0, got n={n}, k={k}")
    return _triangle_matrix(n, 1, 2 * n - 1 + k)


def extended_triangle_count(n: int, k: int) -> int:
    return det_exact(extended_triangle_matrix(n, k))


@dataclass(frozen=True)
class TrendReport:
    densities: t.List[float]
    increasing: bool
    bounded: bool
    last: float

    @property
    def passed(self) -> bool:
        return self.increasing and self.bounded


def free_energy_trend(values: t.Sequence[int], bound: float = FREE_ENERGY_BOUND) -> TrendReport:
    """
    (log Z_n)/n² for n = 1, 2, ...; increasing from n = 2 on and staying below `bound`.
    """
    densities = [math.log(value) / (n * n) for n, value in enumerate(values, start=1)]
    tail = densities[1:]
    increasing = all(a < b for a, b in zip(tail, tail[1:]))
    bounded = all(density < bound for density in densities)
    last = densities[-1] if densities else 0.0
    logger.debug(f"Free energy densities: {densities}")
    return TrendReport(densities=densities, increasing=increasing, bounded=bounded, last=last)

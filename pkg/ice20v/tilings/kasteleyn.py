"""
Closed product formulas for domino tilings of the 2n × 2n square, evaluated with mpmath.

Floating point is confined to this module. Every result is rounded to the nearest integer and
rejected when the rounding residue exceeds RESIDUE_TOLERANCE relative to the value.
"""

import logging
import typing as t

import mpmath

logger = logging.getLogger(__name__)

KASTELEYN_MAX_N = 12
RESIDUE_TOLERANCE = mpmath.mpf("1e-6")


def _factor(i: int, j: int, n: int) -> t.Any:
    angle = mpmath.pi / (2 * n + 1)
    return 4 * mpmath.cos(i * angle) ** 2 + 4 * mpmath.cos(j * angle) ** 2


def _rounded(value: t.Any, label: str) -> int:
    nearest = mpmath.nint(value)
    residue = abs(value - nearest) / max(abs(nearest), 1)
    if residue > RESIDUE_TOLERANCE:
        raise ArithmeticError(
            f"{label}: rounding residue {mpmath.nstr(residue, 5)} exceeds {mpmath.nstr(RESIDUE_TOLERANCE, 3)}"
        )
    return int(nearest)


def _check_size(n: int) -> None:
    if not 1 <= n <= KASTELEYN_MAX_N:
        raise ValueError(f"Product formula supports 1 <= n <= {KASTELEYN_MAX_N}, got n={n}")


def kasteleyn_square(n: int) -> int:
    """
    Π_{i,j=1..n} {4cos²(iπ/(2n+1)) + 4cos²(jπ/(2n+1))}.
    """
    _check_size(n)
    with mpmath.workdps(40 + n * n):
        product = mpmath.mpf(1)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                product *= _factor(i, j, n)
        return _rounded(product, f"kasteleyn_square({n})")


def kasteleyn_half_product(n: int) -> int:
    """
    The same factors over 1 <= i < j <= n; squares to T(S_n)/2^n.
    """
    _check_size(n)
    with mpmath.workdps(40 + n * n):
        product = mpmath.mpf(1)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                product *= _factor(i, j, n)
        return _rounded(product, f"kasteleyn_half_product({n})")

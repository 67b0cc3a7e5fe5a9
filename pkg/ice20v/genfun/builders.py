"""
Matrix builders for the determinant formulas.

All builders use a 0-based convention: entry (i, j) of an n×n matrix is the coefficient of
r^i s^j of the relevant kernel, for i, j = 0..n-1. The homogeneous IK kernels are usually
written with 1-based indices and r^(i-1) s^(j-1); that is the same matrix.
"""

import logging
import typing as t
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.matrix import ExactMatrix, det_exact
from ice20v.exactalg.poly import PolyUni, as_poly
from ice20v.genfun.series import ONE, R, S, BivariateRationalGF, gf_coeff_table

logger = logging.getLogger(__name__)

TAU = PolyUni([0, 1])


def _gaussian() -> t.Tuple[Cyclotomic2k, Cyclotomic2k, Cyclotomic2k]:
    """
    i, z = (1+i)/2 and w = (i-1)/2 in the Gaussian rationals.
    """
    i = Cyclotomic2k.imaginary_unit(1)
    return i, (1 + i) / 2, (i - 1) / 2


@lru_cache(maxsize=None)
def schroder_kernel() -> BivariateRationalGF:
    """
    1/(1-r-s-rs): Schröder paths with unit left, up and diagonal steps.
    """
    return 1 / (ONE - R - S - R * S)


@lru_cache(maxsize=None)
def restricted_schroder_gf() -> BivariateRationalGF:
    """
    2r/((1-r)(1-r-s-rs)) = Σ S̃_{i,j+1} r^i s^j.
    """
    return (2 * R) / (ONE - R) * schroder_kernel()


@lru_cache(maxsize=None)
def t4_kernel() -> BivariateRationalGF:
    """
    1/(1-rs) + 2r/((1-r)(1-r-s-rs)), the coefficient matrix of I + M.
    """
    return 1 / (ONE - R * S) + restricted_schroder_gf()


def build_t4_matrix(n: int, theta: t.Any = None) -> ExactMatrix:
    """
    I_n + θ·M_n with (M_n)_{i,j} = S̃_{i,j+1}; θ defaults to 1.
    """
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got n={n}")
    table = gf_coeff_table(restricted_schroder_gf(), n - 1, n - 1)
    if theta is None or theta == 1:
        return ExactMatrix.from_function(n, n, lambda i, j: int(i == j) + table[i, j])
    return ExactMatrix.from_function(n, n, lambda i, j: int(i == j) + theta * table[i, j])


def _refined_weight(kind: int) -> PolyUni:
    if kind == 1:
        return 2 * TAU
    if kind == 2:
        return 1 + TAU
    raise ValueError(f"Refinement type must be 1 or 2, got {kind}")


def refined_t4_kernel(kind: int) -> BivariateRationalGF:
    """
    1/(1-rs) + c(τ)·r/((1-τr)(1-r-s-rs)) with c = 2τ (type 1) or 1+τ (type 2).
    """
    weight = _refined_weight(kind)
    return 1 / (ONE - R * S) + (weight * R) / (ONE - TAU * R) * schroder_kernel()


def build_refined_t4_matrix(n: int, kind: int) -> ExactMatrix:
    """
    I_n + M_n with its last column replaced by the τ-refined entries S̃^{(kind)}_{i,n}(τ).
    """
    base = build_t4_matrix(n)
    table = gf_coeff_table(refined_t4_kernel(kind), n - 1, n - 1)
    last = [as_poly(table[i, n - 1]) for i in range(n)]
    return base.map(as_poly).with_column(n - 1, last)


def build_refined_t4_matrix_second_form(n: int, kind: int) -> ExactMatrix:
    """
    Same determinant, realized as the unrefined matrix plus a last-column correction:
    coefficients of r^i in r·{c(τ)/(1-τr) - 2/(1-r)}·(1+r)^(n-1)/(1-r)^n.
    """
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got n={n}")
    weight = _refined_weight(kind)
    correction = (
        R * (weight / (ONE - TAU * R) - 2 / (ONE - R)) * ((ONE + R) ** (n - 1)) * (1 / ((ONE - R) ** n))
    )
    table = gf_coeff_table(correction, n - 1, 0)
    base = build_t4_matrix(n).map(as_poly)
    last = [base[i, n - 1] + table[i, 0] for i in range(n)]
    return base.with_column(n - 1, last)


@dataclass(frozen=True)
class IkSystem:
    """
    A determinant together with the scalar prefactor turning it into a partition function.
    """

    matrix: ExactMatrix
    prefactor: Cyclotomic2k

    def value(self) -> Cyclotomic2k:
        det = det_exact(self.matrix)
        if not isinstance(det, Cyclotomic2k):
            det = Cyclotomic2k.from_rational(self.prefactor.k, det)
        return self.prefactor * det.embed(self.prefactor.k)

    def integer_value(self) -> int:
        return self.value().to_integer()


@lru_cache(maxsize=None)
def ik_kernel() -> BivariateRationalGF:
    """
    1/((z+r)-(w+s)) - 1/((z+r)-q⁴(w+s)) at z = (1+i)/2, w = (i-1)/2, q⁴ = i.
    """
    i, z, w = _gaussian()
    first = 1 / ((z - w) * ONE + R - S)
    second = 1 / ((z - i * w) * ONE + R - i * S)
    return first - second


def ik_prefactor(n: int) -> Cyclotomic2k:
    """
    (-1)^(n(n-1)/2) · √2^(n²) · q^(-2n) at q = e^(iπ/8).
    """
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * Cyclotomic2k.sqrt2(3) ** (n * n) * Cyclotomic2k.zeta_power(3, -2 * n)


def build_ik_matrix(n: int) -> IkSystem:
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got n={n}")
    table = gf_coeff_table(ik_kernel(), n - 1, n - 1)
    matrix = ExactMatrix.from_function(n, n, lambda i, j: table[i, j])
    return IkSystem(matrix=matrix, prefactor=ik_prefactor(n))


def build_ik_refined_matrix(n: int, v: t.Union[int, Fraction]) -> IkSystem:
    """
    IK matrix with the last column deformed by the spectral parameter u = v².

    The value is Σ_ℓ Z_{;ℓ} ((1+u)/2)^(ℓ-1) · √u · ((u+i)(1-i)/2)^(n-ℓ), the partition function
    with the weights of the last column replaced by ((u+i)(1-i)/2, √2(1+u)/2, √u).
    """
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got n={n}")
    v = Fraction(v)
    if v == 0:
        raise ValueError("The deformation parameter v must be nonzero")
    u = v * v
    if u == 1:
        raise ValueError("u = 1 is the unrefined point, use build_ik_matrix")
    i, z, w = _gaussian()
    last_kernel = 1 / ((z - w * u) * ONE + R) - 1 / ((z - i * w * u) * ONE + R)
    last = gf_coeff_table(last_kernel, n - 1, 0).column(0)
    base = build_ik_matrix(n)
    matrix = base.matrix.with_column(n - 1, last)
    one = Cyclotomic2k.one(1)
    deformation = (
        (one / v)
        * (((1 + u) / 2) * (u + i) * (1 - i) / 2) ** n
        * ((1 + i) / (one * (1 - u))) ** (n - 1)
    )
    return IkSystem(matrix=matrix, prefactor=base.prefactor * deformation.embed(3))


def build_ik_absorbed_matrix(n: int) -> ExactMatrix:
    """
    Coefficients of (1-i)/(1-r-s-rs) + i/(1-rs): the IK matrix after its prefactor has been
    absorbed by row and column operations. Its determinant is the partition function itself.
    """
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got n={n}")
    i, _, _ = _gaussian()
    kernel = (1 - i) * schroder_kernel() + i * (1 / (ONE - R * S))
    table = gf_coeff_table(kernel, n - 1, n - 1)
    return ExactMatrix.from_function(n, n, lambda a, b: table[a, b])


def check_remarkable_identity(order: int = 12) -> bool:
    """
    Compare the coefficient tables, up to r^order s^order, of
    (1+ir)(1-s)((1-i)/(1-r-s-rs) + i/(1-rs)) and (1-r)(1-is)(1/(1-rs) + 2r/((1-r)(1-r-s-rs))).
    """
    i, _, _ = _gaussian()
    left = (ONE + i * R) * (ONE - S) * ((1 - i) * schroder_kernel() + i * (1 / (ONE - R * S)))
    right = (ONE - R) * (ONE - i * S) * t4_kernel()
    lhs = gf_coeff_table(left, order, order)
    rhs = gf_coeff_table(right, order, order)
    for a in range(order + 1):
        for b in range(order + 1):
            if lhs[a, b] != rhs[a, b]:
                logger.warning(f"Generating function identity fails at r^{a} s^{b}: {lhs[a, b]!r} != {rhs[a, b]!r}")
                return False
    return True

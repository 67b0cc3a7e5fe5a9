"""
Refined twenty-vertex counts against the refined six-vertex model with weights (1, √2, 1),
and the DWBC1 ↔ DWBC2 correspondence.
"""

import logging
import typing as t
from fractions import Fraction
from math import comb

from ice20v.exactalg.poly import PolyUni
from ice20v.icemodel.model import BoundaryKind, BoundarySpec
from ice20v.icemodel.report import Report
from ice20v.icemodel.sixvertex import count_6v, sqrt2_weights
from ice20v.icemodel.transfer import count_20v_refined, enumerate_configs

logger = logging.getLogger(__name__)

TAU = PolyUni([0, 1])

REFINEMENT_MAX_N = 7


def _coefficients(poly: PolyUni, n: int) -> t.List[t.Any]:
    return [poly.coeff(i) for i in range(n)]


def verify_refinement_theorem(n: int) -> Report:
    """
    Compare Ẑ^{BC1}(τ), Ẑ^{BC2}(τ) and Ẑ^{6V}(σ) as exact polynomials, coefficient by coefficient.
    """
    if not 1 <= n <= REFINEMENT_MAX_N:
        raise ValueError(f"Refinement check supports 1 <= n <= {REFINEMENT_MAX_N}, got n={n}")
    report = Report(title=f"refinement n={n}")
    bc1 = count_20v_refined(BoundarySpec.dwbc(BoundaryKind.DWBC1, n))
    bc2 = count_20v_refined(BoundarySpec.dwbc(BoundaryKind.DWBC2, n))
    six = count_6v(n, sqrt2_weights(), refined=True)
    six_at_zero = six.coeff(0)
    half_shift = (1 + TAU) * Fraction(1, 2)
    six_shifted = six.evaluate(half_shift)

    for index, (expected, actual) in enumerate(zip(_coefficients(bc2, n), _coefficients(six_shifted, n))):
        report.add(f"bc2-vs-6v:tau^{index}", expected, actual, detail="Ẑ^{BC2}(τ) = Ẑ^{6V}((1+τ)/2)")

    # 2τ·Ẑ^{BC2}(τ) = 2τ·Ẑ^{BC1}(0) + (1+τ)(Ẑ^{BC1}(τ) - Ẑ^{BC1}(0))
    bc1_at_zero = bc1.coeff(0)
    left = 2 * TAU * bc2
    right = 2 * TAU * bc1_at_zero + (1 + TAU) * (bc1 - bc1_at_zero)
    for index in range(n + 1):
        report.add(f"bc2-vs-bc1:tau^{index}", left.coeff(index), right.coeff(index))

    # (1+τ)·Ẑ^{BC1}(τ) = 2τ·Ẑ^{6V}((1+τ)/2) + (1-τ)·Ẑ^{6V}(0)
    left = (1 + TAU) * bc1
    right = 2 * TAU * six_shifted + (1 - TAU) * six_at_zero
    for index in range(n + 1):
        report.add(f"bc1-vs-6v:tau^{index}", left.coeff(index), right.coeff(index))

    report.add("bc1-binomial:1", bc1.coeff(0), six.coeff(0))
    for ell in range(2, n + 1):
        total: t.Any = 0
        for m in range(ell, n + 1):
            total = total + six.coeff(m - 1) * Fraction(comb(m - 2, ell - 2), 2 ** (m - 2))
        report.add(f"bc1-binomial:{ell}", bc1.coeff(ell - 1), total)
    for ell in range(1, n + 1):
        total = 0
        for m in range(ell, n + 1):
            total = total + six.coeff(m - 1) * Fraction(comb(m - 1, ell - 1), 2 ** (m - 1))
        report.add(f"bc2-binomial:{ell}", bc2.coeff(ell - 1), total)

    report.add("bc1-at-one", bc2(1), bc1(1))
    logger.info(f"Refinement n={n}: {'pass' if report.passed else 'FAIL'}")
    return report


BIJECTION_MAX_N = 5


def bijection_check(n: int) -> Report:
    """
    Rotating by 180 degrees and flipping every edge maps DWBC1 configurations onto DWBC2 ones.
    """
    if not 1 <= n <= BIJECTION_MAX_N:
        raise ValueError(f"Bijection check supports 1 <= n <= {BIJECTION_MAX_N}, got n={n}")
    report = Report(title=f"bijection n={n}")
    source_spec = BoundarySpec.dwbc(BoundaryKind.DWBC1, n)
    target_spec = BoundarySpec.dwbc(BoundaryKind.DWBC2, n)
    source = enumerate_configs(source_spec).configs
    target = enumerate_configs(target_spec).configs
    target_edges = target_spec.edges()
    images = [config.rotated_complement(target_spec.label) for config in source]
    report.add("image-valid", len(images), sum(1 for image in images if image.is_valid()))
    report.add("image-boundary", len(images), sum(1 for image in images if image.matches(target_edges)))
    image_keys = {(image.h, image.v, image.d) for image in images}
    target_keys = {(config.h, config.v, config.d) for config in target}
    report.add("injective", len(source), len(image_keys))
    report.add("onto", len(target_keys), len(image_keys & target_keys))
    report.add("cardinality", len(source), len(target))
    return report

"""
Bivariate rational generating functions in (r, s) and their power-series coefficients.
"""

import logging
import threading
import typing as t
from dataclasses import dataclass

from ice20v.exactalg.ops import is_unit, make_divider

logger = logging.getLogger(__name__)

Monomial = t.Tuple[int, int]


class BivariatePoly:
    """
    Sparse polynomial in r and s over an exact coefficient ring.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: t.Optional[t.Mapping[Monomial, t.Any]] = None):
        self.terms: t.Dict[Monomial, t.Any] = {}
        for monomial, coeff in (terms or {}).items():
            if coeff != 0:
                self.terms[monomial] = coeff

    @classmethod
    def constant(cls, value: t.Any) -> "BivariatePoly":
        return cls({(0, 0): value})

    @classmethod
    def r(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def s(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    def coefficient(self, i: int, j: int) -> t.Any:
        return self.terms.get((i, j), 0)

    def _coerce(self, other: t.Any) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return other
        return BivariatePoly.constant(other)

    def __add__(self, other):
        if isinstance(other, BivariateRationalGF):
            return NotImplemented
        other = self._coerce(other)
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return BivariatePoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, BivariateRationalGF):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, BivariateRationalGF):
            return NotImplemented
        other = self._coerce(other)
        terms: t.Dict[Monomial, t.Any] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return BivariatePoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = BivariatePoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other):
        return BivariateRationalGF(BivariatePoly.constant(1) * self, other)

    def __rtruediv__(self, other):
        return BivariateRationalGF(other, self)

    def __repr__(self):
        return f"BivariatePoly({self.terms!r})"


@dataclass(frozen=True)
class CoeffTable:
    """
    Coefficients of r^i s^j for 0 <= i <= max_i, 0 <= j <= max_j.
    """

    max_i: int
    max_j: int
    values: t.Tuple[t.Tuple[t.Any, ...], ...]

    def __getitem__(self, index: t.Tuple[int, int]) -> t.Any:
        i, j = index
        if not (0 <= i <= self.max_i and 0 <= j <= self.max_j):
            raise IndexError(f"Coefficient ({i}, {j}) outside the window {self.max_i}x{self.max_j}")
        return self.values[i][j]

    def column(self, j: int) -> t.List[t.Any]:
        return [self.values[i][j] for i in range(self.max_i + 1)]

    def restrict(self, max_i: int, max_j: int) -> "CoeffTable":
        return CoeffTable(max_i, max_j, tuple(tuple(row[: max_j + 1]) for row in self.values[: max_i + 1]))


class BivariateRationalGF:
    """
    numerator / denominator as a double power series in r and s.

    The denominator's constant term must be a unit of the coefficient ring. Coefficients are
    produced by exact series division; the cached window grows on demand.
    """

    def __init__(self, numerator: t.Any, denominator: t.Any = 1):
        self.numerator = numerator if isinstance(numerator, BivariatePoly) else BivariatePoly.constant(numerator)
        self.denominator = (
            denominator if isinstance(denominator, BivariatePoly) else BivariatePoly.constant(denominator)
        )
        constant = self.denominator.coefficient(0, 0)
        if constant == 0 or not is_unit(constant):
            raise ValueError(f"Denominator constant term {constant!r} is not invertible")
        self._table: t.Optional[CoeffTable] = None
        self._lock = threading.Lock()

    def _coerce(self, other: t.Any) -> "BivariateRationalGF":
        if isinstance(other, BivariateRationalGF):
            return other
        return BivariateRationalGF(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other.denominator.terms == self.denominator.terms:
            return BivariateRationalGF(self.numerator + other.numerator, self.denominator)
        return BivariateRationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return BivariateRationalGF(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return BivariateRationalGF(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def coefficients(self, max_i: int, max_j: int) -> CoeffTable:
        with self._lock:
            table = self._table
            if table is None or table.max_i < max_i or table.max_j < max_j:
                grow_i = max(max_i, table.max_i if table else 0)
                grow_j = max(max_j, table.max_j if table else 0)
                logger.debug(f"Expanding generating function to window {grow_i}x{grow_j}")
                table = self._expand(grow_i, grow_j)
                self._table = table
        return table.restrict(max_i, max_j)

    def _expand(self, max_i: int, max_j: int) -> CoeffTable:
        divide = make_divider(self.denominator.coefficient(0, 0))
        tail = [(a, b, c) for (a, b), c in self.denominator.terms.items() if (a, b) != (0, 0)]
        values: t.List[t.List[t.Any]] = [[0] * (max_j + 1) for _ in range(max_i + 1)]
        for i in range(max_i + 1):
            for j in range(max_j + 1):
                acc = self.numerator.coefficient(i, j)
                for a, b, c in tail:
                    if a <= i and b <= j:
                        previous = values[i - a][j - b]
                        if previous != 0:
                            acc = acc - c * previous
                values[i][j] = divide(acc)
        return CoeffTable(max_i, max_j, tuple(tuple(row) for row in values))


def gf_coeff_table(gf: BivariateRationalGF, max_i: int, max_j: int) -> CoeffTable:
    if max_i < 0 or max_j < 0:
        raise ValueError(f"Window must be nonnegative, got {max_i}x{max_j}")
    return gf.coefficients(max_i, max_j)


R = BivariatePoly.r()
S = BivariatePoly.s()
ONE = BivariatePoly.constant(1)

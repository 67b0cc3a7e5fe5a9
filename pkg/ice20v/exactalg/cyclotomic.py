"""
Exact arithmetic in the cyclotomic fields Q(ζ) with ζ a primitive 2^(k+1)-th root of unity.

Elements are stored as 2^k rational coefficients of 1, ζ, ..., ζ^(2^k - 1), reduced
modulo ζ^(2^k) + 1. The small fields used throughout the package:

- k=1: the Gaussian rationals, ζ = i.
- k=2: ζ = e^(iπ/4), carrying i = ζ² and √2 = ζ - ζ³.
- k=3: ζ = q = e^(iπ/8), carrying i = q⁴ and √2 = q² - q⁶.
"""

import cmath
import logging
import math
import typing as t
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

Rational = t.Union[int, Fraction]


class Cyclotomic2k:
    __slots__ = ("k", "coeffs")

    k: int
    coeffs: t.Tuple[Fraction, ...]

    def __init__(self, k: int, coeffs: t.Sequence[Rational]):
        if k < 1:
            raise ValueError(f"Cyclotomic order must satisfy k >= 1, got k={k}")
        size = 1 << k
        if len(coeffs) != size:
            raise ValueError(f"Cyclotomic element with k={k} needs {size} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic2k is immutable")

    # Constructors.

    @classmethod
    def from_rational(cls, k: int, value: Rational) -> "Cyclotomic2k":
        coeffs = [Fraction(0)] * (1 << k)
        coeffs[0] = Fraction(value)
        return cls(k, coeffs)

    @classmethod
    def zero(cls, k: int) -> "Cyclotomic2k":
        return cls.from_rational(k, 0)

    @classmethod
    def one(cls, k: int) -> "Cyclotomic2k":
        return cls.from_rational(k, 1)

    @classmethod
    def zeta_power(cls, k: int, exponent: int) -> "Cyclotomic2k":
        """
        ζ^e for any integer e, using ζ^(2^k) = -1.
        """
        size = 1 << k
        exponent %= 2 * size
        sign = 1
        if exponent >= size:
            exponent -= size
            sign = -1
        coeffs = [Fraction(0)] * size
        coeffs[exponent] = Fraction(sign)
        return cls(k, coeffs)

    @classmethod
    def imaginary_unit(cls, k: int) -> "Cyclotomic2k":
        return cls.zeta_power(k, 1 << (k - 1))

    @classmethod
    def sqrt2(cls, k: int) -> "Cyclotomic2k":
        """
        √2 = ζ₈ + ζ₈⁻¹, available from k=2 on.
        """
        if k < 2:
            raise ValueError(f"√2 is not an element of the cyclotomic field with k={k}")
        quarter = 1 << (k - 2)
        return cls.zeta_power(k, quarter) - cls.zeta_power(k, 3 * quarter)

    @classmethod
    def gaussian(cls, real: Rational, imag: Rational, k: int = 1) -> "Cyclotomic2k":
        return cls.from_rational(k, real) + cls.imaginary_unit(k) * Fraction(imag)

    # Inspection.

    @property
    def size(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"Not a rational number: {self!r}")
        return self.coeffs[0]

    def to_integer(self) -> int:
        value = self.to_fraction()
        if value.denominator != 1:
            raise ValueError(f"Not an integer: {value}")
        return value.numerator

    def to_complex(self) -> complex:
        """
        Numerical value, for display and tolerance checks outside the exact core only.
        """
        root = cmath.exp(1j * math.pi / self.size)
        return sum(float(c) * root**j for j, c in enumerate(self.coeffs) if c)

    def embed(self, k: int) -> "Cyclotomic2k":
        """
        Map into the field of order k >= self.k, sending ζ to ζ'^(2^(k - self.k)).
        """
        if k < self.k:
            raise ValueError(f"Cannot embed cyclotomic element of order k={self.k} into k={k}")
        if k == self.k:
            return self
        stride = 1 << (k - self.k)
        coeffs = [Fraction(0)] * (1 << k)
        for j, c in enumerate(self.coeffs):
            coeffs[j * stride] = c
        return Cyclotomic2k(k, coeffs)

    def inverse(self) -> "Cyclotomic2k":
        return cyclotomic_inverse(self)

    # Arithmetic.

    def _coerce(self, other: t.Any) -> t.Any:
        if isinstance(other, Cyclotomic2k):
            if other.k != self.k:
                raise TypeError(f"Ring mismatch: cyclotomic k={self.k} vs k={other.k}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic2k.from_rational(self.k, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic2k(self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic2k(self.k, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic2k(self.k, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic2k(self.k, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = self.size
        result = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                e = i + j
                if e >= size:
                    result[e - size] -= a * b
                else:
                    result[e] += a * b
        return Cyclotomic2k(self.k, result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("Cyclotomic division by zero")
            return Cyclotomic2k(self.k, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclotomic_inverse(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * cyclotomic_inverse(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = cyclotomic_inverse(self)
            exponent = -exponent
        result = Cyclotomic2k.one(self.k)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.k, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}*ζ")
            else:
                terms.append(f"{c}*ζ^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic2k(k={self.k}: {body})"


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def cyclotomic_inverse(x: Cyclotomic2k) -> Cyclotomic2k:
    """
    Invert a nonzero element by solving the linear system of multiplication by x.

    Column j of the system holds the coefficients of x·ζ^j; the solution c satisfies
    x · Σ c_j ζ^j = 1.
    """
    if x.is_zero():
        raise ZeroDivisionError("Cannot invert the zero cyclotomic element")
    if x.is_rational():
        return Cyclotomic2k.from_rational(x.k, 1 / x.coeffs[0])
    size = x.size
    columns = [(x * Cyclotomic2k.zeta_power(x.k, j)).coeffs for j in range(size)]
    rows = [[_to_qq(columns[j][i]) for j in range(size)] for i in range(size)]
    system = DomainMatrix(rows, (size, size), QQ)
    rhs = DomainMatrix([[QQ(1)]] + [[QQ(0)] for _ in range(size - 1)], (size, 1), QQ)
    solution = system.lu_solve(rhs).to_Matrix()
    result = Cyclotomic2k(x.k, [Fraction(int(entry.p), int(entry.q)) for entry in solution])
    if x * result != 1:  # pragma: no cover
        raise ArithmeticError(f"Cyclotomic inversion failed for {x!r}")
    return result

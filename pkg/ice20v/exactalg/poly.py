import typing as t
from fractions import Fraction

from ice20v.exactalg.cyclotomic import Cyclotomic2k
from ice20v.exactalg.eisenstein import EisensteinElt

SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")

_SCALARS = (int, Fraction, Cyclotomic2k, EisensteinElt)


def _divide_coefficient(a: t.Any, b: t.Any) -> t.Any:
    if isinstance(a, int) and isinstance(b, int):
        quotient, remainder = divmod(a, b)
        if remainder:
            raise ArithmeticError(f"Inexact integer division {a} / {b}")
        return quotient
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        value = Fraction(a) / Fraction(b)
        return value.numerator if value.denominator == 1 else value
    return a / b


class PolyUni:
    """
    Dense univariate polynomial, constant term first, over one of the exact scalar rings.
    """

    __slots__ = ("coeffs", "var")

    coeffs: t.Tuple[t.Any, ...]
    var: str

    def __init__(self, coeffs: t.Iterable[t.Any] = (), var: str = "tau"):
        items = list(coeffs)
        while items and items[-1] == 0:
            items.pop()
        self.coeffs = tuple(items)
        self.var = var

    @classmethod
    def constant(cls, value: t.Any, var: str = "tau") -> "PolyUni":
        return cls([value], var=var)

    @classmethod
    def monomial(cls, degree: int, coeff: t.Any = 1, var: str = "tau") -> "PolyUni":
        return cls([0] * degree + [coeff], var=var)

    @classmethod
    def from_exponents(cls, counts: t.Mapping[int, t.Any], var: str = "tau") -> "PolyUni":
        if not counts:
            return cls([], var=var)
        size = max(counts) + 1
        return cls([counts.get(e, 0) for e in range(size)], var=var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> t.Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def leading(self) -> t.Any:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other: t.Any) -> t.Any:
        if isinstance(other, PolyUni):
            if other.var != self.var:
                raise TypeError(f"Ring mismatch: polynomials in {self.var} and {other.var}")
            return other
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return PolyUni.constant(other, var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyUni([self.coeff(i) + other.coeff(i) for i in range(size)], var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolyUni([-c for c in self.coeffs], var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyUni([self.coeff(i) - other.coeff(i) for i in range(size)], var=self.var)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return PolyUni([c * other for c in self.coeffs], var=self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return PolyUni([], var=self.var)
        result: t.List[t.Any] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] = result[i + j] + a * b
        return PolyUni(result, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = PolyUni.constant(1, var=self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: "PolyUni") -> t.Tuple["PolyUni", "PolyUni"]:
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        remainder = list(self.coeffs)
        quotient: t.List[t.Any] = [0] * max(len(remainder) - len(divisor.coeffs) + 1, 0)
        lead = divisor.leading()
        for shift in range(len(quotient) - 1, -1, -1):
            top = remainder[shift + divisor.degree]
            if top == 0:
                continue
            factor = _divide_coefficient(top, lead)
            quotient[shift] = factor
            for j, c in enumerate(divisor.coeffs):
                remainder[shift + j] = remainder[shift + j] - factor * c
        return PolyUni(quotient, var=self.var), PolyUni(remainder, var=self.var)

    def exact_div(self, divisor: t.Any) -> "PolyUni":
        if not isinstance(divisor, (PolyUni,) + _SCALARS):
            raise TypeError(f"Cannot divide a polynomial by {type(divisor).__name__}")
        if not isinstance(divisor, PolyUni):
            return PolyUni([_divide_coefficient(c, divisor) for c in self.coeffs], var=self.var)
        if divisor.degree == 0:
            return self.exact_div(divisor.coeffs[0])
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise ArithmeticError(f"Inexact polynomial division, remainder {remainder}")
        return quotient

    def __truediv__(self, other):
        if not isinstance(other, (PolyUni,) + _SCALARS):
            return NotImplemented
        return self.exact_div(other)

    def __call__(self, value: t.Any) -> t.Any:
        return self.evaluate(value)

    def evaluate(self, value: t.Any) -> t.Any:
        """
        Horner evaluation at a scalar or at another polynomial (composition).
        """
        result: t.Any = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return other
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def format(self, symbol: t.Optional[str] = None) -> str:
        """
        Render as e.g. `122+182τ+106τ²+23τ³`.
        """
        symbol = symbol or {"tau": "τ", "sigma": "σ"}.get(self.var, self.var)
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            text = str(c)
            if e == 0:
                parts.append(text)
                continue
            power = symbol if e == 1 else symbol + str(e).translate(SUPERSCRIPTS)
            if text == "1":
                text = ""
            elif text == "-1":
                text = "-"
            elif not isinstance(c, (int, Fraction)):
                text = f"({text})"
            parts.append(text + power)
        rendered = "+".join(parts)
        return rendered.replace("+-", "-")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"PolyUni({list(self.coeffs)!r}, var={self.var!r})"


def as_poly(value: t.Any, var: str = "tau") -> PolyUni:
    if isinstance(value, PolyUni):
        return value
    return PolyUni.constant(value, var=var)

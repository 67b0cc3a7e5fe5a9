import typing as t
from fractions import Fraction

from ice20v.exactalg.cyclotomic import Cyclotomic2k

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1

Exponents = t.Tuple[int, ...]


def _check_exponents(exps: Exponents) -> Exponents:
    for e in exps:
        if not INT32_MIN <= e <= INT32_MAX:
            raise OverflowError(f"Laurent exponent {e} outside the signed 32-bit range")
    return exps


class LaurentMulti:
    """
    Sparse multivariate Laurent polynomial: exponent vectors, possibly negative, mapped to coefficients.
    """

    __slots__ = ("variables", "terms")

    variables: t.Tuple[str, ...]
    terms: t.Dict[Exponents, t.Any]

    def __init__(self, variables: t.Sequence[str], terms: t.Optional[t.Mapping[Exponents, t.Any]] = None):
        self.variables = tuple(variables)
        self.terms = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"Exponent vector {exps} does not match variables {self.variables}")
            if coeff != 0:
                self.terms[_check_exponents(exps)] = coeff

    @classmethod
    def constant(cls, variables: t.Sequence[str], value: t.Any) -> "LaurentMulti":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def generator(cls, variables: t.Sequence[str], name: str, power: int = 1) -> "LaurentMulti":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls(variables, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other: t.Any) -> t.Any:
        if isinstance(other, LaurentMulti):
            if other.variables != self.variables:
                raise TypeError(f"Ring mismatch: Laurent polynomials in {self.variables} and {other.variables}")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic2k)) and not isinstance(other, bool):
            return LaurentMulti.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentMulti(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentMulti(self.variables, {exps: -coeff for exps, coeff in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: t.Dict[Exponents, t.Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = _check_exponents(tuple(a + b for a, b in zip(e1, e2)))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return LaurentMulti(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("Only monomials can be raised to negative powers")
            ((exps, coeff),) = self.terms.items()
            inverse = LaurentMulti(self.variables, {tuple(-e for e in exps): _invert(coeff)})
            return inverse ** (-exponent)
        result = LaurentMulti.constant(self.variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, values: t.Mapping[str, t.Any]) -> t.Any:
        """
        Substitute ring elements for all variables; negative powers need invertible values.
        """
        missing = set(self.variables) - set(values)
        if missing:
            raise ValueError(f"Missing values for variables: {sorted(missing)}")
        total: t.Any = 0
        for exps, coeff in sorted(self.terms.items()):
            term = coeff
            for name, e in zip(self.variables, exps):
                if e:
                    base = values[name]
                    if isinstance(base, int) and e < 0:
                        base = Fraction(base)
                    term = term * base**e
            total = total + term
        return total

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in sorted(self.terms.items(), reverse=True):
            factors = [f"{name}^{e}" if e != 1 else name for name, e in zip(self.variables, exps) if e]
            monomial = "*".join(factors)
            if not monomial:
                parts.append(f"({coeff})")
            elif coeff == 1:
                parts.append(monomial)
            else:
                parts.append(f"({coeff})*{monomial}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentMulti({self.variables!r}, {self.terms!r})"


def _invert(coeff: t.Any) -> t.Any:
    if isinstance(coeff, int):
        if coeff not in (1, -1):
            raise ArithmeticError(f"Coefficient {coeff} is not invertible over the integers")
        return coeff
    return 1 / coeff


def laurent_is_zero(expression: LaurentMulti) -> bool:
    """
    True iff every coefficient vanishes; zero coefficients are never stored.
    """
    return expression.is_zero()

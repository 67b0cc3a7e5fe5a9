import typing as t
from dataclasses import dataclass


@dataclass(frozen=True)
class EisensteinElt:
    """
    The Eisenstein integer a + bω, with ω² + ω + 1 = 0.
    """

    a: int = 0
    b: int = 0

    @classmethod
    def omega(cls) -> "EisensteinElt":
        return cls(0, 1)

    @classmethod
    def omega2(cls) -> "EisensteinElt":
        return cls(-1, -1)

    def _coerce(self, other: t.Any) -> t.Any:
        if isinstance(other, EisensteinElt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return EisensteinElt(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinElt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinElt(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinElt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        ac = self.a * other.a
        bd = self.b * other.b
        return EisensteinElt(ac - bd, self.a * other.b + self.b * other.a - bd)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def conjugate(self) -> "EisensteinElt":
        # ω ↦ ω² = -1 - ω
        return EisensteinElt(self.a - self.b, -self.b)

    def in_integers(self) -> bool:
        return self.b == 0

    def in_omega_integers(self) -> bool:
        """
        Membership in ωℤ.
        """
        return self.a == 0

    def in_omega2_integers(self) -> bool:
        """
        Membership in ω²ℤ, the elements m·ω² = -m - mω.
        """
        return self.a == self.b

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}ω"
        return f"{self.a}{self.b:+d}ω"

"""
Exact coefficient fields: the rationals and prime fields GF(p)
"""

import random
import re
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import GF, QQ

from lpa_toolkit.services.exceptions import DivisionByZeroError, FieldMismatchError, ValidationError


_FRACTION_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


@dataclass(frozen=True)
class Field:
    """A field tag: characteristic 0 means the rationals, otherwise GF(p)"""
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not sympy.isprime(self.characteristic):
            raise ValidationError(f"GF({self.characteristic}) is not a field: modulus must be prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def selector(self) -> str:
        return "q" if self.is_rational else f"f{self.characteristic}"

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"GF({self.characteristic})"

    def _canonical(self, value: Fraction) -> Fraction | int:
        if self.is_rational:
            return value
        p = self.characteristic
        numerator = value.numerator % p
        denominator = value.denominator % p
        if denominator == 0:
            raise DivisionByZeroError(f"{value} has no image in {self}")
        return numerator * pow(denominator, -1, p) % p

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, FieldElement or 'p/q' literal into this field"""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"cannot use a scalar of {value.field} in {self}")
            return value
        if isinstance(value, str):
            match = _FRACTION_RE.match(value)
            if not match:
                raise ValidationError(f"not a scalar literal: {value!r}")
            numerator, denominator = match.groups()
            if denominator is not None and int(denominator) == 0:
                raise DivisionByZeroError(f"zero denominator in {value!r}")
            value = Fraction(int(numerator), int(denominator or 1))
        if isinstance(value, bool) or not isinstance(value, int | Fraction):
            raise ValidationError(f"not a scalar: {value!r}")
        return FieldElement(self, self._canonical(Fraction(value)))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def random_element(self, rng: random.Random, bound: int = 5) -> "FieldElement":
        """Random element; rationals get small numerators and denominators"""
        if self.is_rational:
            return self.element(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        return self.element(rng.randrange(self.characteristic))

    def random_nonzero(self, rng: random.Random, bound: int = 5) -> "FieldElement":
        while True:
            value = self.random_element(rng, bound)
            if value:
                return value

    def sympy_domain(self):
        return QQ if self.is_rational else GF(self.characteristic)


RATIONALS = Field(0)


def parse_field(selector: str) -> Field:
    """'q' selects the rationals, 'f<p>' selects GF(p)"""
    text = selector.strip().lower()
    if text in ("q", "qq", "rational", "rationals"):
        return RATIONALS
    match = re.fullmatch(r'f(\d+)', text)
    if not match:
        raise ValidationError(f"unknown field selector {selector!r}: use 'q' or 'f<p>'")
    modulus = int(match.group(1))
    if modulus < 2:
        raise ValidationError(f"GF({modulus}) is not a field: modulus must be prime")
    return Field(modulus)


@dataclass(frozen=True)
class FieldElement:
    """Exact scalar stored in canonical form: a reduced Fraction, or a residue 0 <= r < p"""
    field: Field
    value: Fraction | int

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field} scalars")
            return other
        return self.field.element(other)

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return self.field.element(Fraction(self.value) + Fraction(other.value))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return self.field.element(-Fraction(self.value))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return self.field.element(Fraction(self.value) * Fraction(other.value))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZeroError(f"0 has no inverse in {self.field}")
        if self.field.is_rational:
            return FieldElement(self.field, 1 / self.value)
        return FieldElement(self.field, pow(self.value, -1, self.field.characteristic))

    def __truediv__(self, other) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"{self.value} in {self.field}"

    def to_sympy(self):
        return self.field.sympy_domain().convert(
            sympy.Rational(self.value.numerator, self.value.denominator)
            if self.field.is_rational else self.value
        )


# Field-interface functions, for callers that prefer a functional style
def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def eq(x: FieldElement, y: FieldElement) -> bool:
    return x._coerce(y) == x


def zero(field: Field) -> FieldElement:
    return field.zero


def one(field: Field) -> FieldElement:
    return field.one

"""
Laurent polynomials K[x, x^-1] and matrices over them

Matrices are numpy object arrays of LaurentPolynomial entries, so the usual
numpy operators (+, @) apply.
"""

from collections.abc import Mapping

import numpy as np
from sympy import Poly, Rational, symbols

from lpa_toolkit.algebra.field import Field, FieldElement
from lpa_toolkit.services.exceptions import FieldMismatchError


X = symbols('x')


class LaurentPolynomial:
    """Finite sum of c_k x^k with k ranging over the integers"""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Mapping[int, object] | None = None):
        self.field = field
        cleaned = {}
        for exponent, coefficient in (terms or {}).items():
            value = field.element(coefficient)
            if value:
                cleaned[int(exponent)] = value
        self.terms: dict[int, FieldElement] = cleaned

    @classmethod
    def monomial(cls, field: Field, exponent: int, coefficient=1) -> "LaurentPolynomial":
        return cls(field, {exponent: coefficient})

    @classmethod
    def zero(cls, field: Field) -> "LaurentPolynomial":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "LaurentPolynomial":
        return cls(field, {0: 1})

    def _check(self, other: "LaurentPolynomial") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine Laurent polynomials over {self.field} and {other.field}")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        result = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            result[exponent] = result.get(exponent, self.field.zero) + coefficient
        return LaurentPolynomial(self.field, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            scalar = self.field.element(other)
            return LaurentPolynomial(self.field, {k: c * scalar for k, c in self.terms.items()})
        self._check(other)
        result: dict[int, FieldElement] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                result[i + j] = result.get(i + j, self.field.zero) + a * b
        return LaurentPolynomial(self.field, result)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def bar(self) -> "LaurentPolynomial":
        """The involution x -> x^-1"""
        return LaurentPolynomial(self.field, {-k: c for k, c in self.terms.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self.field, {e + k: c for e, c in self.terms.items()})

    @property
    def low_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def high_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def to_poly(self) -> Poly:
        """The polynomial x^-low * self, whose constant term is nonzero"""
        low = self.low_degree
        coefficients = [self.terms.get(k, self.field.zero) for k in range(self.high_degree, low - 1, -1)]
        if self.field.is_rational:
            return Poly([Rational(c.value.numerator, c.value.denominator) for c in coefficients] or [0],
                        X, domain=self.field.sympy_domain())
        return Poly([c.value for c in coefficients] or [0], X, modulus=self.field.characteristic)

    def divides(self, other: "LaurentPolynomial") -> bool:
        """True iff other lies in the principal ideal generated by self"""
        self._check(other)
        if not other:
            return True
        if not self:
            return False
        return other.to_poly().rem(self.to_poly()).is_zero

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponent in sorted(self.terms):
            coefficient = self.terms[exponent]
            power = "1" if exponent == 0 else ("x" if exponent == 1 else f"x^{exponent}")
            if exponent == 0:
                parts.append(str(coefficient))
            elif coefficient == self.field.one:
                parts.append(power)
            else:
                parts.append(f"{coefficient}*{power}")
        return " + ".join(parts)

    __repr__ = __str__


def in_principal_ideal(p: LaurentPolynomial, generator: LaurentPolynomial) -> bool:
    return generator.divides(p)


def zero_matrix(field: Field, n: int) -> np.ndarray:
    matrix = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            matrix[i, j] = LaurentPolynomial.zero(field)
    return matrix


def unit_matrix(field: Field, n: int, i: int, j: int, entry: LaurentPolynomial) -> np.ndarray:
    """entry placed at (i, j) (zero-based), zero elsewhere"""
    matrix = zero_matrix(field, n)
    matrix[i, j] = entry
    return matrix


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat, strict=True))


def matrix_bar(matrix: np.ndarray) -> np.ndarray:
    """Transpose and apply x -> x^-1 entrywise (the image of the bar involution)"""
    result = np.empty(matrix.shape, dtype=object)
    rows, cols = matrix.shape
    for i in range(rows):
        for j in range(cols):
            result[j, i] = matrix[i, j].bar()
    return result


def scale_matrix(matrix: np.ndarray, scalar) -> np.ndarray:
    result = np.empty(matrix.shape, dtype=object)
    for index, entry in np.ndenumerate(matrix):
        result[index] = entry * scalar
    return result

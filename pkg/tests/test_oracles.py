"""
Differential tests against independent models: Laurent polynomials for the
loop graph and matrix algebras for the line and the three-cycle
"""

import itertools

import numpy as np
import pytest
import sympy

from lpa_toolkit.algebra.element import Element, Monomial, monomial_product
from lpa_toolkit.algebra.field import RATIONALS
from lpa_toolkit.algebra.homomorphism import evaluate_monomial
from lpa_toolkit.algebra.laurent import LaurentPolynomial, in_principal_ideal, matrices_equal, scale_matrix
from lpa_toolkit.services.graph_transforms import cycle_iso
from lpa_toolkit.shared.expression_parser import parse_element
from tests.factories import paths_by_range, random_element, random_nonzero_element


X = sympy.symbols('x')


def laurent_expression(x: Element):
    """Independent model of L(R1): e^k (e*)^l goes to x^(k - l)"""
    total = sympy.Integer(0)
    for m, c in x.normalize().terms.items():
        total += sympy.Rational(c.value.numerator, c.value.denominator) * X ** (len(m.alpha) - len(m.beta))
    return sympy.expand(total)


def loop_entry(g, x: Element) -> LaurentPolynomial:
    return cycle_iso(g, x)[0, 0]


class LineMatrixModel:
    """u -e-> v -f-> w as 3x3 matrices: e -> E12, f -> E23, ghosts the transpose"""

    def __init__(self, g, field):
        self.g = g
        self.field = field
        self.index = {v: i for i, v in enumerate(g.vertices)}

    def unit(self, i: int, j: int) -> np.ndarray:
        matrix = self.zero()
        matrix[i, j] = self.field.one
        return matrix

    def zero(self) -> np.ndarray:
        matrix = np.empty((3, 3), dtype=object)
        for index in itertools.product(range(3), repeat=2):
            matrix[index] = self.field.zero
        return matrix

    def monomial(self, m) -> np.ndarray:
        return evaluate_monomial(
            m,
            lambda v: self.unit(self.index[v], self.index[v]),
            lambda e: self.unit(self.index[self.g.source(e)], self.index[self.g.range(e)]),
            lambda e: self.unit(self.index[self.g.range(e)], self.index[self.g.source(e)]),
            lambda a, b: a @ b,
        )

    def element(self, x: Element) -> np.ndarray:
        result = self.zero()
        for m, c in x.terms.items():
            result = result + scale_matrix(self.monomial(m), c)
        return result


def matrices_match(a: np.ndarray, b: np.ndarray) -> bool:
    return all(x == y for x, y in zip(a.flat, b.flat, strict=True))


class TestLoopGraphLaurentModel:
    """Test L(R1) against K[x, x^-1]"""

    @pytest.mark.slow
    def test_products_match_laurent_arithmetic(self, r1, field, rng):
        for _ in range(1000):
            x = random_element(r1, field, rng, max_length=3)
            y = random_element(r1, field, rng, max_length=3)
            assert loop_entry(r1, x * y) == loop_entry(r1, x) * loop_entry(r1, y)
            assert loop_entry(r1, x + y) == loop_entry(r1, x) + loop_entry(r1, y)

    @pytest.mark.slow
    def test_arithmetic_matches_sympy(self, r1, rng):
        """Test sums, differences, products and bar against sympy expressions in x and 1/x"""
        for _ in range(1000):
            x = random_element(r1, RATIONALS, rng, max_length=3)
            y = random_element(r1, RATIONALS, rng, max_length=3)
            fx, fy = laurent_expression(x), laurent_expression(y)
            assert sympy.expand(laurent_expression(x * y) - fx * fy) == 0
            assert sympy.expand(laurent_expression(x + y) - (fx + fy)) == 0
            assert sympy.expand(laurent_expression(x - y) - (fx - fy)) == 0
            assert sympy.expand(laurent_expression(x.bar()) - fx.subs(X, 1 / X)) == 0

    @pytest.mark.slow
    def test_bar_is_inversion(self, r1, field, rng):
        for _ in range(1000):
            x = random_element(r1, field, rng, max_length=3)
            assert loop_entry(r1, x.bar()) == loop_entry(r1, x).bar()
            assert x.bar().bar() == x

    def test_zero_exactly_when_polynomial_vanishes(self, r1, field, rng):
        for _ in range(50):
            x = random_nonzero_element(r1, field, rng, max_length=3)
            assert loop_entry(r1, x)

    def test_non_self_adjoint_ideal(self, r1, field):
        """Test that the ideal generated by v + e + e^3 does not contain its bar image"""
        p = loop_entry(r1, parse_element(r1, field, "v + e + e*e*e"))
        assert str(p) == "1 + x + x^3"
        assert not in_principal_ideal(p.bar(), p)

    def test_self_adjoint_ideal(self, r1, field):
        p = loop_entry(r1, parse_element(r1, field, "v + e"))
        assert in_principal_ideal(p.bar(), p)


class TestLineMatrixModel:
    """Test L(A3) against M_3(K) exhaustively on monomials"""

    def test_monomial_products(self, a3, field):
        model = LineMatrixModel(a3, field)
        grouped = paths_by_range(a3, 2)
        monomials = [
            Monomial(alpha, beta)
            for v in a3.vertices
            for alpha, beta in itertools.product(grouped[v], repeat=2)
        ]
        assert len(monomials) == 14
        for m1, m2 in itertools.product(monomials, repeat=2):
            product = monomial_product(a3, field, m1, m2)
            assert matrices_match(model.element(product), model.monomial(m1) @ model.monomial(m2))

    def test_injective_on_samples(self, a3, field, rng):
        model = LineMatrixModel(a3, field)
        zero = model.zero()
        for _ in range(100):
            x = random_nonzero_element(a3, field, rng)
            assert not matrices_match(model.element(x.normalize()), zero)

    def test_random_products(self, a3, field, rng):
        model = LineMatrixModel(a3, field)
        for _ in range(100):
            x, y = random_element(a3, field, rng), random_element(a3, field, rng)
            assert matrices_match(model.element(x * y), model.element(x) @ model.element(y))


class TestCycleMatrixModel:
    """Test L(C3) against M_3(K[x, x^-1])"""

    @pytest.mark.slow
    def test_products(self, c3, field, rng):
        for _ in range(500):
            x = random_element(c3, field, rng, max_length=4)
            y = random_element(c3, field, rng, max_length=4)
            assert matrices_equal(cycle_iso(c3, x * y), cycle_iso(c3, x) @ cycle_iso(c3, y))

    def test_injective_on_samples(self, c3, field, rng):
        for _ in range(50):
            x = random_nonzero_element(c3, field, rng, max_length=4)
            assert any(entry for entry in cycle_iso(c3, x).flat)

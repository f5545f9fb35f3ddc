"""
Tests for quotient and restriction graphs, desingularization and the cycle model
"""

import numpy as np
import pytest

from lpa_toolkit.algebra.element import edge_element, vertex_element
from lpa_toolkit.algebra.field import RATIONALS
from lpa_toolkit.algebra.graph import is_row_finite, singular_vertices, sinks
from lpa_toolkit.algebra.homomorphism import evaluate_monomial
from lpa_toolkit.algebra.laurent import (
    LaurentPolynomial,
    matrices_equal,
    matrix_bar,
    scale_matrix,
    unit_matrix,
    zero_matrix,
)
from lpa_toolkit.catalogue import catalogue_graph
from lpa_toolkit.services.exceptions import PreconditionError, ValidationError
from lpa_toolkit.services.graph_transforms import (
    cycle_iso,
    cycle_iso_inv,
    cycle_order,
    desingularization_embedding,
    desingularize,
    embed_restriction,
    frontier_vertices,
    hereditary_subgraph,
    quotient_graph,
    quotient_map,
    restriction_embedding,
    restriction_graph,
)
from lpa_toolkit.services.ideal_lattice import AdmissiblePair, admissible_pairs, in_graded_ideal, parse_pair, vH_element
from lpa_toolkit.shared.graph_format import save_graph
from tests.factories import random_element, random_nonzero_element


class TestQuotientGraph:
    """Test E minus (H,S)"""

    def test_example_quotient(self, example_graph):
        """Test the quotient by ({y,z}, {v}) with the primed copy of w"""
        q = quotient_graph(example_graph, parse_pair(example_graph, "H={y,z};S={v}"))
        assert save_graph(q).splitlines() == [
            "vertex u", "vertex v", "vertex x", "vertex w", "vertex w'",
            "edge uv u v", "edge ux u x", "edge uw u w", "edge vx v x", "edge wx w x", "edge wu w u",
            "edge uw' u w'",
        ]
        assert sinks(q) == ["x", "w'"]

    def test_quotient_by_zero_pair_is_identity(self, catalogue_name):
        g = catalogue_graph(catalogue_name)
        assert quotient_graph(g, AdmissiblePair(frozenset())) == g

    def test_quotient_by_everything_is_empty(self, r2):
        q = quotient_graph(r2, AdmissiblePair(frozenset({"v"})))
        assert q.vertices == ()

    def test_quotient_keeps_bundles_outside_h(self, example_graph):
        q = quotient_graph(example_graph, parse_pair(example_graph, "H={x,y,z}"))
        assert q.bundles == ()
        assert q.vertices == ("u", "v", "w", "w'")

    def test_quotient_map_is_multiplicative(self, example_graph, field, rng):
        for p in admissible_pairs(example_graph):
            phi = quotient_map(example_graph, field, p)
            for _ in range(10):
                x, y = random_element(example_graph, field, rng), random_element(example_graph, field, rng)
                assert phi(x * y) == phi(x) * phi(y)
                assert phi(x + y) == phi(x) + phi(y)

    def test_invalid_pair_rejected(self, example_graph):
        with pytest.raises(PreconditionError):
            quotient_graph(example_graph, AdmissiblePair(frozenset({"y", "z"}), frozenset({"x"})))


class TestRestrictionGraph:
    """Test E_(H,S) and its embedding into L_K(E)"""

    def test_example_restriction(self, example_graph):
        r = restriction_graph(example_graph, parse_pair(example_graph, "H={y,z};S={v}"))
        assert save_graph(r).splitlines() == [
            "vertex v", "vertex y", "vertex z", "edge yz y z", "edge zy z y", "bundle v y",
        ]

    def test_embedding_sends_s_to_gap_idempotents(self, example_graph):
        p = parse_pair(example_graph, "H={y,z};S={v}")
        phi = restriction_embedding(example_graph, RATIONALS, p)
        assert phi(vertex_element(phi.source, RATIONALS, "v")) == vH_element(example_graph, RATIONALS, p.H, "v")
        assert phi(edge_element(phi.source, RATIONALS, "yz")) == edge_element(example_graph, RATIONALS, "yz")

    def test_embedding_lands_in_ideal(self, example_graph, field, rng):
        for p in admissible_pairs(example_graph):
            source = restriction_graph(example_graph, p)
            if not source.vertices:
                continue
            for _ in range(10):
                x, y = random_element(source, field, rng), random_element(source, field, rng)
                image = embed_restriction(example_graph, p, x)
                assert in_graded_ideal(example_graph, field, p, image)
                assert embed_restriction(example_graph, p, x * y) == image * embed_restriction(example_graph, p, y)

    def test_embedding_is_injective_on_samples(self, example_graph, rng):
        p = parse_pair(example_graph, "H={y,z};S={v,w}")
        source = restriction_graph(example_graph, p)
        for _ in range(20):
            x = random_nonzero_element(source, RATIONALS, rng)
            assert not embed_restriction(example_graph, p, x).is_zero()

    def test_hereditary_subgraph(self, a3):
        sub = hereditary_subgraph(a3, {"w"})
        assert sub.vertices == ("w",)
        assert sub.edges == ()
        with pytest.raises(PreconditionError):
            hereditary_subgraph(a3, {"v"})


class TestDesingularization:
    """Test truncated desingularization"""

    def test_sink_grows_tail(self, a3):
        d = desingularize(a3, 2)
        assert d.vertices == ("u", "v", "w", "w#1", "w#2")
        assert [e.id for e in d.edges] == ["e", "f", "w#f1", "w#f2"]
        assert frontier_vertices(a3, 2) == ["w#2"]
        assert singular_vertices(d) == ["w#2"]

    def test_infinite_emitters_become_regular(self, example_graph):
        d = desingularize(example_graph, 3)
        assert is_row_finite(d)
        assert singular_vertices(d) == frontier_vertices(example_graph, 3)
        assert d.out_edges("v") == ("v#f1", "vx")
        assert d.source("wu") == "w#1"
        assert d.range("v~y#3") == "y"
        assert d.source("x~y#1") == "x"

    def test_depth_must_be_positive(self, a3):
        with pytest.raises(ValidationError):
            desingularize(a3, 0)

    def test_row_finite_sink_free_graph_unchanged(self, r2):
        assert desingularize(r2, 3) == r2

    def test_embedding_is_injective_homomorphism(self, example_graph, field, rng):
        phi = desingularization_embedding(example_graph, field, 3)
        for _ in range(20):
            x, y = random_element(example_graph, field, rng), random_element(example_graph, field, rng)
            assert phi(x * y) == phi(x) * phi(y)
            nonzero = random_nonzero_element(example_graph, field, rng)
            assert not phi(nonzero).is_zero()

    def test_embedding_needs_enough_depth(self, example_graph):
        with pytest.raises(PreconditionError):
            desingularization_embedding(example_graph, RATIONALS, 1)


class TestCycleModel:
    """Test the matrix model of a single cycle"""

    def test_cycle_order(self, c3):
        order = cycle_order(c3)
        assert order.vertices == ("v1", "v2", "v3")
        assert order.edges == ("e1", "e2", "e3")
        assert order.length == 3

    def test_cycle_order_rejects_other_graphs(self):
        for name in ("R2", "A3", "T", "L2"):
            with pytest.raises(PreconditionError):
                cycle_order(catalogue_graph(name))

    def test_generator_images(self, c3, field):
        one = LaurentPolynomial.one(field)
        x = LaurentPolynomial.monomial(field, 1)
        assert matrices_equal(cycle_iso(c3, edge_element(c3, field, "e1")), unit_matrix(field, 3, 0, 1, one))
        assert matrices_equal(cycle_iso(c3, edge_element(c3, field, "e3")), unit_matrix(field, 3, 2, 0, x))
        assert matrices_equal(cycle_iso(c3, vertex_element(c3, field, "v2")), unit_matrix(field, 3, 1, 1, one))

    def test_full_cycle_maps_to_x(self, c3, field):
        cycle = edge_element(c3, field, "e1") * edge_element(c3, field, "e2") * edge_element(c3, field, "e3")
        expected = unit_matrix(field, 3, 0, 0, LaurentPolynomial.monomial(field, 1))
        assert matrices_equal(cycle_iso(c3, cycle), expected)

    def test_inverse(self, c3, field, rng):
        for _ in range(30):
            x = random_element(c3, field, rng, max_length=3)
            assert cycle_iso_inv(c3, field, cycle_iso(c3, x)) == x

    def test_bar_is_conjugate_transpose(self, c3, field, rng):
        for _ in range(30):
            x = random_element(c3, field, rng)
            assert matrices_equal(cycle_iso(c3, x.bar()), matrix_bar(cycle_iso(c3, x)))

    def test_relation_to_uniform_edge_weights(self, c3, field, rng):
        """Test that x on every edge, twisted by diag(1, x, x^2) with x^3 -> x, gives the cycle model"""
        n = 3
        index = {v: i for i, v in enumerate(cycle_order(c3).vertices)}
        one = LaurentPolynomial.one(field)
        shift, back = LaurentPolynomial.monomial(field, 1), LaurentPolynomial.monomial(field, -1)

        def uniform(x):
            result = zero_matrix(field, n)
            for m, c in x.normalize().terms.items():
                image = evaluate_monomial(
                    m,
                    lambda v: unit_matrix(field, n, index[v], index[v], one),
                    lambda e: unit_matrix(field, n, index[c3.source(e)], (index[c3.source(e)] + 1) % n, shift),
                    lambda e: unit_matrix(field, n, (index[c3.source(e)] + 1) % n, index[c3.source(e)], back),
                    lambda a, b: a @ b,
                )
                result = result + scale_matrix(image, c)
            return result

        for _ in range(50):
            x = random_element(c3, field, rng, max_length=4)
            twisted = uniform(x)
            for (i, j), entry in np.ndenumerate(twisted):
                exponents = {k + i - j: c for k, c in entry.terms.items()}
                assert all(k % n == 0 for k in exponents)
                twisted[i, j] = LaurentPolynomial(field, {k // n: c for k, c in exponents.items()})
            assert matrices_equal(twisted, cycle_iso(c3, x))

"""
Tests for graphs, paths and vertex classification
"""

import pytest

from lpa_toolkit.algebra.graph import (
    Graph,
    Path,
    VertexClass,
    classify_vertex,
    compose,
    ensure_valid,
    is_row_finite,
    paths_of_length,
    reachable_from,
    regular_vertices,
    singular_vertices,
    sinks,
    to_networkx,
    validate,
)
from lpa_toolkit.services.exceptions import (
    CompositionError,
    GraphValidationError,
    NotFoundError,
    UnknownIdentifierError,
    UnknownVertexError,
)


class TestGraphStructure:
    """Test lookups and canonical ordering"""

    def test_build_keeps_given_order(self, example_graph):
        """Test that vertices and edges keep their declaration order"""
        assert example_graph.vertices == ("u", "v", "x", "y", "z", "w")
        assert [e.id for e in example_graph.edges][:3] == ["uv", "ux", "uw"]
        assert example_graph.index("w") == 5

    def test_out_and_in_edges(self, example_graph):
        """Test adjacency in canonical order"""
        assert example_graph.out_edges("u") == ("uv", "ux", "uw")
        assert example_graph.in_edges("x") == ("ux", "vx", "wx")
        assert example_graph.out_edges("x") == ()

    def test_successors_include_bundle_targets(self, example_graph):
        """Test that bundles count as edges for reachability"""
        assert example_graph.successors("v") == ["x", "y"]
        assert example_graph.successors("x") == ["y"]

    def test_unknown_vertex(self, r1):
        """Test that an unknown vertex raises a NotFoundError subclass"""
        with pytest.raises(UnknownVertexError):
            r1.out_edges("nowhere")
        assert issubclass(UnknownVertexError, NotFoundError)

    def test_unknown_edge(self, r1):
        """Test that an unknown edge id raises"""
        with pytest.raises(UnknownIdentifierError):
            r1.source("f")


class TestClassification:
    """Test regular, sink and infinite-emitter classification"""

    def test_example_classes(self, example_graph):
        """Test classification on the worked example"""
        assert classify_vertex(example_graph, "u") is VertexClass.REGULAR
        assert classify_vertex(example_graph, "v") is VertexClass.INFINITE_EMITTER
        assert classify_vertex(example_graph, "y") is VertexClass.REGULAR
        assert regular_vertices(example_graph) == ["u", "y", "z"]
        assert singular_vertices(example_graph) == ["v", "x", "w"]
        assert not is_row_finite(example_graph)

    def test_line_has_one_sink(self, a3):
        """Test the sink of the line graph"""
        assert sinks(a3) == ["w"]
        assert classify_vertex(a3, "w").is_singular
        assert is_row_finite(a3)

    def test_rose_is_regular(self, r2):
        """Test that a rose has no singular vertices"""
        assert singular_vertices(r2) == []


class TestPaths:
    """Test path construction and enumeration"""

    def test_compose(self, a3):
        """Test concatenation of composable paths"""
        path = compose(a3.edge_path("e"), a3.edge_path("f"))
        assert path == Path("u", ("e", "f"), "w")
        assert len(path) == 2
        assert str(path) == "e*f"

    def test_compose_rejects_gap(self, a3):
        """Test that non-composable paths raise"""
        with pytest.raises(CompositionError):
            compose(a3.edge_path("f"), a3.edge_path("e"))

    def test_graph_path_validates(self, a3):
        """Test path validation from a source vertex"""
        assert a3.path("u", ["e", "f"]).range == "w"
        with pytest.raises(CompositionError):
            a3.path("v", ["e"])

    def test_vertex_path(self):
        """Test that a vertex is a path of length zero"""
        p = Path.vertex("v")
        assert p.is_vertex
        assert len(p) == 0
        assert str(p) == "v"

    def test_paths_of_length_on_rose(self, r2):
        """Test lexicographic enumeration of paths"""
        paths = paths_of_length(r2, 2)
        assert [p.edges for p in paths] == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]

    def test_paths_of_length_zero(self, a3):
        """Test that length-zero paths are the vertices"""
        assert [p.source for p in paths_of_length(a3, 0)] == ["u", "v", "w"]

    def test_paths_of_length_from_vertex(self, c3):
        """Test enumeration restricted to a source"""
        paths = paths_of_length(c3, 3, "v2")
        assert len(paths) == 1
        assert paths[0].edges == ("e2", "e3", "e1")

    def test_paths_skip_bundles(self, example_graph):
        """Test that anonymous bundle edges never appear in paths"""
        assert paths_of_length(example_graph, 1, "x") == []


class TestReachability:
    """Test forward reachability and the networkx view"""

    def test_reachable_through_bundles(self, example_graph):
        """Test that bundles carry reachability"""
        assert reachable_from(example_graph, ["x"]) == {"x", "y", "z"}
        assert reachable_from(example_graph, ["u"]) == set(example_graph.vertices)

    def test_to_networkx_marks_bundles(self, example_graph):
        """Test that bundle representatives are flagged"""
        graph = to_networkx(example_graph)
        assert graph.number_of_nodes() == 6
        assert graph.number_of_edges() == 8 + 3
        bundle_edges = [(u, v) for u, v, data in graph.edges(data=True) if data["bundle"]]
        assert sorted(bundle_edges) == [("v", "y"), ("w", "y"), ("x", "y")]


class TestValidation:
    """Test structural invariants"""

    def test_catalogue_graph_is_valid(self, catalogue_name):
        """Test that every catalogue graph validates"""
        from lpa_toolkit.catalogue import catalogue_graph

        assert validate(catalogue_graph(catalogue_name)) == []

    def test_duplicate_and_dangling(self):
        """Test that violations are listed"""
        g = Graph.build(["v", "v"], [("e", "v", "w"), ("e", "v", "v")], {"v": []})
        violations = validate(g)
        assert "duplicate vertex v" in violations
        assert "duplicate edge e" in violations
        assert "edge e has unknown range w" in violations
        assert "bundle at v has no targets" in violations

    def test_edge_cannot_share_vertex_id(self):
        """Test that an edge named like a vertex is rejected"""
        g = Graph.build(["v", "w"], [("v", "v", "w")])
        assert validate(g) == ["edge v reuses a vertex identifier"]

    def test_ensure_valid_raises(self):
        """Test that ensure_valid carries the violation list"""
        g = Graph.build(["v"], [("e", "v", "w")])
        with pytest.raises(GraphValidationError) as exc_info:
            ensure_valid(g)
        assert exc_info.value.violations == ["edge e has unknown range w"]

"""
Graph analysis service used by the command line: resolves graph arguments and
turns library results into deterministic report lines
"""
from pathlib import Path as FilePath
from typing import TextIO

from lpa_toolkit.algebra.element import Element, format_element
from lpa_toolkit.algebra.grading import extract_ghost_polynomial
from lpa_toolkit.algebra.graph import Graph
from lpa_toolkit.catalogue import CATALOGUE, catalogue_graph
from lpa_toolkit.services.base_service import BaseService
from lpa_toolkit.services.exceptions import NotFoundError, handle_service_exceptions
from lpa_toolkit.services.graph_transforms import desingularize, quotient_graph, restriction_graph
from lpa_toolkit.services.ideal_lattice import (
    admissible_pairs,
    breaking_vertices,
    compare_lattice_formulas,
    format_pair,
    hereditary_closure,
    in_graded_ideal,
    ordered,
    pair_leq,
    parse_pair,
    saturate,
)
from lpa_toolkit.services.property_checkers import condition_K, condition_L, is_cofinal, is_simple
from lpa_toolkit.shared.dot_formatter import graph_to_dot, lattice_to_dot
from lpa_toolkit.shared.expression_parser import parse_element
from lpa_toolkit.shared.graph_format import GraphParser, save_graph
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _vertex_list(vertices: list[str]) -> str:
    return " ".join(vertices)


def _split_ids(text: str) -> list[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


class GraphAnalysisService(BaseService):
    """Every command's business logic; each method returns the lines to print"""

    @handle_service_exceptions(logger)
    def load_graph(self, source: str, stdin: TextIO | None = None) -> Graph:
        """A graph from '-' (stdin), a file path, or a catalogue name"""
        if source == "-":
            if stdin is None:
                raise NotFoundError("no standard input to read a graph from")
            return GraphParser().parse(stdin.read())
        if FilePath(source).is_file():
            self.logger.debug(f"Loading graph file {source}")
            return GraphParser().parse_file(source)
        if source.upper() in CATALOGUE:
            self.logger.debug(f"Using catalogue graph {source.upper()}")
            return catalogue_graph(source)
        raise NotFoundError(f"no graph file or catalogue graph named {source!r}")

    @handle_service_exceptions(logger)
    def validate(self, g: Graph) -> list[str]:
        return [f"valid: {len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.bundles)} bundles"]

    @handle_service_exceptions(logger)
    def props(self, g: Graph) -> list[str]:
        return [
            f"condition_L={_flag(condition_L(g))}",
            f"condition_K={_flag(condition_K(g))}",
            f"cofinal={_flag(is_cofinal(g))}",
            f"simple={_flag(is_simple(g).simple)}",
        ]

    @handle_service_exceptions(logger)
    def saturate(self, g: Graph, H: str) -> list[str]:
        return [_vertex_list(ordered(g, saturate(g, _split_ids(H))))]

    @handle_service_exceptions(logger)
    def closure(self, g: Graph, X: str) -> list[str]:
        return [_vertex_list(ordered(g, hereditary_closure(g, _split_ids(X))))]

    @handle_service_exceptions(logger)
    def breaking(self, g: Graph, H: str) -> list[str]:
        return [_vertex_list(ordered(g, breaking_vertices(g, _split_ids(H))))]

    @handle_service_exceptions(logger)
    def pairs(self, g: Graph) -> list[str]:
        return [format_pair(g, p) for p in admissible_pairs(g)]

    @handle_service_exceptions(logger)
    def lattice(self, g: Graph, dot: bool = False) -> list[str]:
        """Covering relations of the admissible-pair lattice, or its Hasse diagram in DOT"""
        pairs = admissible_pairs(g)
        if dot:
            lines = lattice_to_dot(g, pairs).splitlines()
        else:
            lines = []
            for p in pairs:
                above = [q for q in pairs if q != p and pair_leq(p, q)]
                covers = [q for q in above if not any(r != q and pair_leq(r, q) for r in above)]
                lines.extend(f"{format_pair(g, p)} < {format_pair(g, q)}" for q in covers)
        if self.config.lattice_diagnostics:
            lines.extend(f"diagnostic: {message}" for message in compare_lattice_formulas(g))
        return lines

    @handle_service_exceptions(logger)
    def quotient(self, g: Graph, pair: str) -> list[str]:
        return save_graph(quotient_graph(g, parse_pair(g, pair))).splitlines()

    @handle_service_exceptions(logger)
    def restrict(self, g: Graph, pair: str) -> list[str]:
        return save_graph(restriction_graph(g, parse_pair(g, pair))).splitlines()

    @handle_service_exceptions(logger)
    def desingularize(self, g: Graph, depth: int | None = None) -> list[str]:
        depth = self.config.desingularize_depth if depth is None else depth
        return save_graph(desingularize(g, depth)).splitlines()

    def _element(self, g: Graph, expression: str, selector: str | None) -> Element:
        return parse_element(g, self.field(selector), expression)

    @handle_service_exceptions(logger)
    def evaluate(self, g: Graph, expression: str, selector: str | None = None) -> list[str]:
        return [format_element(self._element(g, expression, selector))]

    @handle_service_exceptions(logger)
    def member(self, g: Graph, pair: str, expression: str, selector: str | None = None) -> list[str]:
        field = self.field(selector)
        x = parse_element(g, field, expression)
        return [_flag(in_graded_ideal(g, field, parse_pair(g, pair), x))]

    @handle_service_exceptions(logger)
    def ghost_extract(self, g: Graph, expression: str, selector: str | None = None) -> list[str]:
        extraction = extract_ghost_polynomial(self._element(g, expression, selector))
        return [
            f"ghost={format_element(extraction.ghost)}",
            f"vertex={extraction.vertex or '-'}",
            f"beta={extraction.beta if extraction.beta is not None else '-'}",
        ]

    @handle_service_exceptions(logger)
    def simple(self, g: Graph) -> list[str]:
        verdict = is_simple(g)
        lines = [f"simple={_flag(verdict.simple)}"]
        lines.extend(f"{name}={_flag(value)}" for name, value in verdict.criteria.items())
        lines.extend(f"{name}={_flag(value)}" for name, value in verdict.characterizations.items())
        return lines

    @handle_service_exceptions(logger)
    def dot(self, g: Graph) -> list[str]:
        return graph_to_dot(g).splitlines()

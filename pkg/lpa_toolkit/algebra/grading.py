"""
Z-grading, local units, the F_n / G_n filtration of the degree-zero part,
and ghost-polynomial extraction
"""

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from lpa_toolkit.algebra.element import (
    Element,
    Monomial,
    ghost_path_element,
    is_ghost_polynomial,
    monomial_element,
    vertex_element,
    zero_element,
)
from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import Graph, Path, is_row_finite, paths_of_length, sinks
from lpa_toolkit.services.exceptions import ConsistencyError, PreconditionError, ValidationError
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)


def degree_decompose(x: Element) -> dict[int, Element]:
    """Homogeneous components of x keyed by degree |alpha| - |beta|"""
    x = x.normalize()
    buckets: dict[int, dict[Monomial, object]] = defaultdict(dict)
    for monomial, coefficient in x.terms.items():
        buckets[monomial.degree][monomial] = coefficient
    return {
        degree: Element(x.graph, x.field, terms, normalized=True)
        for degree, terms in sorted(buckets.items())
    }


def homogeneous_component(x: Element, degree: int) -> Element:
    return degree_decompose(x).get(degree, zero_element(x.graph, x.field))


def is_homogeneous(x: Element) -> bool:
    return len(x.normalize().degrees()) <= 1


def local_unit(g: Graph, field: Field, n: int) -> Element:
    """t_n = v_1 + ... + v_n in canonical vertex order"""
    if not 1 <= n <= len(g.vertices):
        raise ValidationError(f"local unit index must lie in 1..{len(g.vertices)}, got {n}")
    return Element(g, field, {Monomial.vertex(v): 1 for v in g.vertices[:n]}, normalized=True)


def filtration_level(x: Element) -> int:
    """Least n with x in F_n = span{alpha beta* : |alpha| = |beta| <= n}"""
    x = x.normalize()
    if x.degrees() - {0}:
        raise PreconditionError(f"filtration level is defined on degree-0 elements only, got degrees {sorted(x.degrees())}")
    return max((len(m.alpha) for m in x.terms), default=0)


def matrix_paths(g: Graph, n: int, v: str) -> list[Path]:
    """{alpha in E^n : r(alpha) = v} in lexicographic order; these index gn_matrix_form"""
    g.check_vertex(v)
    return [p for p in paths_of_length(g, n) if p.range == v]


def _matrix_coefficients(x: Element, n: int, v: str) -> tuple[list[Path], np.ndarray]:
    g, field = x.graph, x.field
    paths = matrix_paths(g, n, v)
    vertex = Monomial.vertex(v)
    matrix = np.empty((len(paths), len(paths)), dtype=object)
    for i, alpha in enumerate(paths):
        left = ghost_path_element(g, field, alpha) * x
        for j, beta in enumerate(paths):
            corner = left * monomial_element(g, field, beta, Path.vertex(v))
            matrix[i, j] = corner.coefficient(vertex)
    return paths, matrix


def gn_matrix_to_element(g: Graph, field: Field, n: int, v: str, matrix: np.ndarray) -> Element:
    """sum_ij m_ij alpha_i alpha_j* over the indexing paths of gn_matrix_form"""
    paths = matrix_paths(g, n, v)
    if matrix.shape != (len(paths), len(paths)):
        raise ValidationError(f"expected a {len(paths)}x{len(paths)} matrix, got shape {matrix.shape}")
    terms = {}
    for i, alpha in enumerate(paths):
        for j, beta in enumerate(paths):
            if matrix[i, j]:
                terms[Monomial(alpha, beta)] = matrix[i, j]
    return Element(g, field, terms).normalize()


def gn_matrix_form(x: Element, n: int, v: str) -> np.ndarray:
    """
    Coefficient matrix of x in G_n(v) = span{alpha beta* : alpha, beta in E^n, r = v}.

    The entries are read off as alpha_i* x alpha_j = m_ij v, then the element is
    rebuilt from the matrix; x outside G_n(v) fails that check.
    """
    if n < 0:
        raise ValidationError("path length must be nonnegative")
    _, matrix = _matrix_coefficients(x, n, v)
    if gn_matrix_to_element(x.graph, x.field, n, v, matrix) != x:
        raise PreconditionError(f"element does not lie in the matrix component G_{n}({v})")
    return matrix


def in_G_n(x: Element, n: int) -> bool:
    """Membership in G_n = span{alpha beta* : alpha, beta in E^n}, the direct sum of the G_n(v)"""
    g, field = x.graph, x.field
    total = zero_element(g, field)
    for v in g.vertices:
        if not matrix_paths(g, n, v):
            continue
        _, matrix = _matrix_coefficients(x, n, v)
        total = total + gn_matrix_to_element(g, field, n, v, matrix)
    return total == x


@dataclass(frozen=True)
class GhostExtraction:
    """Nonzero ghost polynomial x = beta* v y in the ideal generated by y"""
    ghost: Element
    vertex: str | None
    beta: Path | None

    def factorization(self, y: Element) -> Element:
        """Recompute beta* . v . y; equals ghost when the witness is sound"""
        if self.vertex is None:
            return y
        g, field = y.graph, y.field
        return ghost_path_element(g, field, self.beta) * vertex_element(g, field, self.vertex) * y


def extract_ghost_polynomial(y: Element) -> GhostExtraction:
    g = y.graph
    if not is_row_finite(g) or sinks(g):
        raise PreconditionError("ghost extraction needs a row-finite graph without sinks")
    y = y.normalize()
    if y.is_zero():
        raise PreconditionError("ghost extraction needs a nonzero element")
    if is_ghost_polynomial(y):
        return GhostExtraction(y, None, None)

    for v in g.vertices:
        vy = vertex_element(g, y.field, v) * y
        if vy.is_zero():
            continue
        n = max(len(m.alpha) for m in vy.terms)
        for beta in paths_of_length(g, n, v):
            candidate = ghost_path_element(g, y.field, beta) * vy
            if candidate.is_zero():
                continue
            if not is_ghost_polynomial(candidate):
                raise ConsistencyError(f"beta* v y is not a ghost polynomial for beta = {beta}")
            logger.debug(f"ghost extraction: v={v}, n={n}, beta={beta}")
            return GhostExtraction(candidate, v, beta)
        raise ConsistencyError(f"no path of length {n} from {v} leaves v y nonzero")
    raise ConsistencyError("every vertex annihilates a nonzero element")

"""
Graph transforms attached to graded ideals and singular vertices:
quotient graphs E minus (H,S), restriction graphs E_(H,S), truncated
desingularizations, and the matrix model of a single cycle.

Naming: primed copies get a trailing apostrophe (w', uw'); tail vertices
of a singular vertex v are v#1, v#2, ...
"""

from dataclasses import dataclass
from functools import reduce

import numpy as np

from lpa_toolkit.algebra.element import (
    Element,
    Monomial,
    edge_element,
    ghost_element,
    vertex_element,
    zero_element,
)
from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import (
    Edge,
    Graph,
    Path,
    VertexClass,
    classify_vertex,
    ensure_valid,
)
from lpa_toolkit.algebra.homomorphism import GeneratorMap, evaluate_monomial
from lpa_toolkit.algebra.laurent import LaurentPolynomial, scale_matrix, unit_matrix, zero_matrix
from lpa_toolkit.services.exceptions import PreconditionError, ValidationError
from lpa_toolkit.services.ideal_lattice import (
    AdmissiblePair,
    breaking_vertices,
    is_hereditary,
    make_pair,
    ordered,
    vertex_set,
    vH_element,
)
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)


def primed(name: str) -> str:
    return f"{name}'"


def tail_vertex(v: str, k: int) -> str:
    return v if k == 0 else f"{v}#{k}"


def _checked(g: Graph, p: AdmissiblePair) -> AdmissiblePair:
    return make_pair(g, p.H, p.S)


# -- quotient ------------------------------------------------------------------

def quotient_graph(g: Graph, p: AdmissiblePair) -> Graph:
    """E minus (H,S): drop H, and add a primed sink v' for each v in B_H \\ S"""
    p = _checked(g, p)
    H = p.H
    missing = ordered(g, breaking_vertices(g, H) - p.S)
    missing_set = set(missing)

    vertices = [v for v in g.vertices if v not in H]
    vertices.extend(primed(v) for v in missing)

    edges = [e for e in g.edges if e.range not in H]
    edges.extend(Edge(primed(e.id), e.source, primed(e.range)) for e in g.edges if e.range in missing_set)

    bundles = {}
    for v, targets in g.bundles:
        if v in H:
            continue
        kept = [t for t in targets if t not in H]
        kept.extend(primed(t) for t in targets if t in missing_set)
        if kept:
            bundles[v] = kept
    return ensure_valid(Graph.build(vertices, edges, bundles))


def quotient_map(g: Graph, field: Field, p: AdmissiblePair) -> GeneratorMap:
    """The surjection L_K(E) -> L_K(E minus (H,S)) with kernel I_(H,S)"""
    p = _checked(g, p)
    target = quotient_graph(g, p)
    missing = breaking_vertices(g, p.H) - p.S
    zero = zero_element(target, field)

    vertex_images = {}
    for v in g.vertices:
        if v in p.H:
            vertex_images[v] = zero
        elif v in missing:
            vertex_images[v] = vertex_element(target, field, v) + vertex_element(target, field, primed(v))
        else:
            vertex_images[v] = vertex_element(target, field, v)

    edge_images, ghost_images = {}, {}
    for e in g.edges:
        if e.range in p.H:
            edge_images[e.id] = ghost_images[e.id] = zero
        elif e.range in missing:
            edge_images[e.id] = edge_element(target, field, e.id) + edge_element(target, field, primed(e.id))
            ghost_images[e.id] = ghost_element(target, field, e.id) + ghost_element(target, field, primed(e.id))
        else:
            edge_images[e.id] = edge_element(target, field, e.id)
            ghost_images[e.id] = ghost_element(target, field, e.id)
    return GeneratorMap(g, target, field, vertex_images, edge_images, ghost_images)


def quotient_hom(g: Graph, p: AdmissiblePair, x: Element) -> Element:
    return quotient_map(g, x.field, p)(x)


# -- restriction -----------------------------------------------------------------

def _restriction(g: Graph, H: frozenset, S: frozenset) -> Graph:
    keep = H | S
    vertices = [v for v in g.vertices if v in keep]
    edges = [e for e in g.edges if e.source in H or (e.source in S and e.range in H)]
    bundles = {}
    for v, targets in g.bundles:
        if v in H:
            bundles[v] = list(targets)
        elif v in S:
            inside = [t for t in targets if t in H]
            if inside:
                bundles[v] = inside
    return ensure_valid(Graph.build(vertices, edges, bundles))


def restriction_graph(g: Graph, p: AdmissiblePair) -> Graph:
    """E_(H,S): vertices H u S, edges out of H, and edges from S into H"""
    p = _checked(g, p)
    return _restriction(g, p.H, p.S)


def hereditary_subgraph(g: Graph, X) -> Graph:
    """
    E_X for a hereditary X. X need not be saturated: the ideal generated by X
    equals I_(saturation of X, empty), and L_K(E_X) is Morita equivalent to it.
    """
    X = vertex_set(g, X)
    if not is_hereditary(g, X):
        raise PreconditionError(f"{{{','.join(ordered(g, X))}}} is not hereditary")
    return _restriction(g, X, frozenset())


def restriction_embedding(g: Graph, field: Field, p: AdmissiblePair) -> GeneratorMap:
    """L_K(E_(H,S)) -> L_K(E): identity on vertices and edges, except v in S goes to v^H"""
    p = _checked(g, p)
    source = _restriction(g, p.H, p.S)
    vertex_images = {
        v: vH_element(g, field, p.H, v) if v in p.S else vertex_element(g, field, v)
        for v in source.vertices
    }
    edge_images = {e.id: edge_element(g, field, e.id) for e in source.edges}
    ghost_images = {e.id: ghost_element(g, field, e.id) for e in source.edges}
    return GeneratorMap(source, g, field, vertex_images, edge_images, ghost_images)


def embed_restriction(g: Graph, p: AdmissiblePair, x: Element) -> Element:
    return restriction_embedding(g, x.field, p)(x)


# -- desingularization -------------------------------------------------------------

def desingularize(g: Graph, depth: int) -> Graph:
    """
    Truncated desingularization. A sink w grows the tail w -> w#1 -> ... -> w#depth.
    An infinite emitter v grows the tail v -> v#1 -> ... -> v#depth and loses its
    own edges; its j-th outgoing edge is re-attached at v#(j-1). Explicit edges
    come first in canonical order and keep their ids; bundle targets follow
    cyclically as new edges v~t#j. Edges beyond the frontier v#depth are dropped.
    """
    if depth < 1:
        raise ValidationError(f"desingularization depth must be at least 1, got {depth}")

    tails: list[str] = []
    edges: list[Edge] = []
    for e in g.edges:
        if classify_vertex(g, e.source) is VertexClass.REGULAR:
            edges.append(e)

    for v in g.vertices:
        kind = classify_vertex(g, v)
        if kind is VertexClass.REGULAR:
            continue
        for k in range(1, depth + 1):
            tails.append(tail_vertex(v, k))
            edges.append(Edge(f"{v}#f{k}", tail_vertex(v, k - 1), tail_vertex(v, k)))
        if kind is VertexClass.SINK:
            continue

        explicit = g.out_edges(v)
        targets = g.bundle_targets(v)
        if len(explicit) > depth:
            logger.debug(f"desingularize: {len(explicit) - depth} edges of {v} lie beyond depth {depth}")
        for j in range(1, depth + 1):
            source = tail_vertex(v, j - 1)
            if j <= len(explicit):
                edges.append(Edge(explicit[j - 1], source, g.range(explicit[j - 1])))
            else:
                t = targets[(j - len(explicit) - 1) % len(targets)]
                edges.append(Edge(f"{v}~{t}#{j}", source, t))

    return ensure_valid(Graph.build(list(g.vertices) + tails, edges))


def frontier_vertices(g: Graph, depth: int) -> list[str]:
    """Tail ends of the truncated desingularization, the only singular vertices it keeps"""
    return [tail_vertex(v, depth) for v in g.vertices if classify_vertex(g, v).is_singular]


def desingularization_embedding(g: Graph, field: Field, depth: int) -> GeneratorMap:
    """
    L_K(E) -> L_K(F) for the truncated desingularization F: the i-th explicit
    edge e of a singular vertex goes to the path f_1 ... f_(i-1) e.
    """
    target = desingularize(g, depth)
    vertex_images = {v: vertex_element(target, field, v) for v in g.vertices}
    edge_images, ghost_images = {}, {}
    for e in g.edges:
        if classify_vertex(g, e.source) is VertexClass.REGULAR:
            edge_images[e.id] = edge_element(target, field, e.id)
            ghost_images[e.id] = ghost_element(target, field, e.id)
            continue
        position = g.out_edges(e.source).index(e.id) + 1
        if position > depth:
            raise PreconditionError(f"edge {e.id} lies beyond desingularization depth {depth}")
        route = [f"{e.source}#f{k}" for k in range(1, position)] + [e.id]
        path = target.path(e.source, route)
        image = Element(target, field, {Monomial(path, Path.vertex(path.range)): 1}, normalized=True)
        edge_images[e.id] = image
        ghost_images[e.id] = image.bar()
    return GeneratorMap(g, target, field, vertex_images, edge_images, ghost_images)


# -- single cycles ------------------------------------------------------------------

@dataclass(frozen=True)
class CycleOrder:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


def cycle_order(g: Graph) -> CycleOrder:
    """v_1, ..., v_n and e_1, ..., e_n with s(e_i) = v_i, starting at the first vertex"""
    if g.bundles or not g.vertices or len(g.edges) != len(g.vertices):
        raise PreconditionError("graph is not a single closed path")
    if any(len(g.out_edges(v)) != 1 or len(g.in_edges(v)) != 1 for v in g.vertices):
        raise PreconditionError("graph is not a single closed path")
    vertices, edges = [], []
    v = g.vertices[0]
    while v not in vertices:
        vertices.append(v)
        e = g.out_edges(v)[0]
        edges.append(e)
        v = g.range(e)
    if len(vertices) != len(g.vertices):
        raise PreconditionError("graph is a union of several closed paths")
    return CycleOrder(tuple(vertices), tuple(edges))


def cycle_iso(g: Graph, x: Element) -> np.ndarray:
    """
    L_K(E) -> M_n(K[x, x^-1]) for a single cycle of length n:
    v_i -> E_ii, e_i -> E_i,i+1 (i < n), e_n -> x E_n1, e_i* the transpose with x^-1.
    The full cycle at v_1 goes to x E_11.

    Putting x on every edge instead (e_i -> x E_i,i+1) sends alpha beta* to
    x^(|alpha| - |beta|) E_ij, which only reaches M_n(K[x^n, x^-n]) up to a
    diagonal twist. Conjugating that map by diag(1, x, ..., x^(n-1)) leaves
    exponents divisible by n, and substituting x^n -> x gives this map.
    """
    order = cycle_order(g)
    n = order.length
    field = x.field
    index = {v: i for i, v in enumerate(order.vertices)}
    one = LaurentPolynomial.one(field)
    shift = LaurentPolynomial.monomial(field, 1)
    inverse_shift = LaurentPolynomial.monomial(field, -1)

    def vertex_image(v):
        return unit_matrix(field, n, index[v], index[v], one)

    def edge_image(e):
        i = index[g.source(e)]
        return unit_matrix(field, n, i, (i + 1) % n, shift if i == n - 1 else one)

    def ghost_image(e):
        i = index[g.source(e)]
        return unit_matrix(field, n, (i + 1) % n, i, inverse_shift if i == n - 1 else one)

    result = zero_matrix(field, n)
    for monomial, coefficient in x.normalize().terms.items():
        image = evaluate_monomial(monomial, vertex_image, edge_image, ghost_image, lambda a, b: a @ b)
        result = result + scale_matrix(image, coefficient)
    return result


def cycle_iso_inv(g: Graph, field: Field, matrix: np.ndarray) -> Element:
    """E_ij x^m -> u_i* c^m u_j, with u_i = e_1 ... e_(i-1) and c the full cycle at v_1"""
    order = cycle_order(g)
    n = order.length
    if matrix.shape != (n, n):
        raise ValidationError(f"expected a {n}x{n} matrix, got shape {matrix.shape}")
    start = order.vertices[0]
    prefixes = [g.path(start, order.edges[:i]) for i in range(n)]
    cycle = g.path(start, order.edges)

    def as_real(path: Path) -> Element:
        return Element(g, field, {Monomial(path, Path.vertex(path.range)): 1}, normalized=True)

    def cycle_power(m: int) -> Element:
        if m == 0:
            return vertex_element(g, field, start)
        base = as_real(cycle) if m > 0 else as_real(cycle).bar()
        return reduce(lambda a, b: a * b, [base] * abs(m))

    result = zero_element(g, field)
    for (i, j), entry in np.ndenumerate(matrix):
        for m, coefficient in entry.terms.items():
            term = as_real(prefixes[i]).bar() * cycle_power(m) * as_real(prefixes[j])
            result = result + term.scale(coefficient)
    return result.normalize()

"""
Elements of the Leavitt path algebra L_K(E) as finite K-linear combinations of
monomials alpha beta*.

Normal form: for every regular vertex v the first out-edge in canonical order
is its special edge e_v, and (CK2) is oriented as the rewrite

    alpha' e_v (beta' e_v)*  ->  alpha' beta'* - sum_{f in s^-1(v), f != e_v} alpha' f (beta' f)*

A monomial is reduced when its two paths do not both end in the same special
edge. Reduced monomials form a basis of L_K(E), so two elements are equal
exactly when their difference normalizes to the empty sum.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from lpa_toolkit.algebra.field import Field, FieldElement
from lpa_toolkit.algebra.graph import Graph, Path, VertexClass, classify_vertex, compose
from lpa_toolkit.services.exceptions import CompositionError, FieldMismatchError, GraphMismatchError
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)


@dataclass(frozen=True)
class Monomial:
    """alpha beta* with r(alpha) = r(beta)"""
    alpha: Path
    beta: Path

    def __post_init__(self):
        if self.alpha.range != self.beta.range:
            raise CompositionError(
                f"monomial paths must share their range: {self.alpha} ends at {self.alpha.range}, "
                f"{self.beta} ends at {self.beta.range}"
            )

    @classmethod
    def vertex(cls, v: str) -> "Monomial":
        p = Path.vertex(v)
        return cls(p, p)

    @property
    def degree(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def is_vertex(self) -> bool:
        return self.alpha.is_vertex and self.beta.is_vertex

    @property
    def is_ghost(self) -> bool:
        return self.alpha.is_vertex

    @property
    def is_real(self) -> bool:
        return self.beta.is_vertex

    def bar(self) -> "Monomial":
        return Monomial(self.beta, self.alpha)


@dataclass(frozen=True)
class SpecialEdgeSelection:
    """One chosen out-edge e_v per regular vertex v"""
    edges: Mapping[str, str]

    def __hash__(self):
        return hash(tuple(self.edges.items()))

    def special_edge(self, v: str) -> str | None:
        return self.edges.get(v)


@lru_cache(maxsize=256)
def special_edge_selection(g: Graph) -> SpecialEdgeSelection:
    """First out-edge in canonical order at every regular vertex"""
    selection = {
        v: g.out_edges(v)[0]
        for v in g.vertices
        if classify_vertex(g, v) is VertexClass.REGULAR
    }
    return SpecialEdgeSelection(selection)


def _strip_prefix(prefix: Path, path: Path) -> Path | None:
    """The path p' with path = prefix p', or None"""
    if prefix.source != path.source or len(prefix) > len(path):
        return None
    if path.edges[:len(prefix)] != prefix.edges:
        return None
    return Path(prefix.range, path.edges[len(prefix):], path.range)


def _product(m1: Monomial, m2: Monomial) -> Monomial | None:
    """(alpha beta*)(gamma delta*) following the four-case multiplication rule"""
    alpha, beta = m1.alpha, m1.beta
    gamma, delta = m2.alpha, m2.beta
    rest = _strip_prefix(beta, gamma)
    if rest is not None:
        return Monomial(compose(alpha, rest), delta)
    rest = _strip_prefix(gamma, beta)
    if rest is not None:
        return Monomial(alpha, compose(delta, rest))
    return None


def _reduce(g: Graph, terms: Mapping[Monomial, FieldElement], field: Field) -> dict[Monomial, FieldElement]:
    selection = special_edge_selection(g)
    result: dict[Monomial, FieldElement] = {}
    work = list(terms.items())
    rewrites = 0
    while work:
        monomial, coefficient = work.pop()
        alpha, beta = monomial.alpha, monomial.beta
        if alpha.edges and beta.edges and alpha.edges[-1] == beta.edges[-1]:
            last = alpha.edges[-1]
            v = g.source(last)
            if selection.special_edge(v) == last:
                rewrites += 1
                shorter_alpha = Path(alpha.source, alpha.edges[:-1], v)
                shorter_beta = Path(beta.source, beta.edges[:-1], v)
                work.append((Monomial(shorter_alpha, shorter_beta), coefficient))
                for sibling in g.out_edges(v):
                    if sibling == last:
                        continue
                    target = g.range(sibling)
                    work.append((
                        Monomial(Path(alpha.source, shorter_alpha.edges + (sibling,), target),
                                 Path(beta.source, shorter_beta.edges + (sibling,), target)),
                        -coefficient,
                    ))
                continue
        result[monomial] = result.get(monomial, field.zero) + coefficient
    if rewrites:
        logger.debug(f"normalize applied {rewrites} CK2 rewrites")
    return {m: c for m, c in result.items() if c}


class Element:
    """Immutable finite sum of lambda_k alpha_k beta_k* over a fixed graph and field"""

    __slots__ = ("graph", "field", "terms", "normalized")

    def __init__(self, graph: Graph, field: Field,
                 terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] | None = None,
                 normalized: bool = False):
        self.graph = graph
        self.field = field
        merged: dict[Monomial, FieldElement] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for monomial, coefficient in items:
            merged[monomial] = merged.get(monomial, field.zero) + field.element(coefficient)
        self.terms: dict[Monomial, FieldElement] = {m: c for m, c in merged.items() if c}
        self.normalized = normalized or not self.terms

    # -- construction helpers -------------------------------------------------

    def _like(self, terms, normalized: bool = False) -> "Element":
        return Element(self.graph, self.field, terms, normalized)

    def _check(self, other: "Element") -> None:
        if other.graph is not self.graph and other.graph != self.graph:
            raise GraphMismatchError("elements belong to different graphs")
        if other.field != self.field:
            raise FieldMismatchError(f"elements over {self.field} and {other.field} cannot be combined")

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        merged = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            merged[monomial] = merged.get(monomial, self.field.zero) + coefficient
        return self._like(merged)

    def __neg__(self) -> "Element":
        return self._like({m: -c for m, c in self.terms.items()}, self.normalized)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, scalar) -> "Element":
        value = self.field.element(scalar)
        return self._like({m: c * value for m, c in self.terms.items()}, self.normalized)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, int | Fraction | FieldElement):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, int | Fraction | FieldElement):
            return self.scale(other)
        return NotImplemented

    def normalize(self) -> "Element":
        if self.normalized:
            return self
        return self._like(_reduce(self.graph, self.terms, self.field), normalized=True)

    def is_zero(self) -> bool:
        return not self.normalize().terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    __hash__ = None

    def bar(self) -> "Element":
        return self._like({m.bar(): c for m, c in self.terms.items()})

    # -- inspection -----------------------------------------------------------

    def monomials(self) -> list[Monomial]:
        """Monomials in canonical order"""
        return sorted(self.terms, key=self._monomial_key)

    def items(self) -> Iterator[tuple[Monomial, FieldElement]]:
        for monomial in self.monomials():
            yield monomial, self.terms[monomial]

    def coefficient(self, monomial: Monomial) -> FieldElement:
        return self.terms.get(monomial, self.field.zero)

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def _monomial_key(self, m: Monomial) -> tuple:
        return (len(m.alpha) + len(m.beta), self.graph.path_key(m.alpha), self.graph.path_key(m.beta))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r} over {self.field})"


# -- constructors -------------------------------------------------------------

def vertex_element(g: Graph, field: Field, v: str) -> Element:
    g.check_vertex(v)
    return Element(g, field, {Monomial.vertex(v): 1}, normalized=True)


def edge_element(g: Graph, field: Field, edge_id: str) -> Element:
    p = g.edge_path(edge_id)
    return Element(g, field, {Monomial(p, Path.vertex(p.range)): 1}, normalized=True)


def ghost_element(g: Graph, field: Field, edge_id: str) -> Element:
    p = g.edge_path(edge_id)
    return Element(g, field, {Monomial(Path.vertex(p.range), p): 1}, normalized=True)


def monomial_element(g: Graph, field: Field, alpha: Path, beta: Path, coefficient=1) -> Element:
    return Element(g, field, {Monomial(alpha, beta): coefficient})


def path_element(g: Graph, field: Field, path: Path) -> Element:
    return monomial_element(g, field, path, Path.vertex(path.range))


def ghost_path_element(g: Graph, field: Field, path: Path) -> Element:
    return monomial_element(g, field, Path.vertex(path.range), path)


def zero_element(g: Graph, field: Field) -> Element:
    return Element(g, field, normalized=True)


def unit_element(g: Graph, field: Field) -> Element:
    """1 = sum of all vertices (finite vertex sets make L_K(E) unital)"""
    return Element(g, field, {Monomial.vertex(v): 1 for v in g.vertices}, normalized=True)


# -- module-level operations ------------------------------------------------

def monomial_product(g: Graph, field: Field, m1: Monomial, m2: Monomial) -> Element:
    """One-term or zero element, unnormalized"""
    product = _product(m1, m2)
    return Element(g, field, {product: 1} if product is not None else None)


def add(x: Element, y: Element) -> Element:
    return x + y


def scale(scalar, x: Element) -> Element:
    return x.scale(scalar)


def multiply(x: Element, y: Element) -> Element:
    x._check(y)
    left, right = x.normalize(), y.normalize()
    zero = x.field.zero
    result: dict[Monomial, FieldElement] = {}
    for m1, c1 in left.terms.items():
        for m2, c2 in right.terms.items():
            product = _product(m1, m2)
            if product is not None:
                result[product] = result.get(product, zero) + c1 * c2
    return Element(x.graph, x.field, result).normalize()


def normalize(x: Element) -> Element:
    return x.normalize()


def equals(x: Element, y: Element) -> bool:
    return x == y


def bar(x: Element) -> Element:
    return x.bar()


def is_ghost_polynomial(x: Element) -> bool:
    return all(m.is_ghost for m in x.normalize().terms)


def is_real_polynomial(x: Element) -> bool:
    return all(m.is_real for m in x.normalize().terms)


# -- canonical text form ------------------------------------------------------

def _ghost_token(g: Graph, edge_id: str) -> str:
    token = f"{edge_id}'"
    if token in g.vertex_index or token in g.edge_map:
        return f"({edge_id})'"
    return token


def format_monomial(g: Graph, m: Monomial) -> str:
    if m.is_vertex:
        return m.alpha.source
    factors = list(m.alpha.edges)
    factors.extend(_ghost_token(g, e) for e in reversed(m.beta.edges))
    return "*".join(factors)


def format_element(x: Element) -> str:
    """Canonical text, parseable back by the expression parser"""
    x = x.normalize()
    if not x.terms:
        return "0"
    pieces = []
    for index, (monomial, coefficient) in enumerate(x.items()):
        negative = x.field.is_rational and coefficient.value < 0
        magnitude = -coefficient if negative else coefficient
        body = format_monomial(x.graph, monomial)
        text = body if magnitude == x.field.one else f"{magnitude}*{body}"
        if index == 0:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces)

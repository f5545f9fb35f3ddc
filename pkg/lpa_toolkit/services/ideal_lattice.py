"""
Hereditary and saturated vertex sets, breaking vertices, admissible pairs and
the lattice of graded ideals they index
"""

import itertools
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from lpa_toolkit.algebra.element import Element, Monomial, edge_element, vertex_element, zero_element
from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import Graph, Path, VertexClass, classify_vertex, paths_of_length, reachable_from
from lpa_toolkit.algebra.laurent import LaurentPolynomial
from lpa_toolkit.services.exceptions import ConsistencyError, ParseError, PreconditionError
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)

VertexSet = frozenset[str]


def vertex_set(g: Graph, vertices: Iterable[str]) -> VertexSet:
    return frozenset(g.check_vertex(v) for v in vertices)


def ordered(g: Graph, vertices: Iterable[str]) -> list[str]:
    """Vertices in canonical order"""
    return sorted(vertices, key=g.index)


# -- hereditary / saturated sets ---------------------------------------------

def is_hereditary(g: Graph, H: Iterable[str]) -> bool:
    H = vertex_set(g, H)
    return all(w in H for v in H for w in g.successors(v))


def _require_hereditary(g: Graph, H: Iterable[str]) -> VertexSet:
    H = vertex_set(g, H)
    if not is_hereditary(g, H):
        raise PreconditionError(f"{{{','.join(ordered(g, H))}}} is not hereditary")
    return H


def _saturation_candidates(g: Graph, H: VertexSet) -> list[str]:
    return [
        v for v in g.vertices
        if v not in H
        and classify_vertex(g, v) is VertexClass.REGULAR
        and all(g.range(e) in H for e in g.out_edges(v))
    ]


def is_saturated(g: Graph, H: Iterable[str]) -> bool:
    H = _require_hereditary(g, H)
    return not _saturation_candidates(g, H)


def saturate(g: Graph, H: Iterable[str]) -> VertexSet:
    """Least saturated hereditary superset of a hereditary set"""
    result = set(_require_hereditary(g, H))
    while True:
        added = _saturation_candidates(g, frozenset(result))
        if not added:
            return frozenset(result)
        result.update(added)


def hereditary_closure(g: Graph, X: Iterable[str]) -> VertexSet:
    return frozenset(reachable_from(g, X))


def _require_saturated_hereditary(g: Graph, H: Iterable[str]) -> VertexSet:
    H = _require_hereditary(g, H)
    if not is_saturated(g, H):
        raise PreconditionError(f"{{{','.join(ordered(g, H))}}} is hereditary but not saturated")
    return H


def breaking_vertices(g: Graph, H: Iterable[str]) -> VertexSet:
    """
    Infinite emitters outside H that send infinitely many edges into H but
    only finitely many (at least one) out of it: every bundle target lies in
    H and some explicit edge leaves H.
    """
    H = _require_saturated_hereditary(g, H)
    return frozenset(
        v for v in g.vertices
        if v not in H
        and classify_vertex(g, v) is VertexClass.INFINITE_EMITTER
        and all(t in H for t in g.bundle_targets(v))
        and any(g.range(e) not in H for e in g.out_edges(v))
    )


def vH_element(g: Graph, field: Field, H: Iterable[str], v: str) -> Element:
    """v^H = v - sum of ee* over edges e from v leaving H"""
    H = vertex_set(g, H)
    if v not in breaking_vertices(g, H):
        raise PreconditionError(f"{v} is not a breaking vertex of {{{','.join(ordered(g, H))}}}")
    result = vertex_element(g, field, v)
    for e in g.out_edges(v):
        if g.range(e) not in H:
            result = result - edge_element(g, field, e) * edge_element(g, field, e).bar()
    return result.normalize()


def saturated_hereditary_sets(g: Graph) -> list[VertexSet]:
    """All saturated hereditary subsets, found by closing one vertex at a time from the empty set"""
    start = saturate(g, ())
    found = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for v in g.vertices:
            if v in current:
                continue
            bigger = saturate(g, hereditary_closure(g, current | {v}))
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    logger.debug(f"found {len(found)} saturated hereditary sets")
    return sorted(found, key=lambda s: (len(s), sorted(g.index(v) for v in s)))


def has_trivial_saturated_hereditary_sets(g: Graph) -> bool:
    """True iff the only saturated hereditary sets are the empty set and all of E^0"""
    return {len(s) for s in saturated_hereditary_sets(g)} <= {0, len(g.vertices)}


# -- admissible pairs ----------------------------------------------------------

@dataclass(frozen=True)
class AdmissiblePair:
    H: VertexSet
    S: VertexSet = frozenset()

    def sort_key(self, g: Graph) -> tuple:
        return (len(self.H), sorted(g.index(v) for v in self.H),
                len(self.S), sorted(g.index(v) for v in self.S))


def make_pair(g: Graph, H: Iterable[str], S: Iterable[str] = ()) -> AdmissiblePair:
    """Validated admissible pair"""
    H = _require_saturated_hereditary(g, H)
    S = vertex_set(g, S)
    outside = S - breaking_vertices(g, H)
    if outside:
        raise PreconditionError(f"not breaking vertices of H: {','.join(ordered(g, outside))}")
    return AdmissiblePair(H, S)


@lru_cache(maxsize=64)
def _enumerate_pairs(g: Graph) -> tuple[AdmissiblePair, ...]:
    pairs = []
    for H in saturated_hereditary_sets(g):
        breaking = ordered(g, breaking_vertices(g, H))
        for size in range(len(breaking) + 1):
            for S in itertools.combinations(breaking, size):
                pairs.append(AdmissiblePair(H, frozenset(S)))
    pairs.sort(key=lambda p: p.sort_key(g))
    return tuple(pairs)


def admissible_pairs(g: Graph) -> list[AdmissiblePair]:
    return list(_enumerate_pairs(g))


def pair_leq(p1: AdmissiblePair, p2: AdmissiblePair) -> bool:
    """(H, S) <= (H', S') iff H is inside H' and S inside H' union S'"""
    return p1.H <= p2.H and p1.S <= (p2.H | p2.S)


def pair_meet(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """Greatest lower bound in the enumerated lattice"""
    pairs = _enumerate_pairs(g)
    lower = [p for p in pairs if pair_leq(p, p1) and pair_leq(p, p2)]
    for candidate in lower:
        if all(pair_leq(p, candidate) for p in lower):
            return candidate
    raise ConsistencyError("pairs have no greatest lower bound")


def pair_join(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """Least upper bound in the enumerated lattice"""
    pairs = _enumerate_pairs(g)
    upper = [p for p in pairs if pair_leq(p1, p) and pair_leq(p2, p)]
    for candidate in upper:
        if all(pair_leq(candidate, p) for p in upper):
            return candidate
    raise ConsistencyError("pairs have no least upper bound")


def lattice_formula_meet(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """The closed-form meet as usually printed: (H1 n H2, ((S1 u H1) u (S2 u H2)) n B_{H1 n H2})"""
    H = p1.H & p2.H
    S = ((p1.S | p1.H) | (p2.S | p2.H)) & breaking_vertices(g, H)
    return AdmissiblePair(H, S)


def lattice_formula_join(g: Graph, p1: AdmissiblePair, p2: AdmissiblePair) -> AdmissiblePair:
    """The closed-form join as usually printed"""
    union = saturate(g, p1.H | p2.H)
    intersection = saturate(g, p1.H & p2.H)
    H = union | ((p1.S | p2.S) - breaking_vertices(g, intersection))
    S = (p1.S | p2.S) & breaking_vertices(g, union)
    return AdmissiblePair(H, S)


def compare_lattice_formulas(g: Graph) -> list[str]:
    """Every pair of pairs where a closed-form meet or join differs from the order-theoretic one"""
    pairs = _enumerate_pairs(g)
    disagreements = []
    for p1, p2 in itertools.combinations_with_replacement(pairs, 2):
        checks = (
            ("meet", pair_meet(g, p1, p2), lattice_formula_meet),
            ("join", pair_join(g, p1, p2), lattice_formula_join),
        )
        for label, expected, formula in checks:
            try:
                printed = formula(g, p1, p2)
            except PreconditionError as e:
                printed = None
                reason = str(e)
            else:
                reason = None
            if printed != expected:
                message = (f"{label}({format_pair(g, p1)}, {format_pair(g, p2)}): "
                           f"lattice gives {format_pair(g, expected)}, formula gives "
                           f"{format_pair(g, printed) if printed else reason}")
                logger.warning(message)
                disagreements.append(message)
    return disagreements


# -- graded ideals ------------------------------------------------------------

def ideal_generators(g: Graph, field: Field, p: AdmissiblePair) -> list[Element]:
    generators = [vertex_element(g, field, v) for v in ordered(g, p.H)]
    generators.extend(vH_element(g, field, p.H, v) for v in ordered(g, p.S))
    return generators


def in_graded_ideal(g: Graph, field: Field, p: AdmissiblePair, x: Element) -> bool:
    """x lies in I_(H,S) iff its image in L_K(E minus (H,S)) vanishes"""
    from lpa_toolkit.services.graph_transforms import quotient_hom

    return quotient_hom(g, p, x).is_zero()


def recover_pair(g: Graph, field: Field, p: AdmissiblePair) -> AdmissiblePair:
    """({v : v in I}, {v in B_H : v^H in I}) for I = I_(H,S); gives back p"""
    H = frozenset(v for v in g.vertices if in_graded_ideal(g, field, p, vertex_element(g, field, v)))
    S = frozenset(
        v for v in ordered(g, breaking_vertices(g, H))
        if in_graded_ideal(g, field, p, vH_element(g, field, H, v))
    )
    return AdmissiblePair(H, S)


def span_membership_generators(g: Graph, field: Field, p: AdmissiblePair, max_length: int) -> list[Element]:
    """
    The spanning set of I_(H,S) cut off at path length max_length:
    alpha beta* with r(alpha) = r(beta) in H, and alpha v^H beta* with
    r(alpha) = r(beta) = v in S.
    """
    paths = [q for n in range(max_length + 1) for q in paths_of_length(g, n)]
    by_range: dict[str, list[Path]] = {}
    for q in paths:
        by_range.setdefault(q.range, []).append(q)

    spanning = []
    for v in ordered(g, p.H):
        for alpha in by_range.get(v, []):
            for beta in by_range.get(v, []):
                spanning.append(Element(g, field, {Monomial(alpha, beta): 1}).normalize())
    for v in ordered(g, p.S):
        gap = vH_element(g, field, p.H, v)
        for alpha in by_range.get(v, []):
            for beta in by_range.get(v, []):
                left = Element(g, field, {Monomial(alpha, Path.vertex(v)): 1})
                right = Element(g, field, {Monomial(Path.vertex(v), beta): 1})
                spanning.append(left * gap * right)
    return spanning


def _entry_paths(g: Graph, H: VertexSet) -> Iterator[Path]:
    """Paths starting outside H whose last edge is the first to enter H, by length"""
    # vertices outside H with an explicit path into H
    feeders: set[str] = set()
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in H or v in feeders:
                continue
            if any(g.range(e) in H or g.range(e) in feeders for e in g.out_edges(v)):
                feeders.add(v)
                changed = True

    layer = [Path.vertex(v) for v in g.vertices if v in feeders]
    while layer:
        next_layer = []
        entering = []
        for path in layer:
            for e in g.out_edges(path.range):
                extended = Path(path.source, path.edges + (e,), g.range(e))
                if extended.range in H:
                    entering.append(extended)
                elif extended.range in feeders:
                    next_layer.append(extended)
        entering.sort(key=g.path_key)
        yield from entering
        layer = next_layer


def ideal_local_units(g: Graph, field: Field, H: Iterable[str]) -> Iterator[Element]:
    """
    Local units t_1, t_2, ... of I_(H, empty): t_n adds the first n vertices of
    H and the projections alpha alpha* for the first n entry paths into H.
    The sequence is infinite when a cycle outside H feeds into H.
    """
    H = _require_saturated_hereditary(g, H)
    vertices = ordered(g, H)
    entries = _entry_paths(g, H)
    terms: dict[Monomial, int] = {}
    n = 0
    while True:
        grew = False
        if n < len(vertices):
            terms[Monomial.vertex(vertices[n])] = 1
            grew = True
        alpha = next(entries, None)
        if alpha is not None:
            terms[Monomial(alpha, alpha)] = 1
            grew = True
        if not grew:
            return
        n += 1
        yield Element(g, field, terms).normalize()


# -- non-graded ideals ---------------------------------------------------------

@dataclass(frozen=True)
class NonGradedWitness:
    """
    a = v + alpha for an exitless closed path alpha at v generates a non-graded
    ideal. The vertices of alpha span a hereditary subgraph whose algebra is
    M_n(K[x, x^-1]); a and its degree-0 component both live in the (v, v)
    corner there, so a is certified when the (v, v) entry of a does not
    divide the (v, v) entry of the component.
    """
    cycle: Path
    generator: Element
    component: Element
    generator_polynomial: LaurentPolynomial
    component_polynomial: LaurentPolynomial

    @property
    def certified(self) -> bool:
        return not self.generator_polynomial.divides(self.component_polynomial)


def _corner_polynomial(cycle_graph: Graph, v: str, x: Element) -> LaurentPolynomial:
    from lpa_toolkit.services.graph_transforms import cycle_iso, cycle_order

    corner = cycle_order(cycle_graph).vertices.index(v)
    transported = Element(cycle_graph, x.field, x.normalize().terms)
    return cycle_iso(cycle_graph, transported)[corner, corner]


def nongraded_ideal_witness(g: Graph, field: Field) -> NonGradedWitness | None:
    from lpa_toolkit.algebra.grading import degree_decompose
    from lpa_toolkit.services.graph_transforms import hereditary_subgraph
    from lpa_toolkit.services.property_checkers import exitless_cycles

    cycles = exitless_cycles(g)
    if not cycles:
        return None
    cycle = cycles[0]
    v = cycle.source
    generator = (vertex_element(g, field, v) + Element(g, field, {Monomial(cycle, Path.vertex(v)): 1})).normalize()
    component = degree_decompose(generator).get(0, zero_element(g, field))

    cycle_graph = hereditary_subgraph(g, [v] + [g.range(e) for e in cycle.edges])
    witness = NonGradedWitness(
        cycle=cycle,
        generator=generator,
        component=component,
        generator_polynomial=_corner_polynomial(cycle_graph, v, generator),
        component_polynomial=_corner_polynomial(cycle_graph, v, component),
    )
    if not witness.certified:
        raise ConsistencyError(
            f"{witness.generator_polynomial} divides {witness.component_polynomial} on exitless cycle {cycle}"
        )
    logger.debug(f"non-graded witness on exitless cycle {cycle}: "
                 f"{witness.generator_polynomial} does not divide {witness.component_polynomial}")
    return witness


# -- text form ------------------------------------------------------------------

def format_pair(g: Graph, p: AdmissiblePair) -> str:
    return f"H={{{','.join(ordered(g, p.H))}}};S={{{','.join(ordered(g, p.S))}}}"


_PAIR_RE = re.compile(r'^\s*H\s*=\s*\{?([^};]*)\}?\s*(?:;\s*S\s*=\s*\{?([^}]*)\}?)?\s*$')


def parse_pair(g: Graph, text: str) -> AdmissiblePair:
    """Parse 'H={a,b};S={c}' (S optional) into a validated admissible pair"""
    match = _PAIR_RE.match(text)
    if not match:
        raise ParseError(f"expected H={{...}};S={{...}}, got {text!r}")
    H, S = (
        [v.strip() for v in (group or "").split(",") if v.strip()]
        for group in match.groups()
    )
    return make_pair(g, H, S)

"""
Homomorphisms out of L_K(E) defined by images of the generators v, e, e*
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from functools import reduce
from typing import Any

from lpa_toolkit.algebra.element import Element, Monomial, zero_element
from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import Graph
from lpa_toolkit.services.exceptions import GraphMismatchError


def evaluate_monomial(m: Monomial,
                      vertex_image: Callable[[str], Any],
                      edge_image: Callable[[str], Any],
                      ghost_image: Callable[[str], Any],
                      multiply: Callable[[Any, Any], Any]) -> Any:
    """Image of alpha beta* = e_1...e_k f_m*...f_1* as a product of generator images"""
    if m.is_vertex:
        return vertex_image(m.alpha.source)
    factors = [edge_image(e) for e in m.alpha.edges]
    factors.extend(ghost_image(e) for e in reversed(m.beta.edges))
    return reduce(multiply, factors)


@dataclass
class GeneratorMap:
    """Algebra map L_K(source) -> L_K(target) given on vertices, edges and ghost edges"""
    source: Graph
    target: Graph
    field: Field
    vertex_images: Mapping[str, Element]
    edge_images: Mapping[str, Element]
    ghost_images: Mapping[str, Element]

    def _image(self, m: Monomial) -> Element:
        return evaluate_monomial(
            m,
            self.vertex_images.__getitem__,
            self.edge_images.__getitem__,
            self.ghost_images.__getitem__,
            lambda a, b: a * b,
        )

    def __call__(self, x: Element) -> Element:
        if x.graph != self.source:
            raise GraphMismatchError("element does not belong to the source graph of this map")
        result = zero_element(self.target, self.field)
        for monomial, coefficient in x.terms.items():
            result = result + self._image(monomial).scale(coefficient)
        return result.normalize()

"""
Decision procedures on graphs: simple closed paths, exits, Conditions (L)
and (K), cofinality and simplicity of L_K(E)
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import islice

import networkx as nx

from lpa_toolkit.algebra.field import Field
from lpa_toolkit.algebra.graph import Graph, Path, singular_vertices, to_networkx
from lpa_toolkit.services.exceptions import ConsistencyError, PreconditionError
from lpa_toolkit.services.ideal_lattice import (
    AdmissiblePair,
    NonGradedWitness,
    admissible_pairs,
    has_trivial_saturated_hereditary_sets,
    nongraded_ideal_witness,
)
from lpa_toolkit.shared.logging_config import get_project_logger


logger = get_project_logger(__name__)


def bundle_step(v: str, t: str) -> str:
    """Placeholder step for one of the anonymous edges of the bundle v => t"""
    return f"∞:{v}>{t}"


@dataclass(frozen=True)
class SimpleClosedPath:
    """
    A closed path e_1...e_n at its base that meets the base only at both ends.
    Steps through a bundle stand for infinitely many parallel paths.
    """
    base: str
    steps: tuple[str, ...]
    vertices: tuple[str, ...]
    bundle_backed: bool = False

    @property
    def path(self) -> Path:
        if self.bundle_backed:
            raise PreconditionError("a bundle-backed closed path has no explicit edge sequence")
        return Path(self.base, self.steps, self.base)

    @property
    def multiplicity(self) -> int:
        """Lower bound on the number of edge-level paths it represents"""
        return 2 if self.bundle_backed else 1

    def __str__(self) -> str:
        return "*".join(self.steps)


def _ancestors(g: Graph, v: str) -> set[str]:
    return nx.ancestors(to_networkx(g), g.check_vertex(v))


def iter_simple_closed_paths(g: Graph, v: str) -> Iterator[SimpleClosedPath]:
    """Simple closed paths at v in order of length; infinite when a cycle avoiding v feeds back to v"""
    feeders = _ancestors(g, v)
    layer = [((), (v,), False)]
    while layer:
        next_layer = []
        found = []
        for steps, visited, backed in layer:
            u = visited[-1]
            moves = [(e, g.range(e), False) for e in g.out_edges(u)]
            moves.extend((bundle_step(u, t), t, True) for t in g.bundle_targets(u))
            for step, target, through_bundle in moves:
                extended = (steps + (step,), visited + (target,), backed or through_bundle)
                if target == v:
                    found.append(extended)
                elif target in feeders:
                    next_layer.append(extended)
        for steps, visited, backed in found:
            yield SimpleClosedPath(v, steps, visited[:-1], backed)
        layer = next_layer


def simple_closed_paths_at(g: Graph, v: str, max_length: int | None = None) -> list[SimpleClosedPath]:
    """All simple closed paths at v of length at most max_length (default: number of vertices)"""
    limit = len(g.vertices) if max_length is None else max_length
    result = []
    for closed in iter_simple_closed_paths(g, v):
        if len(closed.steps) > limit:
            break
        result.append(closed)
    return result


def _has_exit_at(g: Graph, u: str) -> bool:
    return bool(g.bundle_targets(u)) or len(g.out_edges(u)) >= 2


def has_exit(g: Graph, alpha: Path | SimpleClosedPath) -> bool:
    if isinstance(alpha, SimpleClosedPath):
        return any(_has_exit_at(g, u) for u in alpha.vertices)
    if alpha.is_vertex or alpha.source != alpha.range:
        raise PreconditionError(f"{alpha} is not a closed path")
    return any(_has_exit_at(g, g.source(e)) for e in alpha.edges)


def elementary_cycles(g: Graph) -> list[tuple[str, ...]]:
    """Vertex cycles of the underlying digraph (bundles included), rotated to start at their least vertex"""
    cycles = set()
    for cycle in nx.simple_cycles(nx.DiGraph(to_networkx(g))):
        start = min(range(len(cycle)), key=lambda i: g.index(cycle[i]))
        cycles.add(tuple(cycle[start:] + cycle[:start]))
    return sorted(cycles, key=lambda c: (len(c), [g.index(v) for v in c]))


def exitless_cycles(g: Graph) -> list[Path]:
    """Closed paths without an exit, one per cycle, based at the cycle's least vertex"""
    result = []
    for cycle in elementary_cycles(g):
        if any(_has_exit_at(g, u) for u in cycle):
            continue
        edges = tuple(g.out_edges(u)[0] for u in cycle)
        result.append(g.path(cycle[0], edges))
    return result


def condition_L(g: Graph) -> bool:
    return all(any(_has_exit_at(g, u) for u in cycle) for cycle in elementary_cycles(g))


def condition_K(g: Graph) -> bool:
    """Every vertex bases no simple closed path or at least two"""
    for v in g.vertices:
        count = sum(c.multiplicity for c in islice(iter_simple_closed_paths(g, v), 2))
        if count == 1:
            logger.debug(f"condition K fails at {v}")
            return False
    return True


def condition_K_via_quotients(g: Graph) -> bool:
    from lpa_toolkit.services.graph_transforms import quotient_graph

    return all(condition_L(quotient_graph(g, p)) for p in admissible_pairs(g))


def condition_K_counterexample(g: Graph, field: Field) -> tuple[AdmissiblePair, NonGradedWitness] | None:
    """First admissible pair whose quotient has an exitless cycle, with a non-graded ideal of that quotient"""
    from lpa_toolkit.services.graph_transforms import quotient_graph

    for p in admissible_pairs(g):
        witness = nongraded_ideal_witness(quotient_graph(g, p), field)
        if witness is not None:
            return p, witness
    return None


def is_cofinal(g: Graph) -> bool:
    """Every vertex reaches every cycle; in a finite graph infinite paths end up circling inside one"""
    graph = to_networkx(g)
    for component in nx.strongly_connected_components(graph):
        anchor = next(iter(component))
        if len(component) == 1 and not graph.has_edge(anchor, anchor):
            continue
        if len(nx.ancestors(graph, anchor)) + 1 < len(g.vertices):
            return False
    return True


def singular_vertices_reachable(g: Graph) -> bool:
    """Every vertex has a path to every singular vertex"""
    graph = to_networkx(g)
    for v in singular_vertices(g):
        if len(nx.ancestors(graph, v)) + 1 < len(g.vertices):
            return False
    return True


@dataclass
class SimplicityVerdict:
    simple: bool
    criteria: dict[str, bool] = field(default_factory=dict)
    characterizations: dict[str, bool] = field(default_factory=dict)


def is_simple(g: Graph) -> SimplicityVerdict:
    criteria = {
        "condition_L": condition_L(g),
        "condition_K": condition_K(g),
        "trivial_saturated_hereditary": has_trivial_saturated_hereditary_sets(g),
        "cofinal": is_cofinal(g),
        "singular_reachable": singular_vertices_reachable(g),
    }
    characterizations = {
        "L+trivial": criteria["condition_L"] and criteria["trivial_saturated_hereditary"],
        "K+trivial": criteria["condition_K"] and criteria["trivial_saturated_hereditary"],
        "L+cofinal+singular": criteria["condition_L"] and criteria["cofinal"] and criteria["singular_reachable"],
        "K+cofinal+singular": criteria["condition_K"] and criteria["cofinal"] and criteria["singular_reachable"],
    }
    verdicts = set(characterizations.values())
    if len(verdicts) != 1:
        raise ConsistencyError(f"simplicity characterizations disagree: {characterizations}")
    return SimplicityVerdict(verdicts.pop(), criteria, characterizations)

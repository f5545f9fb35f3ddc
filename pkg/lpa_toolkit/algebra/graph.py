"""
Directed graphs with sinks, regular vertices and infinite emitters

Infinite emitters are modelled by bundle descriptors: a bundle v => {w, ...}
stands for countably many anonymous parallel edges from v to each target.
Bundle edges count for reachability and exits, but never appear in paths.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx

from lpa_toolkit.services.exceptions import (
    CompositionError,
    GraphValidationError,
    UnknownIdentifierError,
    UnknownVertexError,
)


class VertexClass(str, Enum):
    REGULAR = "regular"
    SINK = "sink"
    INFINITE_EMITTER = "infinite-emitter"

    @property
    def is_singular(self) -> bool:
        return self is not VertexClass.REGULAR


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    range: str


@dataclass(frozen=True)
class Path:
    """A composable edge sequence; the empty sequence is the vertex itself"""
    source: str
    edges: tuple[str, ...]
    range: str

    @classmethod
    def vertex(cls, v: str) -> "Path":
        return cls(v, (), v)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return "*".join(self.edges) if self.edges else self.source


def compose(p: Path, q: Path) -> Path:
    """Concatenate p then q; requires r(p) = s(q)"""
    if p.range != q.source:
        raise CompositionError(f"cannot compose {p} (ends at {p.range}) with {q} (starts at {q.source})")
    return Path(p.source, p.edges + q.edges, q.range)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    bundles: tuple[tuple[str, tuple[str, ...]], ...] = ()

    @classmethod
    def build(cls, vertices: Iterable[str],
              edges: Iterable[tuple[str, str, str] | Edge] = (),
              bundles: Mapping[str, Iterable[str]] | None = None) -> "Graph":
        """Build a graph from plain data, keeping the given order as canonical order"""
        edge_records = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        bundle_items = tuple((v, tuple(targets)) for v, targets in (bundles or {}).items())
        return cls(tuple(vertices), edge_records, bundle_items)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def bundle_map(self) -> dict[str, tuple[str, ...]]:
        return dict(self.bundles)

    @cached_property
    def _out_edges(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out.setdefault(e.source, []).append(e.id)
        return {v: tuple(ids) for v, ids in out.items()}

    @cached_property
    def _in_edges(self) -> dict[str, tuple[str, ...]]:
        incoming: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            incoming.setdefault(e.range, []).append(e.id)
        return {v: tuple(ids) for v, ids in incoming.items()}

    def index(self, v: str) -> int:
        return self.vertex_index[self.check_vertex(v)]

    def check_vertex(self, v: str) -> str:
        if v not in self.vertex_index:
            raise UnknownVertexError(f"unknown vertex: {v}")
        return v

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise UnknownIdentifierError(f"unknown edge: {edge_id}") from None

    def source(self, edge_id: str) -> str:
        return self.edge(edge_id).source

    def range(self, edge_id: str) -> str:
        return self.edge(edge_id).range

    def out_edges(self, v: str) -> tuple[str, ...]:
        return self._out_edges[self.check_vertex(v)]

    def in_edges(self, v: str) -> tuple[str, ...]:
        return self._in_edges[self.check_vertex(v)]

    def bundle_targets(self, v: str) -> tuple[str, ...]:
        return self.bundle_map.get(v, ())

    def successors(self, v: str) -> list[str]:
        """Ranges of explicit edges and bundle targets, without repetition"""
        seen = dict.fromkeys(self.range(e) for e in self.out_edges(v))
        seen.update(dict.fromkeys(self.bundle_targets(v)))
        return list(seen)

    def path(self, source: str, edges: Iterable[str] = ()) -> Path:
        """Build a validated path from a source vertex and edge ids"""
        current = self.check_vertex(source)
        edge_ids = tuple(edges)
        for edge_id in edge_ids:
            edge = self.edge(edge_id)
            if edge.source != current:
                raise CompositionError(f"edge {edge_id} does not start at {current}")
            current = edge.range
        return Path(source, edge_ids, current)

    def edge_path(self, edge_id: str) -> Path:
        edge = self.edge(edge_id)
        return Path(edge.source, (edge_id,), edge.range)

    def path_key(self, p: Path) -> tuple:
        """Sort key: vertex paths by vertex order, longer paths lexicographically by edge order"""
        return (len(p.edges), self.vertex_index[p.source], tuple(self.edge_index[e] for e in p.edges))


def classify_vertex(g: Graph, v: str) -> VertexClass:
    g.check_vertex(v)
    if g.bundle_targets(v):
        return VertexClass.INFINITE_EMITTER
    if g.out_edges(v):
        return VertexClass.REGULAR
    return VertexClass.SINK


def regular_vertices(g: Graph) -> list[str]:
    return [v for v in g.vertices if classify_vertex(g, v) is VertexClass.REGULAR]


def singular_vertices(g: Graph) -> list[str]:
    return [v for v in g.vertices if classify_vertex(g, v).is_singular]


def sinks(g: Graph) -> list[str]:
    return [v for v in g.vertices if classify_vertex(g, v) is VertexClass.SINK]


def is_row_finite(g: Graph) -> bool:
    return not g.bundles


def paths_of_length(g: Graph, n: int, from_vertex: str | None = None) -> list[Path]:
    """All length-n paths over explicit edges, ordered lexicographically by edge order"""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    starts = [g.check_vertex(from_vertex)] if from_vertex is not None else list(g.vertices)
    if n == 0:
        return [Path.vertex(v) for v in starts]

    found: list[Path] = []

    def extend(path: Path) -> None:
        if len(path) == n:
            found.append(path)
            return
        for edge_id in g.out_edges(path.range):
            extend(Path(path.source, path.edges + (edge_id,), g.range(edge_id)))

    for v in starts:
        extend(Path.vertex(v))
    found.sort(key=lambda p: tuple(g.edge_index[e] for e in p.edges))
    return found


def reachable_from(g: Graph, vertices: Iterable[str]) -> set[str]:
    """Forward reachability through explicit edges and bundles (includes the start set)"""
    seen = {g.check_vertex(v) for v in vertices}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in g.successors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def to_networkx(g: Graph) -> nx.MultiDiGraph:
    """MultiDiGraph view; one representative edge per bundle target, marked bundle=True"""
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(g.vertices)
    for e in g.edges:
        graph.add_edge(e.source, e.range, key=e.id, bundle=False)
    for v, targets in g.bundles:
        for t in targets:
            graph.add_edge(v, t, key=f"∞:{v}>{t}", bundle=True)
    return graph


def validate(g: Graph) -> list[str]:
    """Return the list of invariant violations; empty iff the graph is well formed"""
    violations: list[str] = []
    seen_vertices: set[str] = set()
    for v in g.vertices:
        if not v:
            violations.append("empty vertex identifier")
        elif v in seen_vertices:
            violations.append(f"duplicate vertex {v}")
        seen_vertices.add(v)

    seen_edges: set[str] = set()
    for e in g.edges:
        if not e.id:
            violations.append("empty edge identifier")
        elif e.id in seen_edges:
            violations.append(f"duplicate edge {e.id}")
        elif e.id in seen_vertices:
            violations.append(f"edge {e.id} reuses a vertex identifier")
        seen_edges.add(e.id)
        for end, label in ((e.source, "source"), (e.range, "range")):
            if end not in seen_vertices:
                violations.append(f"edge {e.id} has unknown {label} {end}")

    seen_bundles: set[str] = set()
    for v, targets in g.bundles:
        if v not in seen_vertices:
            violations.append(f"bundle at unknown vertex {v}")
        if v in seen_bundles:
            violations.append(f"duplicate bundle at {v}")
        seen_bundles.add(v)
        if not targets:
            violations.append(f"bundle at {v} has no targets")
        for t in targets:
            if t not in seen_vertices:
                violations.append(f"bundle at {v} targets unknown vertex {t}")
        if len(set(targets)) != len(targets):
            violations.append(f"bundle at {v} repeats a target")
    return violations


def ensure_valid(g: Graph) -> Graph:
    violations = validate(g)
    if violations:
        raise GraphValidationError(violations)
    return g

"""
Line-oriented graph text format

    # comment
    vertex <id>
    edge <id> <source> <range>
    bundle <source> <target>[,<target>...]

'#' opens a comment only at the start of a line or after whitespace, so
identifiers such as v#1 survive a round trip.
"""

import re
from pathlib import Path as FilePath

from lpa_toolkit.algebra.graph import Edge, Graph, validate
from lpa_toolkit.services.exceptions import GraphValidationError, ParseError


_COMMENT_RE = re.compile(r'(^|\s)#.*$')
_TOKEN_RE = re.compile(r'\S+')


class GraphParser:
    """Parse graph text into a validated Graph"""

    def __init__(self):
        self.vertices: list[str] = []
        self.edges: list[Edge] = []
        self.bundles: dict[str, list[str]] = {}

    def parse_file(self, file_path: str) -> Graph:
        with open(file_path, encoding='utf-8') as f:
            return self.parse(f.read())

    def parse(self, text: str) -> Graph:
        for number, raw in enumerate(text.splitlines(), 1):
            line = _COMMENT_RE.sub('', raw)
            tokens = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]
            if tokens:
                self._parse_line(tokens, number)

        bundles = {v: tuple(targets) for v, targets in self.bundles.items()}
        graph = Graph(tuple(self.vertices), tuple(self.edges), tuple(bundles.items()))
        violations = validate(graph)
        if violations:
            raise GraphValidationError(violations)
        return graph

    def _parse_line(self, tokens: list[tuple[str, int]], number: int) -> None:
        keyword, column = tokens[0]
        args = tokens[1:]
        if keyword == 'vertex':
            self._expect(args, 1, 'vertex <id>', number, column)
            self.vertices.append(args[0][0])
        elif keyword == 'edge':
            self._expect(args, 3, 'edge <id> <source> <range>', number, column)
            self.edges.append(Edge(args[0][0], args[1][0], args[2][0]))
        elif keyword == 'bundle':
            self._expect(args, 2, 'bundle <source> <target>[,<target>...]', number, column)
            source, (targets, targets_column) = args[0][0], args[1]
            names = targets.split(',')
            if any(not name for name in names):
                raise ParseError("empty bundle target", number, targets_column)
            if source in self.bundles:
                raise ParseError(f"second bundle line for {source}", number, column)
            self.bundles[source] = names
        else:
            raise ParseError(f"unknown keyword {keyword!r}", number, column)

    def _expect(self, args, count: int, usage: str, number: int, column: int) -> None:
        if len(args) != count:
            where = args[count][1] if len(args) > count else column
            raise ParseError(f"expected '{usage}'", number, where)


class GraphFormatter:
    """Format a Graph as text in canonical order, without file operations"""

    def format_graph(self, g: Graph, comment: str | None = None) -> list[str]:
        lines = []
        if comment:
            lines.append(f"# {comment}")
        lines.extend(f"vertex {v}" for v in g.vertices)
        lines.extend(f"edge {e.id} {e.source} {e.range}" for e in g.edges)
        lines.extend(f"bundle {v} {','.join(targets)}" for v, targets in g.bundles)
        return lines


def load_graph(source: str) -> Graph:
    """Read a graph from a file path, or from literal text when it contains a newline"""
    if '\n' in source:
        return GraphParser().parse(source)
    return GraphParser().parse_file(source)


def save_graph(g: Graph) -> str:
    return "\n".join(GraphFormatter().format_graph(g)) + "\n"


def write_graph(g: Graph, file_path: str) -> FilePath:
    output_path = FilePath(file_path)
    output_path.write_text(save_graph(g), encoding='utf-8')
    return output_path

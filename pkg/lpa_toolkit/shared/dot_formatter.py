"""
Graphviz DOT output for graphs and for the Hasse diagram of the admissible-pair lattice
"""

import networkx as nx

from lpa_toolkit.algebra.graph import Graph
from lpa_toolkit.services.ideal_lattice import AdmissiblePair, format_pair, pair_leq


def _quote(name: str) -> str:
    escaped = name.replace('\\', '\\\\').replace('"', '\\"')
    return f'"{escaped}"'


class DotFormatter:
    """Format graphs and lattices as DOT lines"""

    def format_graph(self, g: Graph, name: str = "E") -> list[str]:
        lines = [f"digraph {_quote(name)} {{"]
        lines.extend(f"  {_quote(v)};" for v in g.vertices)
        for e in g.edges:
            lines.append(f"  {_quote(e.source)} -> {_quote(e.range)} [label={_quote(e.id)}];")
        for v, targets in g.bundles:
            for t in targets:
                lines.append(f"  {_quote(v)} -> {_quote(t)} [style=bold, label=\"∞\"];")
        lines.append("}")
        return lines

    def format_hasse(self, g: Graph, pairs: list[AdmissiblePair], name: str = "L_E") -> list[str]:
        """Covering relations of the pair order, drawn bottom to top"""
        order = nx.DiGraph()
        order.add_nodes_from(range(len(pairs)))
        for i, p in enumerate(pairs):
            for j, q in enumerate(pairs):
                if i != j and pair_leq(p, q):
                    order.add_edge(i, j)
        covers = nx.transitive_reduction(order)

        lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
        lines.extend(f"  p{i} [label={_quote(format_pair(g, p))}];" for i, p in enumerate(pairs))
        lines.extend(f"  p{i} -> p{j};" for i, j in sorted(covers.edges()))
        lines.append("}")
        return lines


def graph_to_dot(g: Graph) -> str:
    return "\n".join(DotFormatter().format_graph(g)) + "\n"


def lattice_to_dot(g: Graph, pairs: list[AdmissiblePair]) -> str:
    return "\n".join(DotFormatter().format_hasse(g, pairs)) + "\n"

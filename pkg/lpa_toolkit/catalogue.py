"""
Named graphs used throughout the documentation, the CLI and the test suite
"""

from lpa_toolkit.algebra.graph import Graph, ensure_valid
from lpa_toolkit.services.exceptions import NotFoundError


def rose(n: int) -> Graph:
    """One vertex v with n loops; n = 1 is the loop graph"""
    if n == 1:
        return Graph.build(["v"], [("e", "v", "v")])
    names = "abcdefghijklmnopqrstuvwxyz"
    return Graph.build(["v"], [(names[i], "v", "v") for i in range(n)])


def line(n: int) -> Graph:
    """u -e-> v -f-> w for n = 3; longer lines use v1 -> v2 -> ..."""
    if n == 3:
        return Graph.build(["u", "v", "w"], [("e", "u", "v"), ("f", "v", "w")])
    vertices = [f"v{i}" for i in range(1, n + 1)]
    return Graph.build(vertices, [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)])


def cycle(n: int) -> Graph:
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(f"e{i}", f"v{i}", f"v{i % n + 1}") for i in range(1, n + 1)]
    return Graph.build(vertices, edges)


def loop_with_exit() -> Graph:
    return Graph.build(["v", "w"], [("e", "v", "v"), ("f", "v", "w")])


def disjoint_loops() -> Graph:
    return Graph.build(["v", "w"], [("e", "v", "v"), ("f", "w", "w")])


def worked_example() -> Graph:
    """
    Six vertices with three infinite emitters v, x, w each sending infinitely
    many edges to y; {y, z} is saturated hereditary with breaking vertices v, w.
    """
    return Graph.build(
        ["u", "v", "x", "y", "z", "w"],
        [
            ("uv", "u", "v"),
            ("ux", "u", "x"),
            ("uw", "u", "w"),
            ("vx", "v", "x"),
            ("yz", "y", "z"),
            ("zy", "z", "y"),
            ("wx", "w", "x"),
            ("wu", "w", "u"),
        ],
        {"v": ["y"], "x": ["y"], "w": ["y"]},
    )


CATALOGUE = {
    "R1": lambda: rose(1),
    "R2": lambda: rose(2),
    "R3": lambda: rose(3),
    "A3": lambda: line(3),
    "C3": lambda: cycle(3),
    "T": loop_with_exit,
    "EX5": worked_example,
    "L2": disjoint_loops,
}


def catalogue_graph(name: str) -> Graph:
    try:
        factory = CATALOGUE[name.upper()]
    except KeyError:
        raise NotFoundError(f"no catalogue graph named {name!r} (known: {', '.join(CATALOGUE)})") from None
    return ensure_valid(factory())

"""Named graphs and graph families used by the examples, tests and benchmarks."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_edge_list


def triangle_square() -> Graph:
    """Triangle ``abc`` and square ``defg`` joined by the bridge ``cd``, with the pendant edge ``eh``."""
    return Graph.from_edges([tuple(e) for e in "ab bc ca cd de ef fg gd eh".split()])


def cycle(n: int) -> Graph:
    return Graph([f"v{i}" for i in range(1, n + 1)], [(f"v{i}", f"v{i % n + 1}") for i in range(1, n + 1)])


def friendship(n: int) -> Graph:
    """``n`` triangles sharing the single vertex ``a1``."""
    vs = [f"a{i}" for i in range(1, 2 * n + 2)]
    edges = []
    for t in range(n):
        x, y = f"a{2 * t + 2}", f"a{2 * t + 3}"
        edges += [("a1", x), ("a1", y), (x, y)]
    return Graph(vs, edges)


def triangle_polygon(l: int) -> Graph:
    """A ``(2l+1)``-cycle ``a1 .. a_{2l+1}`` and the triangle ``a1 a_{2l+2} a_{2l+3}`` sharing only ``a1``.

    ``l = 5`` is the 13-vertex triangle and hendecagon.
    """
    top = 2 * l + 1
    vs = [f"a{i}" for i in range(1, top + 3)]
    edges = [(f"a{i}", f"a{i + 1}") for i in range(1, top)]
    edges += [("a1", f"a{top}"), ("a1", f"a{top + 1}"), ("a1", f"a{top + 2}"), (f"a{top + 1}", f"a{top + 2}")]
    return Graph(vs, edges)


def triangle_polygon_chord(l: int) -> Graph:
    """Variant of :func:`triangle_polygon` whose last edge is ``a_{2l+1} a_{2l+3}`` instead of
    ``a_{2l+2} a_{2l+3}``: the triangle shares an edge with the cycle and ``a_{2l+2}`` hangs off ``a1``."""
    top = 2 * l + 1
    vs = [f"a{i}" for i in range(1, top + 3)]
    edges = [(f"a{i}", f"a{i + 1}") for i in range(1, top)]
    edges += [("a1", f"a{top}"), ("a1", f"a{top + 1}"), ("a1", f"a{top + 2}"), (f"a{top}", f"a{top + 2}")]
    return Graph(vs, edges)


def load(name: str) -> Graph:
    """Read a bundled edge list, e.g. ``load("triangle_square")``."""
    text = resources.files("stabkit").joinpath("data", f"{name}.txt").read_text()
    return parse_edge_list(text)


def bundled() -> list[str]:
    return sorted(p.name[:-4] for p in resources.files("stabkit").joinpath("data").iterdir() if p.name.endswith(".txt"))

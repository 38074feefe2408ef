"""Grafting on general labelled directed graphs.

Graphs are multisets of integer vertices and multisets of directed edges.
No isomorphism quotient is taken: two graphs are equal only when their
labelled vertex and edge multisets agree.
"""

from __future__ import annotations

from typing import Iterable

from .vecspace import GradedVector, term, vector_from_terms

__all__ = [
    "DanglingEdge",
    "IntegerGraph",
    "NoSuchVertex",
    "RootedGraph",
    "graft_graph",
    "graft_graph_to",
    "integer_graph",
    "rooted",
]


class DanglingEdge(ValueError):
    pass


class NoSuchVertex(ValueError):
    pass


class IntegerGraph:
    __slots__ = ("vertices", "edges", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted((int(s), int(t)) for s, t in edges))
        self._hash = hash((self.vertices, self.edges))

    def grading(self) -> int:
        return len(self.vertices)

    def sort_key(self):
        return (len(self.vertices), self.vertices, self.edges)

    def add_edge(self, edge: tuple[int, int]) -> IntegerGraph:
        return IntegerGraph(self.vertices, self.edges + (edge,))

    def add_graph(self, other: IntegerGraph | RootedGraph) -> IntegerGraph:
        if isinstance(other, RootedGraph):
            other = other.graph
        return IntegerGraph(self.vertices + other.vertices, self.edges + other.edges)

    def __eq__(self, other):
        if not isinstance(other, IntegerGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def text(self) -> str:
        vs = ",".join(map(str, self.vertices))
        es = ",".join(f"({s},{t})" for s, t in self.edges)
        return f"IG(V=[{vs}], E=[{es}])"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return self.text()


class RootedGraph:
    __slots__ = ("graph", "root")

    def __init__(self, graph: IntegerGraph, root: int):
        if root not in graph.vertices:
            raise NoSuchVertex(f"root {root} is not a vertex of {graph.text()}")
        self.graph = graph
        self.root = root

    def grading(self) -> int:
        return self.graph.grading()

    def sort_key(self):
        return (*self.graph.sort_key(), self.root)

    def __eq__(self, other):
        if not isinstance(other, RootedGraph):
            return NotImplemented
        return self.graph == other.graph and self.root == other.root

    def __hash__(self):
        return hash((self.graph, self.root))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def text(self) -> str:
        return f"{self.graph.text()[:-1]}, R={self.root})"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return self.text()


def integer_graph(vs: Iterable[int], es: Iterable[tuple[int, int]] = ()) -> IntegerGraph:
    vs = list(vs)
    es = list(es)
    present = set(vs)
    for s, t in es:
        if s not in present or t not in present:
            raise DanglingEdge(f"edge ({s},{t}) has an endpoint outside {sorted(present)}")
    return IntegerGraph(vs, es)


def rooted(g: IntegerGraph, r: int) -> RootedGraph:
    return RootedGraph(g, r)


def graft_graph_to(rg: RootedGraph, g: IntegerGraph, v: int) -> IntegerGraph:
    """Union of the two graphs plus one edge from the root of ``rg`` to ``v``."""
    if v not in g.vertices:
        raise NoSuchVertex(f"{v} is not a vertex of {g.text()}")
    return g.add_edge((rg.root, v)).add_graph(rg)


def graft_graph(rg: RootedGraph, g: IntegerGraph) -> GradedVector:
    """Sum over the vertices of ``g`` (with multiplicity) of the grafted graphs."""
    return vector_from_terms(term(1, graft_graph_to(rg, g, v)) for v in g.vertices)

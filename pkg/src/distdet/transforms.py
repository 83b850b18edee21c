"""Graph rewrites that leave the distance-matrix determinant unchanged.

New vertices always take the next free labels. When two vertices are glued
the lower label survives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, classify_bicyclic, generate_gpqn


@dataclass(frozen=True)
class JoinSpec:
    left: Graph
    left_vertex: int
    right: Graph
    right_vertex: int

    def __post_init__(self):
        if not 0 <= self.left_vertex < self.left.order:
            raise GraphError(f"left vertex {self.left_vertex} out of range")
        if not 0 <= self.right_vertex < self.right.order:
            raise GraphError(f"right vertex {self.right_vertex} out of range")
        if not (self.left.is_connected() and self.right.is_connected()):
            raise GraphError("both sides of a join must be connected")


def attach_pendant(g: Graph, v: int) -> Graph:
    """Hang a new vertex (label ``g.order``) on ``v``."""
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for order {g.order}")
    return Graph(g.order + 1, g.edges | {(v, g.order)})


def edge_join(spec: JoinSpec) -> Graph:
    """Disjoint union of both sides plus a bridge between the two marked vertices.

    The right side is shifted by ``left.order``.
    """
    off = spec.left.order
    edges = set(spec.left.edges)
    edges.update((u + off, v + off) for u, v in spec.right.edges)
    edges.add((spec.left_vertex, spec.right_vertex + off))
    return Graph(off + spec.right.order, frozenset(edges))


def identify_plus_pendant(spec: JoinSpec) -> Graph:
    """Glue the marked vertices together, then hang a pendant on the glued vertex.

    Right-side vertices other than the marked one are relabeled after the left
    side in their original order; the pendant gets the last label.
    """
    off = spec.left.order
    glued = spec.left_vertex

    def relabel(x: int) -> int:
        if x == spec.right_vertex:
            return glued
        return off + x - (x > spec.right_vertex)

    edges = set(spec.left.edges)
    for u, v in spec.right.edges:
        a, b = relabel(u), relabel(v)
        edges.add((min(a, b), max(a, b)))
    order = off + spec.right.order
    edges.add((glued, order - 1))
    return Graph(order, frozenset(edges))


def normal_form(g: Graph) -> Graph:
    """The pendant-path graph with the same classified ``(p, q, n)`` as ``g``."""
    shape = classify_bicyclic(g)
    return generate_gpqn(shape.p, shape.q, shape.n)

"""Simple undirected graphs, the generators used throughout the package,
BFS distance matrices and the leaf-pruning bicyclic classifier.

Vertices are labeled ``0..order-1``.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .linalg import IntMatrix


class GraphError(ValueError):
    """Base class for graph construction and validation errors."""


class ParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


class DisconnectedError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertices {u} and {v} lie in different components")
        self.u, self.v = u, v


class NotBicyclicError(GraphError):
    pass


class CyclesNotDisjointError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.order < 1:
            raise GraphError(f"order must be positive, got {self.order}")
        for u, v in self.edges:
            if not (0 <= u < v < self.order):
                raise GraphError(f"bad edge {(u, v)} for order {self.order}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing each edge to ``(min, max)``.

        Self-loops, duplicates (in either orientation) and out-of-range
        endpoints raise :class:`GraphError`.
        """
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            if e[0] < 0 or e[1] >= order:
                raise GraphError(f"edge {e} out of range for order {order}")
            seen.add(e)
        return cls(order, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        return all(d >= 0 for d in bfs(self, 0))

    def to_edge_list(self, header: bool | None = None) -> str:
        """Serialize to the edge-list format.

        By default the ``n=<order>`` header is written only when the order
        cannot be inferred from the largest label.
        """
        if header is None:
            header = max((v for _, v in self.edges), default=-1) != self.order - 1
        lines = [f"n={self.order}"] if header else []
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.order)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


_HEADER = re.compile(r"^n\s*=\s*(\S+)$")


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Blank lines and ``#`` comments are skipped. An optional ``n=<order>``
    header fixes the order; otherwise it is one more than the largest label.
    """
    order = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER.match(line)
        if m:
            if order is not None or pairs:
                raise ParseError(lineno, "order header must come first and only once")
            try:
                order = int(m.group(1))
            except ValueError:
                raise ParseError(lineno, f"bad order {m.group(1)!r}") from None
            if order < 1:
                raise ParseError(lineno, f"order must be positive, got {order}")
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(lineno, f"expected two vertex labels, got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(lineno, f"malformed token in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex labels must be nonnegative")
        pairs.append((lineno, u, v))

    if order is None:
        if not pairs:
            raise ParseError(0, "empty edge list with no order header")
        order = 1 + max(max(u, v) for _, u, v in pairs)

    seen: set[tuple[int, int]] = set()
    for lineno, u, v in pairs:
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {e}")
        if e[1] >= order:
            raise ParseError(lineno, f"vertex {e[1]} exceeds declared order {order}")
        seen.add(e)
    return Graph(order, frozenset(seen))


def bfs(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> IntMatrix:
    rows = []
    for s in range(g.order):
        d = bfs(g, s)
        if s == 0 and min(d) < 0:
            raise DisconnectedError(0, d.index(-1))
        rows.append(d)
    return IntMatrix(rows)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def generate_path(n: int) -> Graph:
    """Path on ``n`` vertices, 0-1-...-(n-1)."""
    _check(n >= 1, f"path needs at least one vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def generate_cycle(p: int) -> Graph:
    _check(p >= 3, f"cycle length must be >= 3, got {p}")
    return Graph.from_edges(p, [(i, (i + 1) % p) for i in range(p)])


def generate_infinity(p: int, k: int, q: int) -> Graph:
    """Two cycles of lengths ``p`` and ``q`` joined by a path with ``k-1`` edges.

    The first cycle occupies ``0..p-1`` and attaches at ``p-1``. The path
    continues with fresh labels up to its far end ``p+k-2``, which is also
    the attachment vertex of the second cycle. With ``k == 1`` both cycles
    share vertex ``p-1``.
    """
    _check(p >= 3 and q >= 3, f"cycle lengths must be >= 3, got p={p}, q={q}")
    _check(k >= 1, f"k must be >= 1, got {k}")
    edges = [(i, (i + 1) % p) for i in range(p)]
    hub = p - 1
    for v in range(p, p + k - 1):
        edges.append((v - 1, v))
    end = p + k - 2 if k > 1 else hub
    second = [end] + list(range(p + k - 1, p + k - 1 + q - 1))
    edges += [(second[i], second[(i + 1) % q]) for i in range(q)]
    return Graph.from_edges(p + q + k - 2, edges)


def generate_gpqn(p: int, q: int, n: int) -> Graph:
    """The shared-vertex infinity graph with a pendant path of ``n`` edges on its center."""
    _check(n >= 0, f"n must be >= 0, got {n}")
    base = generate_infinity(p, 1, q)
    center = p - 1
    edges = list(base.edges)
    prev = center
    for v in range(base.order, base.order + n):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(base.order + n, edges)


def plant_random_trees(base: Graph, extra: int, seed: int) -> Graph:
    """Grow ``extra`` new vertices, each hung on a uniformly chosen existing vertex."""
    _check(extra >= 0, f"extra must be >= 0, got {extra}")
    rng = random.Random(seed)
    edges = list(base.edges)
    for v in range(base.order, base.order + extra):
        edges.append((rng.randrange(v), v))
    return Graph.from_edges(base.order + extra, edges)


def random_tree(order: int, seed: int) -> Graph:
    return plant_random_trees(Graph(1, frozenset()), order - 1, seed)


def random_connected(order: int, extra_edges: int, seed: int) -> Graph:
    """Random tree on ``order`` vertices plus up to ``extra_edges`` random chords."""
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, order)}
    missing = [(u, v) for u in range(order) for v in range(u + 1, order) if (u, v) not in edges]
    edges.update(rng.sample(missing, min(extra_edges, len(missing))))
    return Graph(order, frozenset(edges))


@dataclass(frozen=True)
class BicyclicShape:
    p: int
    q: int
    k: int
    n: int

    def __post_init__(self):
        if self.p > self.q:
            raise ValueError("BicyclicShape expects p <= q")
        if min(self.p, self.q) < 3 or self.k < 1 or self.n < self.k - 1:
            raise ValueError(f"invalid shape {self}")

    @property
    def order(self) -> int:
        return self.p + self.q - 1 + self.n


def leaf_pruned_core(g: Graph) -> set[int]:
    """Vertices left after repeatedly deleting degree-1 vertices."""
    deg = [g.degree(v) for v in range(g.order)]
    alive = set(range(g.order))
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return alive


def _walk(adj, core, start, first):
    # follow degree-2 core vertices from start through first;
    # return (end, edge count, vertex just before end)
    prev, cur, length = start, first, 1
    while True:
        nxt = [w for w in adj[cur] if w in core and w != prev]
        if len(nxt) != 1:
            return cur, length, prev
        prev, cur = cur, nxt[0]
        length += 1


def classify_bicyclic(g: Graph) -> BicyclicShape:
    """Extract ``(p, q, k, n)`` from a bicyclic graph whose cycles share no edge.

    Leaves are stripped until only the 2-core remains. A core with a single
    degree-4 vertex is two cycles sharing that vertex (``k == 1``); a core
    with two degree-3 vertices is either two cycles joined by a path or a
    theta graph, which is rejected.
    """
    if not g.is_connected():
        d = bfs(g, 0)
        raise DisconnectedError(0, d.index(-1))
    if len(g.edges) != g.order + 1:
        raise NotBicyclicError(
            f"not bicyclic: {len(g.edges)} edges on {g.order} vertices (need order + 1)")

    core = leaf_pruned_core(g)
    adj = g.adjacency
    branch = sorted(v for v in core if sum(w in core for w in adj[v]) > 2)

    if len(branch) == 1:
        c = branch[0]
        lengths, seen = [], set()
        for w in adj[c]:
            if w in core and w not in seen:
                _, length, last = _walk(adj, core, c, w)
                seen.update((w, last))
                lengths.append(length)
        p, q = sorted(lengths)
        return BicyclicShape(p, q, 1, g.order - (p + q - 1))

    assert len(branch) == 2, "bicyclic 2-core must have one degree-4 or two degree-3 vertices"

    def loop_and_bridge(a):
        loop = bridge = None
        for w in adj[a]:
            if w in core:
                end, length, _ = _walk(adj, core, a, w)
                if end == a:
                    loop = length
                else:
                    bridge = length
        return loop, bridge

    p, bridge = loop_and_bridge(branch[0])
    q, _ = loop_and_bridge(branch[1])
    if p is None or q is None:
        raise CyclesNotDisjointError("cycles not disjoint: base is a theta graph")
    p, q = sorted((p, q))
    return BicyclicShape(p, q, bridge + 1, g.order - (p + q - 1))

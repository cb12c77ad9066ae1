"""Finite connected simple graphs with canonical arc indexing.

Each undirected edge uv contributes two arcs; edge r (0-based, in input
order) yields arc 2r = (u, v) and arc 2r + 1 = (v, u), so the inverse of
the arc at index ``idx`` sits at ``idx ^ 1``.  Vertex order is index
order, which fixes the row/column order of every derived matrix.

On-disk format: first line ``n m``, then m lines ``u v`` with 0-based
vertex indices; ``#`` starts a comment line.  Loops, duplicate edges and
disconnected graphs are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

import numpy as np

__all__ = [
    "Arc",
    "Graph",
    "GraphFormatError",
    "complete_graph",
    "cycle_graph",
    "parse_graph",
    "path_graph",
    "petersen_graph",
    "random_connected_graph",
    "star_graph",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Arc:
    """A directed edge with its position in the canonical arc order."""

    origin: int
    terminal: int
    index: int

    @property
    def inverse_index(self) -> int:
        return self.index ^ 1


class Graph:
    """Finite connected simple graph."""

    def __init__(self, n: int, edges: list[tuple[int, int]]):
        if n <= 0:
            raise GraphFormatError(f"vertex count must be positive, got {n}")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(
                    f"vertex index out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        self.n = n
        self.edges = list(edges)
        self.arcs: list[Arc] = []
        for r, (u, v) in enumerate(self.edges):
            self.arcs.append(Arc(u, v, 2 * r))
            self.arcs.append(Arc(v, u, 2 * r + 1))
        self._degrees = [0] * n
        for u, v in self.edges:
            self._degrees[u] += 1
            self._degrees[v] += 1
        if not self._connected():
            raise GraphFormatError("graph is not connected")

    def _connected(self) -> bool:
        if self.n == 1:
            return True
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    # -- basic quantities ---------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_arcs(self) -> int:
        return 2 * len(self.edges)

    @property
    def betti_number(self) -> int:
        """m - n + 1; zero exactly for trees."""
        return self.m - self.n + 1

    @property
    def is_tree(self) -> bool:
        return self.betti_number == 0

    def degree(self, u: int) -> int:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} out of range [0, {self.n})")
        return self._degrees[u]

    def inverse_arc(self, arc: Arc) -> Arc:
        return self.arcs[arc.index ^ 1]

    # -- classical matrices -------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def degree_matrix(self) -> np.ndarray:
        return np.diag([float(d) for d in self._degrees])

    def transition_matrix(self) -> np.ndarray:
        """Row-stochastic matrix with 1/d_u on each arc (u, v)."""
        t = self.adjacency_matrix()
        for u in range(self.n):
            t[u, :] /= self._degrees[u]
        return t


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format into a Graph."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    n_expected = m_expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(
                f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(
                f"expected two integers, got {line!r}", line=lineno) from None
        if header is None:
            header = (a, b)
            n_expected, m_expected = a, b
            continue
        if a == b:
            raise GraphFormatError(f"loop edge at vertex {a}", line=lineno)
        if not (0 <= a < n_expected and 0 <= b < n_expected):
            raise GraphFormatError(
                f"vertex index out of range in edge ({a}, {b})", line=lineno)
        if (min(a, b), max(a, b)) in {(min(u, v), max(u, v)) for u, v in edges}:
            raise GraphFormatError(f"duplicate edge ({a}, {b})", line=lineno)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("empty graph file")
    if len(edges) != m_expected:
        raise GraphFormatError(
            f"header declares {m_expected} edges but {len(edges)} were given")
    return Graph(n_expected, edges)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- generators used by tests and the selftest suite ------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the leaves first and the center as the last vertex;
    arc 2r goes leaf -> center, matching the usual arc-order convention."""
    return Graph(leaves + 1, [(i, leaves) for i in range(leaves)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_connected_graph(rng: np.random.Generator, n: int,
                           extra_edge_prob: float = 0.35) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = []
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.append((u, v))
    present = {(min(u, v), max(u, v)) for u, v in edges}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_edge_prob:
                edges.append((u, v))
                present.add((u, v))
    return Graph(n, edges)

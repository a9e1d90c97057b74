"""Undirected multigraphs with loops.

Adjacency matrices (loops count once on the diagonal, following the
classroom convention), walk counting via exact integer matrix powers,
Eulerian classification (loops add two to the degree) and tree testing.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices 0..n-1; edges form a multiset of pairs, loops allowed."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a},{b}) endpoint out of range")
        object.__setattr__(self, "edges", edges)

    def degrees(self) -> list[int]:
        """Vertex degrees; a loop contributes 2."""
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg


@dataclass(frozen=True)
class SquareMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "entries", rows)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def adjacency_matrix(g: Graph) -> SquareMatrix:
    """Entry (i,j) = number of edges between i and j; a loop puts 1 on the diagonal."""
    n = g.vertex_count
    m = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        if a == b:
            m[a][a] += 1
        else:
            m[a][b] += 1
            m[b][a] += 1
    return SquareMatrix(tuple(tuple(row) for row in m))


def matrix_multiply(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.order != b.order:
        raise ValueError("order mismatch")
    n = a.order
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(sum(a.entries[i][k] * b.entries[k][j] for k in range(n)))
        rows.append(tuple(row))
    return SquareMatrix(tuple(rows))


def matrix_power(m: SquareMatrix, k: int) -> SquareMatrix:
    """m**k by repeated squaring on exact Python integers; k=0 gives identity."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    n = m.order
    result = SquareMatrix(
        tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )
    base = m
    while k:
        if k & 1:
            result = matrix_multiply(result, base)
        k >>= 1
        if k:
            base = matrix_multiply(base, base)
    return result


def count_walks(g: Graph, start: int, end: int, length: int) -> int:
    """Walks of the given length = (start,end) entry of A**length."""
    if not (0 <= start < g.vertex_count and 0 <= end < g.vertex_count):
        raise ValueError("vertex out of range")
    return matrix_power(adjacency_matrix(g), length)[start, end]


@dataclass(frozen=True)
class EulerianClass:
    """kind is 'circuit', 'path' or 'none'; endpoints set for paths only."""

    kind: str
    endpoints: tuple[int, int] | None = None


def _connected_on_support(g: Graph) -> bool:
    """Connectivity over vertices of nonzero degree (isolated vertices ignored)."""
    deg = g.degrees()
    support = [v for v in range(g.vertex_count) if deg[v] > 0]
    if not support:
        return True
    adj = {v: [] for v in support}
    for a, b in g.edges:
        if a != b:
            adj[a].append(b)
            adj[b].append(a)
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(support)


def eulerian_class(g: Graph) -> EulerianClass:
    """Classify as Eulerian circuit, open Eulerian path, or neither.

    A trail exists iff the graph (restricted to vertices with edges) is
    connected and has zero or exactly two odd-degree vertices.
    """
    deg = g.degrees()
    if all(d == 0 for d in deg):
        return EulerianClass("circuit")
    if not _connected_on_support(g):
        return EulerianClass("none")
    odd = [v for v in range(g.vertex_count) if deg[v] % 2 == 1]
    if not odd:
        return EulerianClass("circuit")
    if len(odd) == 2:
        return EulerianClass("path", (odd[0], odd[1]))
    return EulerianClass("none")


def is_tree(g: Graph) -> bool:
    """Connected, loop-free, and exactly n-1 edges."""
    if any(a == b for a, b in g.edges):
        return False
    if len(g.edges) != g.vertex_count - 1:
        return False
    # n-1 edges and no isolated vertex short of full connectivity still
    # needs an explicit check (disconnected graphs can have n-1 edges).
    adj = {v: [] for v in range(g.vertex_count)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.vertex_count


def parse_graph(text: str) -> Graph:
    """Parse the CLI graph format: first line n, then one 'i j' per edge.

    Blank lines and #-comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty graph file")
    n = int(lines[0])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, tuple(edges))


def konigsberg() -> Graph:
    """The seven bridges: 4 land masses, degrees 5,3,3,3."""
    return Graph(4, ((0, 1), (0, 1), (0, 2), (0, 2), (0, 3), (1, 3), (2, 3)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))

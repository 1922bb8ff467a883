"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``u ~ v``.  Every
higher-level routine in the package works on these rows directly, so
neighbourhood intersection is a single ``&`` followed by ``bit_count``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, asymmetry)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``; new vertex ``i`` is old ``vertices[i]``."""
        index = {old: new for new, old in enumerate(vertices)}
        rows = []
        for old in vertices:
            row = 0
            for u in iter_bits(self.adj[old]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> u & 1 for u in range(self.n)] for row in self.adj]


def from_edge_list(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from unordered pairs; duplicate pairs collapse."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    rows = [0] * n
    for edge in edges:
        u, v = tuple(edge)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_adjacency_matrix(matrix: Sequence[Sequence[int]]) -> Graph:
    n = len(matrix)
    return Graph(n, tuple(bits_to_mask(u for u in range(n) if matrix[v][u]) for v in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete_graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle_graph needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` is indexed ``a * h.n + b``."""
    rows = []
    for a in range(g.n):
        for b in range(h.n):
            row = h.adj[b] << (a * h.n)
            for a2 in iter_bits(g.adj[a]):
                row |= 1 << (a2 * h.n + b)
            rows.append(row)
    return Graph(g.n * h.n, tuple(rows))


def grid(q: int) -> Graph:
    """The q x q grid (rook's graph), K_q x K_q.  Rows are ``{q*r, ..., q*r + q - 1}``."""
    if q < 2:
        raise GraphError("grid needs q >= 2")
    return cartesian_product(complete_graph(q), complete_graph(q))


# Labeling: 0 is the top vertex, 1..5 the upper pentagon, 6..10 the lower
# pentagon, 11 the bottom vertex.  Upper i meets lower i+5 and i+6 (cyclic).
# Antipodal pairs are 0-11, 1-9, 2-10, 3-6, 4-7, 5-8.
ICOSAHEDRON_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
)


def icosahedron() -> Graph:
    return from_edge_list(12, ICOSAHEDRON_EDGES)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union with cumulative offsets (input ``j`` starts after inputs ``0..j-1``)."""
    if not graphs:
        raise GraphError("disjoint_union needs at least one graph")
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def distance_layers(g: Graph, source: int) -> list[int]:
    """BFS layers from ``source`` as bitmasks; ``layers[i]`` holds the vertices at distance i."""
    layers = [1 << source]
    seen = 1 << source
    frontier = 1 << source
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


@dataclass(frozen=True)
class DistanceTable:
    n: int
    dist: tuple[tuple[float, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> float:
        u, v = pair
        return self.dist[u][v]

    def at_distance(self, x: int, i: int) -> list[int]:
        return [y for y in range(self.n) if self.dist[x][y] == i]

    def max_finite(self) -> int:
        return max(int(d) for row in self.dist for d in row if d != INF)


def distances(g: Graph) -> DistanceTable:
    """All-pairs hop distances; unreachable pairs hold ``INF``."""
    table = []
    for x in range(g.n):
        row: list[float] = [INF] * g.n
        for i, layer in enumerate(distance_layers(g, x)):
            for y in iter_bits(layer):
                row[y] = i
        table.append(tuple(row))
    return DistanceTable(g.n, tuple(table))


def is_connected(g: Graph) -> bool:
    seen = 0
    for layer in distance_layers(g, 0):
        seen |= layer
    return seen == g.full_mask


def diameter(g: Graph) -> float:
    """Largest finite distance, or ``INF`` when ``g`` is disconnected."""
    if not is_connected(g):
        return INF
    return max(len(distance_layers(g, x)) - 1 for x in range(g.n))

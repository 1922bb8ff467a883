"""Maximal cliques, e-regular cliques, clique spreads and triangle censuses.

Cliques are reported as sorted vertex tuples.  Only maximal cliques are
scanned for regularity: a clique that is e-regular with e = |C| is contained
in a larger clique and is reported through that maximal extension instead.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, bits_to_mask, iter_bits

DEFAULT_BUDGET = 1_000_000


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"budget exceeded: spread search visited more than {budget} nodes")
        self.budget = budget


@dataclass(frozen=True)
class RegularClique:
    vertices: tuple[int, ...]
    e: int


@dataclass(frozen=True)
class CliqueSpread:
    cliques: tuple[tuple[int, ...], ...]
    regular: tuple[int | None, ...]


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    mask = bits_to_mask(vertices)
    return all((g.adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Pivoting Bron-Kerbosch; pivot is the lowest-index vertex of P u X maximising |P n N(u)|."""
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(iter_bits(r)))
            return
        pivot, best = -1, -1
        for u in iter_bits(p | x):
            count = (p & adj[u]).bit_count()
            if count > best:
                pivot, best = u, count
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.full_mask, 0)
    out.sort()
    return out


def _nexus_scan(g: Graph, mask: int) -> tuple[int | None, int | None]:
    """(e, None) if every outside vertex sees e >= 1 clique vertices, else (None, first bad vertex)."""
    e = None
    for z in iter_bits(g.full_mask & ~mask):
        count = (g.adj[z] & mask).bit_count()
        if count == 0:
            return None, z
        if e is None:
            e = count
        elif count != e:
            return None, z
    return e, None


def clique_nexus(g: Graph, clique: Iterable[int]) -> int | None:
    """The constant number of clique neighbours of each outside vertex, or None."""
    vertices = sorted(set(clique))
    if not vertices:
        raise ValueError("clique is empty")
    if len(vertices) == g.n:
        raise ValueError("clique covers every vertex; regularity needs an outside vertex")
    if not is_clique(g, vertices):
        raise ValueError(f"{vertices} does not induce a complete subgraph")
    return _nexus_scan(g, bits_to_mask(vertices))[0]


def nexus_violation(g: Graph, clique: Iterable[int]) -> int | None:
    """First outside vertex breaking regularity of ``clique`` (None if regular)."""
    return _nexus_scan(g, bits_to_mask(clique))[1]


def regular_cliques(g: Graph, e: int | None = None) -> list[RegularClique]:
    out = []
    for clique in maximal_cliques(g):
        if len(clique) == g.n:
            continue
        nexus = _nexus_scan(g, bits_to_mask(clique))[0]
        if nexus is not None and (e is None or nexus == e):
            out.append(RegularClique(clique, nexus))
    return out


def find_spread(
    g: Graph,
    require_regular: bool = False,
    e: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> CliqueSpread | None:
    """Exact-cover search for a partition of V into cliques.

    Candidates are the maximal cliques (only the e-regular ones when
    ``require_regular``; singletons are added otherwise).  The search always
    branches on the lowest uncovered vertex and tries larger candidates
    first, then lexicographically smaller ones, so the returned spread is
    deterministic.
    """
    if require_regular:
        candidates = [rc.vertices for rc in regular_cliques(g, e)]
    else:
        candidates = maximal_cliques(g) + [(v,) for v in range(g.n)]
    by_vertex: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for clique in sorted(set(candidates), key=lambda c: (-len(c), c)):
        mask = bits_to_mask(clique)
        for v in clique:
            by_vertex[v].append((mask, clique))

    chosen: list[tuple[int, ...]] = []
    nodes = 0

    def search(covered: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(budget)
        free = g.full_mask & ~covered
        if not free:
            return True
        v = (free & -free).bit_length() - 1
        for mask, clique in by_vertex[v]:
            if mask & covered:
                continue
            chosen.append(clique)
            if search(covered | mask):
                return True
            chosen.pop()
        return False

    if not search(0):
        return None
    parts = tuple(sorted(chosen))
    regular = tuple(
        None if len(c) == g.n else _nexus_scan(g, bits_to_mask(c))[0] for c in parts
    )
    return CliqueSpread(parts, regular)


def delete_clique(g: Graph, clique: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on V minus ``clique`` and the list mapping new index -> old index."""
    removed = set(clique)
    if not removed <= set(range(g.n)):
        raise ValueError("clique has vertices outside the graph")
    if len(removed) == g.n:
        raise ValueError("cannot delete every vertex")
    kept = [v for v in range(g.n) if v not in removed]
    return g.induced_subgraph(kept), kept


@dataclass(frozen=True)
class TriangleCensus:
    per_edge: dict[tuple[int, int], int]
    histogram: dict[int, int]
    triangles: int


def triangle_edge_census(g: Graph) -> TriangleCensus:
    per_edge = {(u, v): (g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges()}
    total = sum(per_edge.values())
    assert total % 3 == 0, "edge-triangle incidences not divisible by 3"
    histogram = dict(sorted(Counter(per_edge.values()).items()))
    return TriangleCensus(per_edge, histogram, total // 3)


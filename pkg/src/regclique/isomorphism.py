"""Isomorphism testing for small graphs: colour refinement then backtracking.

Adequate up to roughly a hundred vertices.  No canonical form is produced.
"""

from __future__ import annotations

from .graph import Graph, distance_layers, iter_bits


def _initial_colours(g: Graph) -> list[tuple]:
    out = []
    for x in range(g.n):
        out.append((g.degree(x), tuple(layer.bit_count() for layer in distance_layers(g, x))))
    return out


def refine_jointly(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Stable colour refinement run on both graphs with one shared palette."""
    sig_g = _initial_colours(g)
    sig_h = _initial_colours(h)
    n_classes = -1
    while True:
        palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
        col_g = [palette[s] for s in sig_g]
        col_h = [palette[s] for s in sig_h]
        if len(palette) == n_classes:
            return col_g, col_h
        n_classes = len(palette)
        sig_g = [(col_g[x], tuple(sorted(col_g[y] for y in iter_bits(g.adj[x])))) for x in range(g.n)]
        sig_h = [(col_h[x], tuple(sorted(col_h[y] for y in iter_bits(h.adj[x])))) for x in range(h.n)]


def _search_order(g: Graph, colour: list[int]) -> list[int]:
    class_size: dict[int, int] = {}
    for c in colour:
        class_size[c] = class_size.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        # most already-placed neighbours first, then rarest colour, then index
        nxt = min(remaining, key=lambda v: (-(g.adj[v] & placed).bit_count(), class_size[colour[v]], v))
        order.append(nxt)
        placed |= 1 << nxt
        remaining.discard(nxt)
    return order


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``mapping`` with ``mapping[u]`` the image of ``u`` in ``h``, or None."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    col_g, col_h = refine_jointly(g, h)
    if sorted(col_g) != sorted(col_h):
        return None

    by_colour: dict[int, list[int]] = {}
    for w, c in enumerate(col_h):
        by_colour.setdefault(c, []).append(w)
    order = _search_order(g, col_g)
    earlier_nbrs = []
    placed = 0
    for u in order:
        earlier_nbrs.append(g.adj[u] & placed)
        placed |= 1 << u

    mapping = [-1] * g.n

    def extend(depth: int, used: int) -> bool:
        if depth == g.n:
            return True
        u = order[depth]
        image = 0
        for u2 in iter_bits(earlier_nbrs[depth]):
            image |= 1 << mapping[u2]
        for w in by_colour[col_g[u]]:
            if used >> w & 1 or (h.adj[w] & used) != image:
                continue
            mapping[u] = w
            if extend(depth + 1, used | (1 << w)):
                return True
        mapping[u] = -1
        return False

    if extend(0, 0):
        return mapping
    return None


def is_isomorphism(g: Graph, h: Graph, mapping: list[int]) -> bool:
    """Check that ``mapping`` is a bijection preserving adjacency and non-adjacency."""
    if g.n != h.n or sorted(mapping) != list(range(h.n)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None

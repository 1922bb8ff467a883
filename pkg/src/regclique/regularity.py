"""Exact certifiers for the regularity hierarchy.

Each property has a ``certify_*`` function that returns a certificate or
raises :class:`NotCertified` carrying a witness, and a ``*_params`` style
wrapper that returns ``None`` instead of raising.  Witnesses come from the
first violation in a fixed lexicographic scan, so they are reproducible.

Complete graphs are edge-regular with lambda = v - 2 but are never certified
strongly regular: they have no nonadjacent pairs, so mu is undefined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .graph import INF, Graph, diameter, distance_layers, distances, is_connected, iter_bits


class NotCertified(Exception):
    def __init__(self, prop: str, reason: str, witness: Any = ()):
        super().__init__(f"{prop}: {reason}")
        self.prop = prop
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True)
class EdgeRegularCert:
    v: int
    k: int
    lam: int

    def __post_init__(self) -> None:
        assert self.v >= 2 and self.k >= 1 and 0 <= self.lam <= self.k - 1
        assert self.v * self.k % 2 == 0

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.v, self.k, self.lam)


@dataclass(frozen=True)
class StronglyRegularCert:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        assert self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class IntersectionArray:
    d: int
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.b) == self.d and len(self.c) == self.d
        assert self.c[0] == 1
        assert all(x >= 1 for x in self.b) and all(x >= 1 for x in self.c)
        assert all(a >= 0 for a in self.a)

    @property
    def k(self) -> int:
        return self.b[0]

    @property
    def a(self) -> tuple[int, ...]:
        """a_1..a_d, with b_d taken as 0."""
        bs = self.b[1:] + (0,)
        return tuple(self.k - bi - ci for bi, ci in zip(bs, self.c))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class AntipodalCert:
    a: int
    classes: tuple[tuple[int, ...], ...] = field(repr=False)


def common_neighbour_count(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbour_count needs two distinct vertices")
    return (g.adj[u] & g.adj[v]).bit_count()


def certify_regular(g: Graph) -> int:
    degs = g.degrees()
    for v in range(1, g.n):
        if degs[v] != degs[0]:
            raise NotCertified("regular", f"deg({0})={degs[0]} but deg({v})={degs[v]}", (0, v))
    return degs[0]


def regular_degree(g: Graph) -> int | None:
    try:
        return certify_regular(g)
    except NotCertified:
        return None


def certify_edge_regular(g: Graph) -> EdgeRegularCert:
    k = certify_regular(g)
    if k == 0:
        raise NotCertified("edge_regular", "graph has no edges")
    first = None
    lam = None
    for u, v in g.edges():
        count = (g.adj[u] & g.adj[v]).bit_count()
        if lam is None:
            first, lam = (u, v), count
        elif count != lam:
            raise NotCertified(
                "edge_regular",
                f"edge {first} has {lam} common neighbours but edge {(u, v)} has {count}",
                (first, (u, v)),
            )
    return EdgeRegularCert(g.n, k, lam)


def edge_regular_params(g: Graph) -> EdgeRegularCert | None:
    try:
        return certify_edge_regular(g)
    except NotCertified:
        return None


def mu_census(g: Graph) -> Counter[int]:
    """How many distinct nonadjacent pairs share each common-neighbour count."""
    census: Counter[int] = Counter()
    for u in range(g.n):
        non = g.full_mask & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non):
            census[(g.adj[u] & g.adj[v]).bit_count()] += 1
    return census


def mu_multiset(g: Graph) -> frozenset[int]:
    """The set of common-neighbour counts over distinct nonadjacent pairs (empty if complete)."""
    return frozenset(mu_census(g))


def mu_witnesses(g: Graph) -> dict[int, tuple[int, int]]:
    """Lexicographically first nonadjacent pair realising each common-neighbour count."""
    first: dict[int, tuple[int, int]] = {}
    for u in range(g.n):
        non = g.full_mask & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non):
            first.setdefault((g.adj[u] & g.adj[v]).bit_count(), (u, v))
    return first


def certify_strongly_regular(g: Graph) -> StronglyRegularCert:
    er = certify_edge_regular(g)
    if g.is_complete():
        raise NotCertified("strongly_regular", "complete graph: no nonadjacent pairs, mu undefined")
    first = None
    mu = None
    for u in range(g.n):
        non = g.full_mask & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in iter_bits(non):
            count = (g.adj[u] & g.adj[v]).bit_count()
            if mu is None:
                first, mu = (u, v), count
            elif count != mu:
                raise NotCertified(
                    "strongly_regular",
                    f"nonadjacent pair {first} has {mu} common neighbours but {(u, v)} has {count}",
                    (first, (u, v)),
                )
    return StronglyRegularCert(er.v, er.k, er.lam, mu)


def strongly_regular_params(g: Graph) -> StronglyRegularCert | None:
    try:
        return certify_strongly_regular(g)
    except NotCertified:
        return None


def certify_distance_regular(g: Graph) -> IntersectionArray:
    if not is_connected(g):
        raise NotCertified("distance_regular", "graph is disconnected")
    if g.n == 1:
        raise NotCertified("distance_regular", "graph has no edges")
    # (x, y, i, value) of the first pair that fixed each constant
    b_first: dict[int, tuple[int, int, int]] = {}
    c_first: dict[int, tuple[int, int, int]] = {}
    a_first: dict[int, tuple[int, int, int]] = {}
    d = 0
    for x in range(g.n):
        layers = distance_layers(g, x)
        d = max(d, len(layers) - 1)
        for i, layer in enumerate(layers):
            before = layers[i - 1] if i > 0 else 0
            after = layers[i + 1] if i + 1 < len(layers) else 0
            for y in iter_bits(layer):
                row = g.adj[y]
                for name, table, value in (
                    ("c", c_first, (row & before).bit_count()),
                    ("a", a_first, (row & layer).bit_count()),
                    ("b", b_first, (row & after).bit_count()),
                ):
                    if i == 0 and name == "c":
                        continue
                    prev = table.setdefault(i, (x, y, value))
                    if prev[2] != value:
                        raise NotCertified(
                            "distance_regular",
                            f"{name}_{i} is {prev[2]} for pair {prev[:2]} but {value} for {(x, y)}",
                            (name, i, prev, (x, y, value)),
                        )
    return IntersectionArray(
        d,
        tuple(b_first[i][2] for i in range(d)),
        tuple(c_first[i][2] for i in range(1, d + 1)),
    )


def intersection_array(g: Graph) -> IntersectionArray | None:
    try:
        return certify_distance_regular(g)
    except NotCertified:
        return None


def certify_antipodal(g: Graph) -> AntipodalCert:
    """Fibres of the relation "distance 0 or diameter", if it is an equivalence with classes of size >= 2.

    Raises ``ValueError`` for disconnected graphs or diameter <= 1.
    """
    d = diameter(g)
    if d == INF:
        raise ValueError("antipodality needs a connected graph")
    if d <= 1:
        raise ValueError("antipodality needs diameter >= 2")
    dist = distances(g)
    related = [[dist[x, y] in (0, d) for y in range(g.n)] for x in range(g.n)]
    for x in range(g.n):
        for y in range(g.n):
            if not related[x][y] or x == y:
                continue
            for z in range(g.n):
                if z != x and related[y][z] and not related[x][z]:
                    raise NotCertified("antipodal", f"{x}R{y} and {y}R{z} but not {x}R{z}", (x, y, z))
    classes = []
    seen = set()
    for x in range(g.n):
        if x not in seen:
            fibre = tuple(y for y in range(g.n) if related[x][y])
            seen.update(fibre)
            classes.append(fibre)
    sizes = sorted({len(c) for c in classes})
    if len(sizes) > 1:
        small = next(c for c in classes if len(c) == sizes[0])
        big = next(c for c in classes if len(c) == sizes[-1])
        raise NotCertified("antipodal", f"classes of unequal size {sizes}", (small, big))
    if sizes[0] < 2:
        raise NotCertified("antipodal", "classes have size 1", (classes[0],))
    return AntipodalCert(sizes[0], tuple(classes))


def antipodal_classes(g: Graph) -> AntipodalCert | None:
    try:
        return certify_antipodal(g)
    except NotCertified:
        return None


def is_taylor(g: Graph) -> bool:
    """2-antipodal distance-regular graph of diameter 3."""
    ia = intersection_array(g)
    if ia is None or ia.d != 3:
        return False
    cert = antipodal_classes(g)
    return cert is not None and cert.a == 2

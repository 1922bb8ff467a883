"""The F_t construction over antipodal distance-regular graphs of diameter 3.

``F_t(G)`` takes ``t`` copies of ``G``.  Copy ``j`` (0-based) of vertex ``x``
is vertex ``j * v + x``.  Besides the copy edges, every vertex is joined to
every copy of every other member of its antipodal fibre (inside its own copy
too) and to its own copies in the other copies.  Each fibre, taken across all
copies, becomes a clique of size ``t * a = lambda + 2``; those cliques form a
spread of 1-regular cliques.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import clique_nexus, is_clique
from .graph import Graph, bits_to_mask
from .regularity import (
    AntipodalCert,
    EdgeRegularCert,
    IntersectionArray,
    NotCertified,
    certify_antipodal,
    certify_distance_regular,
    certify_edge_regular,
    edge_regular_params,
    is_taylor,
    mu_witnesses,
    strongly_regular_params,
)
from .report import AuditReport, Claim


class PlanError(ValueError):
    """The base graph or copy count fails a hypothesis of the construction."""


@dataclass(frozen=True)
class FtPlan:
    base: Graph
    t: int
    a: int
    d: int
    er: EdgeRegularCert
    ia: IntersectionArray
    fibres: AntipodalCert

    @property
    def v(self) -> int:
        return self.base.n

    @property
    def clique_size(self) -> int:
        return self.er.lam + 2

    def expected_params(self) -> tuple[int, int, int]:
        v, k, lam = self.er.params
        return (v * (lam + 2) // self.a, k + lam + 1, lam)

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "t": self.t,
            "a": self.a,
            "d": self.d,
            "edge_regular": list(self.er.params),
            "intersection_array": str(self.ia),
            "expected_params": list(self.expected_params()),
        }


def plan_ft(base: Graph, t: int) -> FtPlan:
    """Validate every hypothesis of the construction from scratch.

    Raises :class:`PlanError` naming the first one that fails.
    """
    try:
        ia = certify_distance_regular(base)
    except NotCertified as exc:
        if exc.reason == "graph is disconnected":
            raise PlanError("base is not connected") from exc
        raise PlanError(f"base is not distance-regular ({exc.reason})") from exc
    if ia.d != 3:
        raise PlanError(f"diameter ≠ 3 (base has diameter {ia.d})")
    try:
        fibres = certify_antipodal(base)
    except NotCertified as exc:
        raise PlanError(f"base is not antipodal ({exc.reason})") from exc
    er = certify_edge_regular(base)
    a, lam = fibres.a, er.lam
    if (lam + 2) % a or a == lam + 2:
        raise PlanError(f"a = {a} is not a proper divisor of lambda + 2 = {lam + 2}")
    if t != (lam + 2) // a:
        raise PlanError(f"t mismatch: (lambda + 2) / a = {(lam + 2) // a}, got t = {t}")
    return FtPlan(base, t, a, ia.d, er, ia, fibres)


def _fibre_masks(plan: FtPlan) -> list[int]:
    masks = [0] * plan.v
    for fibre in plan.fibres.classes:
        mask = bits_to_mask(fibre)
        for x in fibre:
            masks[x] = mask
    return masks


def build_ft(plan: FtPlan) -> Graph:
    v, t = plan.v, plan.t
    fibre = _fibre_masks(plan)
    rows = []
    for i in range(t):
        for x in range(v):
            row = plan.base.adj[x] << (i * v)
            for j in range(t):
                row |= fibre[x] << (j * v)
            rows.append(row & ~(1 << (i * v + x)))
    return Graph(v * t, tuple(rows))


def canonical_spread(plan: FtPlan) -> list[tuple[int, ...]]:
    """One clique per fibre (ordered by smallest member): all copies of the fibre."""
    out = []
    for fibre in sorted(plan.fibres.classes):
        out.append(tuple(sorted(j * plan.v + y for j in range(plan.t) for y in fibre)))
    return out


def taylor_copy_count(base: Graph) -> int | None:
    """``lambda / 2 + 1`` for a Taylor graph, else None."""
    if not is_taylor(base):
        return None
    lam = certify_edge_regular(base).lam
    return lam // 2 + 1


def verify_construction(plan: FtPlan, graph: Graph | None = None) -> AuditReport:
    """Build F_t and check its three advertised properties; failures become report entries."""
    f = build_ft(plan) if graph is None else graph
    report = AuditReport()
    report.record_input("base", plan.base)
    report.record_input("F", f)
    size = plan.clique_size

    spread = canonical_spread(plan)
    covered = sorted(x for c in spread for x in c)
    nexus = [clique_nexus(f, c) if is_clique(f, c) else None for c in spread]
    report.add(Claim(
        "construction.spread",
        f"F_{plan.t} has a spread of 1-regular cliques of size lambda + 2 = {size}",
        covered == list(range(f.n)) and all(len(c) == size for c in spread) and all(e == 1 for e in nexus),
        params={"cliques": len(spread), "size": size},
        witness={"cliques": spread, "nexus": nexus},
    ))

    expected = plan.expected_params()
    er = edge_regular_params(f)
    report.add(Claim(
        "construction.edge_regular",
        f"F_{plan.t} is edge-regular with parameters (v(lambda+2)/a, k+lambda+1, lambda) = {expected}",
        er is not None and er.params == expected,
        params={"expected": expected, "actual": None if er is None else er.params},
    ))

    srg = strongly_regular_params(f)
    firsts = mu_witnesses(f)
    v = plan.v
    base_mu = mu_witnesses(plan.base)
    eta = min(m for m in base_mu if m > 0) if any(m > 0 for m in base_mu) else None
    same_copy = cross_copy = None
    if eta is not None:
        y, z = base_mu[eta]
        same_copy = {"pair": (y, z), "base_common": eta, "common": (f.adj[y] & f.adj[z]).bit_count()}
    for z in range(v, f.n):
        if not f.has_edge(0, z):
            cross_copy = {"pair": (0, z), "common": (f.adj[0] & f.adj[z]).bit_count()}
            break
    holds = (
        srg is None
        and len(firsts) >= 2
        and same_copy is not None
        and same_copy["common"] == eta + 2
        and cross_copy is not None
        and cross_copy["common"] == 2
    )
    report.add(Claim(
        "construction.not_srg",
        f"F_{plan.t} is not strongly regular: same-copy pairs give eta + 2, cross-copy pairs give 2",
        holds,
        params={"mu_values": sorted(firsts)},
        witness={"first_pair_per_mu": firsts, "same_copy": same_copy, "cross_copy": cross_copy},
    ))
    return report

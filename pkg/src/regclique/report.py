"""Claim records and JSON reports (schema ``report_v1``)."""

from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph
from .graph6 import emit_graph6
from .regularity import NotCertified

SCHEMA = "report_v1"


def jsonable(obj: Any) -> Any:
    """Convert tuples, sets and dataclass-free containers into plain JSON values."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    return obj


@dataclass
class Claim:
    id: str
    statement: str
    holds: bool
    params: Any = None
    witness: Any = None
    assumption: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "statement": self.statement,
            "holds": bool(self.holds),
            "assumption": self.assumption,
            "params": jsonable(self.params),
            "witness": jsonable(self.witness),
        }


@dataclass
class AuditReport:
    claims: list[Claim] = field(default_factory=list)
    inputs: dict[str, str] = field(default_factory=dict)

    def add(self, claim: Claim) -> Claim:
        self.claims.append(claim)
        return claim

    def record_input(self, name: str, g: Graph) -> None:
        self.inputs[name] = emit_graph6(g)

    def extend(self, other: AuditReport) -> None:
        self.claims.extend(other.claims)
        self.inputs.update(other.inputs)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.claims)

    def __getitem__(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "all_hold": self.all_hold,
            "inputs": dict(self.inputs),
            "claims": [c.to_dict() for c in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        for c in self.claims:
            tag = "ASSUMED" if c.assumption else ("PASS" if c.holds else "FAIL")
            lines.append(f"[{tag}] {c.id}: {c.statement}")
        lines.append(f"overall: {'PASS' if self.all_hold else 'FAIL'}")
        return "\n".join(lines)


def certificate_record(prop: str, certify: Callable[[Graph], Any], g: Graph) -> dict[str, Any]:
    """Run a ``certify_*`` function and wrap the outcome as a property record."""
    try:
        cert = certify(g)
    except NotCertified as exc:
        return {"property": prop, "holds": False, "params": [], "witness": jsonable(exc.witness),
                "reason": exc.reason}
    params = getattr(cert, "params", cert)
    return {"property": prop, "holds": True, "params": jsonable(params), "witness": []}

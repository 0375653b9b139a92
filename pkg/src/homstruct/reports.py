"""Check reports: one machine-readable dict per structure plus a stable
human rendering. The machine format round-trips through JSON exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .axioms import Verdict
from .linalg import Tensor2, Tensor3, Vector
from .oracle import OracleResult

REPORT_VERSION = 1


def _format_value(fieldobj, value):
    if isinstance(value, Vector):
        return {"vector": [fieldobj.format(x) for x in value.coords]}
    if isinstance(value, Tensor2):
        return {"tensor2": [[fieldobj.format(x) for x in row]
                            for row in value.entries]}
    if isinstance(value, Tensor3):
        return {"tensor3": [[[fieldobj.format(x) for x in row]
                             for row in plane] for plane in value.entries]}
    return {"raw": repr(value)}


def witness_row(fieldobj, w, basis) -> dict:
    return {
        "axiom": w.axiom,
        "where": w.where,
        "basis": [basis[i] for i in w.at],
        "lhs": _format_value(fieldobj, w.lhs),
        "rhs": _format_value(fieldobj, w.rhs),
    }


def check_row(check_id: str, verdict: Verdict, fieldobj, basis,
              oracle: Optional[OracleResult] = None) -> dict:
    row = {
        "check": check_id,
        "status": verdict.status,
        "witnesses": [witness_row(fieldobj, w, basis)
                      for w in verdict.witnesses],
        "info": [{"name": note.name, "holds": note.holds}
                 for note in verdict.info],
    }
    if verdict.truncated:
        row["witnesses-truncated"] = True
    if oracle is not None:
        row["oracle"] = {"status": oracle.status, "samples": oracle.samples,
                         "seed": oracle.seed,
                         "mismatches": list(oracle.mismatches)}
    return row


@dataclass
class Report:
    structure: str
    kind: str
    checks: list = field(default_factory=list)
    defects: list = field(default_factory=list)
    annotations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.defects and all(c["status"] == "pass"
                                        for c in self.checks)

    def to_dict(self) -> dict:
        out = {
            "format-version": REPORT_VERSION,
            "structure": self.structure,
            "kind": self.kind,
            "checks": self.checks,
        }
        if self.defects:
            out["defects"] = self.defects
        if self.annotations:
            out["annotations"] = self.annotations
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d.get("structure", ""), d.get("kind", ""),
                   list(d.get("checks", [])), list(d.get("defects", [])),
                   list(d.get("annotations", [])))

    def render_human(self) -> str:
        lines = [f"structure {self.structure} ({self.kind})"]
        for d in self.defects:
            lines.append(f"  defect: {d}")
        for c in self.checks:
            head = f"  {c['check']}: {c['status'].upper()}"
            oracle = c.get("oracle")
            if oracle is not None:
                head += (f"  [oracle {oracle['status']}, "
                         f"{oracle['samples']} samples, seed {oracle['seed']}]")
            lines.append(head)
            for w in c["witnesses"]:
                where = f"{w['where']}/" if w["where"] else ""
                at = ", ".join(w["basis"])
                lines.append(f"    witness {where}{w['axiom']} @ ({at}): "
                             f"lhs={_brief(w['lhs'])} rhs={_brief(w['rhs'])}")
            if c.get("witnesses-truncated"):
                lines.append("    (witness list truncated at the cap)")
            for note in c["info"]:
                state = "holds" if note["holds"] else "fails"
                lines.append(f"    info {note['name']}: {state}")
        for a in self.annotations:
            lines.append(f"  note: {a}")
        return "\n".join(lines)


def _brief(value: dict) -> str:
    for key in ("vector", "tensor2", "tensor3", "raw"):
        if key in value:
            return str(value[key]).replace("'", "")
    return "?"

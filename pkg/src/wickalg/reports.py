"""Report objects and JSON serialization for relation systems and check results.

Rational scalars are serialized as decimal strings ``"p/q"`` (or ``"p"``),
which round-trips bit-exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .algebra import CoeffTensor, RelationSystem
from .scalars import Scalar

__all__ = [
    "SCHEMA_VERSION",
    "TOOL_VERSION",
    "Report",
    "rational_str",
    "parse_rational_str",
    "scalar_to_json",
    "scalar_from_json",
    "relations_to_json",
    "relations_from_json",
    "save_relations",
    "load_relations",
    "save_report",
    "load_report",
]

SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"


def rational_str(q) -> str:
    """Exact decimal string "p/q" (or "p" when the denominator is 1)."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rational_str(s: str):
    from .scalars import rational

    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return rational(int(p), int(q))
    return rational(int(s))


def scalar_to_json(c: Scalar) -> dict:
    return {"re": rational_str(c.re), "im": rational_str(c.im)}


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, str):
        return Scalar(parse_rational_str(obj))
    return Scalar(
        parse_rational_str(obj.get("re", "0")),
        parse_rational_str(obj.get("im", "0")),
    )


@dataclass
class Report:
    """A serializable record of one tool invocation's checks."""

    tool: str
    relation: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION

    def add_check(self, name: str, **fields) -> dict:
        rec = {"name": name, **fields}
        self.checks.append(rec)
        return rec

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "tool": self.tool,
            "relation": self.relation,
            "checks": self.checks,
            "timing": self.timing,
        }

    @staticmethod
    def from_json_dict(obj: dict) -> "Report":
        return Report(
            tool=obj["tool"],
            relation=obj.get("relation", {}),
            checks=obj.get("checks", []),
            timing=obj.get("timing", {}),
            schema_version=obj.get("schema_version", SCHEMA_VERSION),
            tool_version=obj.get("tool_version", TOOL_VERSION),
        )


# ---------------------------------------------------------------------------
# Relation files
# ---------------------------------------------------------------------------


def relations_to_json(rs: RelationSystem) -> dict:
    from .exprparse import print_polynomial

    entries = []
    for (i, j, k, l), c in sorted(rs.tensor.entries.items()):
        entries.append(
            {"i": i, "j": j, "k": k, "l": l,
             "re": rational_str(c.re), "im": rational_str(c.im)}
        )
    return {
        "schema_version": SCHEMA_VERSION,
        "d": rs.d,
        "entries": entries,
        "ideal_generators": [print_polynomial(g) for g in rs.ideal_generators],
        "name": rs.name,
        "params": {k: rational_str(v) for k, v in rs.params.items()},
    }


def relations_from_json(obj: dict, warn=None) -> RelationSystem:
    from .algebra import hermiticity_check
    from .exprparse import parse_expression

    d = int(obj["d"])
    entries = {}
    for e in obj.get("entries", []):
        key = (int(e["i"]), int(e["j"]), int(e["k"]), int(e["l"]))
        entries[key] = Scalar(
            parse_rational_str(e.get("re", "0")),
            parse_rational_str(e.get("im", "0")),
        )
    T = CoeffTensor(d, entries)
    if not hermiticity_check(T) and warn is not None:
        warn("relation tensor is not hermitian")
    gens = [parse_expression(s, d) for s in obj.get("ideal_generators", [])]
    params = {k: parse_rational_str(v) for k, v in obj.get("params", {}).items()}
    return RelationSystem(T, gens, obj.get("name", ""), params)


def save_relations(rs: RelationSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(relations_to_json(rs), fh, indent=2)
        fh.write("\n")


def load_relations(path, warn=None) -> RelationSystem:
    with open(path, encoding="utf-8") as fh:
        return relations_from_json(json.load(fh), warn=warn)


def save_report(report: Report, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json_dict(), fh, indent=2)
        fh.write("\n")


def load_report(path) -> Report:
    with open(path, encoding="utf-8") as fh:
        return Report.from_json_dict(json.load(fh))

"""Structural verdicts shared by the KS and finite-field labs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

LINEAR_IN_Z = "linear-in-z"
PRODUCT_FORM = "product-form"
DEGREE_DIVISIBILITY = "degree-divisibility"
ZERO_PAIR = "zero-pair"

KS = "KS"
NOT_KS = "not-KS"
CONJECTURE_HOLDS = "conjecture-holds"


@dataclass(frozen=True)
class StructuralVerdict:
    criterion: str
    conclusion: str
    witness: dict[str, Any] = field(default_factory=dict)
    note: str = ""

    @property
    def refutes(self) -> bool:
        return self.conclusion == NOT_KS

    def to_json(self) -> dict:
        def enc(v):
            if hasattr(v, "to_json"):
                return v.to_json()
            if isinstance(v, (bool, int, str)) or v is None:
                return v
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return str(v)

        out = {
            "criterion": self.criterion,
            "conclusion": self.conclusion,
            "witness": {k: enc(v) for k, v in self.witness.items()},
        }
        if self.note:
            out["note"] = self.note
        return out

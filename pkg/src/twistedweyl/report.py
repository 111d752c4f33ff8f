"""Verification reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any


@dataclass
class VerificationReport:
    theorem: str
    bound: int
    classes: int = 0
    elements: int = 0
    counterexamples: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, message: str) -> None:
        self.counterexamples.append(message)

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "bound": self.bound,
            "status": self.status,
            "classes": self.classes,
            "elements": self.elements,
            "counterexamples": list(self.counterexamples),
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def report_schema() -> dict:
    text = resources.files("twistedweyl").joinpath("data/report.schema.json").read_text()
    return json.loads(text)


def validate_report(data: dict) -> None:
    import jsonschema

    jsonschema.validate(data, report_schema())

"""JSON report objects emitted by the command-line tool.

Field order is fixed so that identical runs print identical bytes; the tool
version lives only in the ``tool_version`` header field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from importlib import resources

from . import __version__

TOOL = "pgst"


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, allow_nan=False)


def header(command: str) -> dict:
    return {"tool": TOOL, "tool_version": __version__, "command": command}


def load_schema() -> dict:
    return json.loads(resources.files("pgst").joinpath("report.schema.json").read_text("utf-8"))


@dataclass
class AnalysisReport:
    """Output of ``decide`` and ``peak``."""

    command: str
    input: dict
    model: str
    operator: str
    pair: list
    cospectral: bool
    strongly_cospectral: bool
    support: list | None = None
    sigma: list | None = None
    decision: dict = field(default_factory=lambda: {"status": "unavailable", "reason": ""})
    peak: dict | None = None
    parameters: dict = field(default_factory=dict)
    tool: str = TOOL
    tool_version: str = __version__

    _ORDER = ("tool", "tool_version", "command", "input", "model", "operator", "pair",
              "cospectral", "strongly_cospectral", "support", "sigma", "decision", "peak",
              "parameters")

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in self._ORDER}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

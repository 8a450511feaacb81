"""Structured results for verification suites and randomized experiments."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    first_violation: int | None = None
    detail: str = ""


@dataclass
class ExperimentReport:
    """Outcome of a suite or experiment.

    Verification suites fill ``checks``; sampling experiments fill ``per_n``
    with ``{n, stat_max, stat_mean, witness}`` rows. ``verdict`` is "pass" or
    "fail" for suites and a short summary string for experiments.
    """

    experiment: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | str | None = None
    per_n: list[dict[str, Any]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    verdict: str = ""
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def finalize(self) -> "ExperimentReport":
        if self.checks:
            self.verdict = "pass" if self.passed else "fail"
        return self

    def merge(self, other: "ExperimentReport") -> "ExperimentReport":
        """Concatenate two shards of the same suite; associative."""
        out = ExperimentReport(
            experiment=self.experiment,
            params={**self.params, **other.params},
            seed=self.seed,
            per_n=self.per_n + other.per_n,
            checks=self.checks + other.checks,
            extras={**self.extras, **other.extras},
        )
        return out.finalize()

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False, ensure_ascii=False)

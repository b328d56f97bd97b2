# src/harness/report.py
# Result objects for sweeps and censuses.

from dataclasses import dataclass, field
from typing import Any, List, Optional


@dataclass(frozen=True)
class Failure:
    """
    One failing case: what was checked, what was expected, what came out.
    All three are plain strings so reports serialize and compare byte for byte.
    """
    input: str
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"input": self.input, "expected": self.expected, "actual": self.actual}


@dataclass
class SweepReport:
    theorem_id: str
    n_max: int
    cases_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    # Observational sweeps (open questions) list their findings here instead of failing
    observations: List[Failure] = field(default_factory=list)
    observational: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures and self.cases_checked > 0

    def record(self, outcome: Optional[Failure]) -> None:
        self.cases_checked += 1
        if outcome is None:
            return
        if self.observational:
            self.observations.append(outcome)
        else:
            self.failures.append(outcome)

    def to_json(self, include_time: bool = True) -> dict:
        payload: dict = {
            "theorem": self.theorem_id,
            "n_max": self.n_max,
            "cases_checked": self.cases_checked,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
        }
        if self.observational:
            payload["observations"] = [o.to_json() for o in self.observations]
        if include_time:
            payload["wall_time"] = round(self.wall_time, 3)
        return payload

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"{self.theorem_id} (n <= {self.n_max}): {status}, "
            f"{self.cases_checked} cases, {len(self.failures)} failures, {self.wall_time:.2f}s"
        ]
        for failure in self.failures:
            lines.append(f"  {failure.input}: expected {failure.expected}, got {failure.actual}")
        if self.observational:
            lines.append(f"  {len(self.observations)} observations")
            for note in self.observations:
                lines.append(f"  {note.input}: {note.expected} vs {note.actual}")
        return "\n".join(lines)


@dataclass
class CensusTable:
    kind: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"kind": self.kind, "columns": list(self.columns), "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        widths = [
            max(len(str(c)), *(len(str(r[i])) for r in self.rows)) if self.rows else len(str(c))
            for i, c in enumerate(self.columns)
        ]
        lines = ["  ".join(str(c).ljust(w) for c, w in zip(self.columns, widths))]
        for row in self.rows:
            lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))
        return "\n".join(lines)

"""Verification reports: stable structured form plus a text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .errors import ScenarioFormatError

REPORT_FORMAT_VERSION = 1


@dataclass
class ScenarioResult:
    name: str
    family: str
    verdict: bool
    max_probability_deviation: float | None = None
    min_fidelity: float | None = None
    missing: list[str] = field(default_factory=list)
    extra: list[str] = field(default_factory=list)
    detail: str = ""


@dataclass
class VerificationReport:
    scenarios: list[ScenarioResult]
    tolerance: float
    seed: int | None = None
    runtime_seconds: float = 0.0
    errata: list[dict] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(s.verdict for s in self.scenarios)

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT_VERSION,
            "overall": "pass" if self.overall else "fail",
            "tolerance": self.tolerance,
            "seed": self.seed,
            "runtime_seconds": self.runtime_seconds,
            "scenarios": [asdict(s) for s in self.scenarios],
            "errata": list(self.errata),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "VerificationReport":
        if not isinstance(doc, dict) or doc.get("format") != REPORT_FORMAT_VERSION:
            raise ScenarioFormatError(
                f"unsupported report format {doc.get('format') if isinstance(doc, dict) else doc!r}"
            )
        scenarios = [ScenarioResult(**entry) for entry in doc["scenarios"]]
        report = cls(
            scenarios=scenarios,
            tolerance=doc["tolerance"],
            seed=doc["seed"],
            runtime_seconds=doc["runtime_seconds"],
            errata=list(doc["errata"]),
        )
        stated = doc.get("overall")
        if stated != ("pass" if report.overall else "fail"):
            raise ScenarioFormatError("report verdict is inconsistent with scenarios")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScenarioFormatError(f"invalid report JSON: {exc}") from exc
        return cls.from_dict(doc)


def render_text(report: VerificationReport) -> str:
    lines = []
    for s in report.scenarios:
        status = "PASS" if s.verdict else "FAIL"
        parts = [f"[{status}] {s.name}"]
        if s.max_probability_deviation is not None:
            parts.append(f"dp={s.max_probability_deviation:.2e}")
        if s.min_fidelity is not None:
            parts.append(f"fid={s.min_fidelity:.12f}")
        if s.missing:
            parts.append(f"missing={s.missing}")
        if s.extra:
            parts.append(f"extra={s.extra}")
        if s.detail and not s.verdict:
            parts.append(s.detail)
        lines.append("  ".join(parts))
    passed = sum(1 for s in report.scenarios if s.verdict)
    lines.append(
        f"{passed}/{len(report.scenarios)} scenarios passed "
        f"(tol={report.tolerance:g}, {report.runtime_seconds:.2f}s)"
    )
    if report.errata:
        lines.append("errata (published form vs implemented form):")
        for entry in report.errata:
            lines.append(f"  - {entry['id']} [{entry['status']}]")
            lines.append(f"      published:   {entry['published_form']}")
            lines.append(f"      implemented: {entry['implemented_form']}")
    lines.append(f"overall: {'pass' if report.overall else 'fail'}")
    return "\n".join(lines)

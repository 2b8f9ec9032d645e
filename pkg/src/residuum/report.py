"""Claim reports and their serialization.

A ClaimReport is one verdict-ledger entry: which claim was checked, over
what range, how many cases, which counterexamples. Reports serialize to
JSON (one object per claim, sorted keys) or CSV (violations flattened one
per row). Serialized content is fully determined by the swept inputs;
wall-clock runtime is kept in memory only so identical sweeps produce
byte-identical files regardless of worker count.
"""

import csv
import io
import json
import os
from dataclasses import dataclass, field

VERDICT_CONFIRMED = "CONFIRMED"
VERDICT_VIOLATIONS = "VIOLATIONS FOUND"
VERDICT_UNDEFINED = "UNDEFINED CASES"

DEFAULT_OUT_ENV = "RESIDUUM_OUT"
DEFAULT_OUT_DIR = "reports"


@dataclass
class ClaimReport:
    claim_id: str
    statement: str
    range_desc: str
    tested: int
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    runtime_ms: float = 0.0

    def __post_init__(self):
        if self.tested < len(self.violations):
            raise ValueError("tested count below violation count")

    @property
    def verdict(self) -> str:
        if self.violations:
            return VERDICT_VIOLATIONS
        if self.stats.get("undefined_cases", 0) > 0:
            return VERDICT_UNDEFINED
        return VERDICT_CONFIRMED

    def to_dict(self) -> dict:
        # runtime_ms intentionally omitted: report files must be
        # byte-identical across runs and worker counts.
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "range": self.range_desc,
            "tested": self.tested,
            "verdict": self.verdict,
            "violations": self.violations,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim_id", "range", "tested", "verdict", "violation_index", "violation"])
        if not self.violations:
            w.writerow([self.claim_id, self.range_desc, self.tested, self.verdict, "", ""])
        for i, v in enumerate(self.violations):
            w.writerow(
                [self.claim_id, self.range_desc, self.tested, self.verdict, i, json.dumps(v, sort_keys=True)]
            )
        return buf.getvalue()


@dataclass
class SweepConfig:
    """One sweep request: claim, range bound, workers, output destination.

    All computations are deterministic (no seeds anywhere); identical
    configs produce byte-identical report files.
    """

    claim_id: str
    max_n: int = 0  # 0 = claim's default range
    workers: int = 1
    out_dir: str | None = None
    out_format: str = "json"

    def resolved_out_dir(self) -> str:
        return self.out_dir or os.environ.get(DEFAULT_OUT_ENV, DEFAULT_OUT_DIR)


def write_report(report: ClaimReport, out_dir: str, fmt: str = "json") -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{report.claim_id}.{fmt}")
    payload = report.to_json() if fmt == "json" else report.to_csv()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(payload)
    return path


def load_reports(out_dir: str) -> list[dict]:
    """All JSON reports in ``out_dir``, sorted by filename."""
    if not os.path.isdir(out_dir):
        return []
    records = []
    for name in sorted(os.listdir(out_dir)):
        if not name.endswith(".json"):
            continue
        with open(os.path.join(out_dir, name), encoding="utf-8") as fh:
            records.append(json.load(fh))
    return records


def ledger(out_dir: str) -> str:
    """One text row per stored claim report: id, statement, range, verdict, counts."""
    records = load_reports(out_dir)
    if not records:
        raise FileNotFoundError(f"no reports in {out_dir!r}")
    rows = [("claim", "verdict", "tested", "violations", "range", "statement")]
    for r in records:
        rows.append(
            (
                r["claim_id"],
                r["verdict"],
                str(r["tested"]),
                str(len(r["violations"])),
                r["range"],
                r["statement"],
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for row in rows:
        head = "  ".join(row[i].ljust(widths[i]) for i in range(4))
        lines.append(f"{head}  {row[4]}  |  {row[5]}")
    return "\n".join(lines) + "\n"

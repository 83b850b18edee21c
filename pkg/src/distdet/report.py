"""Verification report records and their JSON/CSV serialization.

Big integers and rationals are written as decimal strings (``"-33"``,
``"-3/2"``). Per-record timings are kept out of the deterministic part of the
JSON document so that two runs with the same arguments give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class Record:
    suite: str
    index: int
    params: dict[str, int]
    oracle: str
    formula: str
    match: bool
    micros: int = 0
    edge_list: str | None = None

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params.items())

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "index": self.index,
            "params": dict(self.params),
            "oracle": self.oracle,
            "formula": self.formula,
            "match": self.match,
        }
        if self.edge_list is not None:
            d["edge_list"] = self.edge_list
        return d


@dataclass
class VerificationReport:
    suite: str
    seed: int
    records: list[Record] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> int:
        return sum(not r.match for r in self.records)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "summary": {"total": self.total, "mismatches": self.mismatches, "seed": self.seed},
            "instances": [r.to_dict() for r in self.records],
        }
        if timing:
            d["timing"] = {"micros": [r.micros for r in self.records]}
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        d = json.loads(text)
        micros = d.get("timing", {}).get("micros", [0] * len(d["instances"]))
        records = [
            Record(
                suite=r["suite"], index=r["index"], params=r["params"],
                oracle=r["oracle"], formula=r["formula"], match=r["match"],
                micros=us, edge_list=r.get("edge_list"),
            )
            for r, us in zip(d["instances"], micros)
        ]
        report = cls(d["suite"], d["summary"]["seed"], records)
        if report.mismatches != d["summary"]["mismatches"]:
            raise ValueError("summary mismatch count disagrees with instance records")
        return report

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "index", "params", "oracle", "formula", "match", "micros"])
        for r in self.records:
            w.writerow([r.suite, r.index, r.params_text(), r.oracle, r.formula,
                        str(r.match).lower(), r.micros])
        return buf.getvalue()

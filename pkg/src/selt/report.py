"""Run reports for the check drivers: JSON, CSV and summary figures."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field


@dataclass
class RunReport:
    command: str
    parameters: dict
    cases: list[dict]
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "reported": 0}
        for c in self.cases:
            out[c["status"]] = out.get(c["status"], 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "counts": self.counts(),
            "elapsed_seconds": round(self.elapsed, 3),
            "notes": self.notes,
            "cases": self.cases,
        }

    def write(self, report_dir: str) -> list[str]:
        """Write cases.csv, report.json and a summary figure; return paths."""
        os.makedirs(report_dir, exist_ok=True)
        paths = []

        csv_path = os.path.join(report_dir, "cases.csv")
        with open(csv_path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["case", "status", "expected", "actual"])
            for c in self.cases:
                writer.writerow([c["case"], c["status"], c["expected"], c["actual"]])
        paths.append(csv_path)

        json_path = os.path.join(report_dir, "report.json")
        with open(json_path, "w") as f:
            json.dump(self.to_json(), f, indent=2)
        paths.append(json_path)

        paths.append(self._write_figure(report_dir))
        return paths

    def _write_figure(self, report_dir: str) -> str:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        groups: dict[str, dict[str, int]] = {}
        for c in self.cases:
            group = c["case"].split()[0]
            groups.setdefault(group, {"pass": 0, "fail": 0, "reported": 0})
            groups[group][c["status"]] += 1

        names = sorted(groups)
        fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(names)), 4))
        bottom = [0] * len(names)
        colors = {"pass": "#4caf50", "fail": "#e53935", "reported": "#ffb300"}
        for status in ("pass", "reported", "fail"):
            heights = [groups[n][status] for n in names]
            ax.bar(names, heights, bottom=bottom, label=status, color=colors[status])
            bottom = [b + v for b, v in zip(bottom, heights)]
        ax.set_ylabel("cases")
        ax.set_title(f"{self.command}: {sum(bottom)} cases in {self.elapsed:.1f}s")
        ax.legend()
        plt.setp(ax.get_xticklabels(), rotation=30, ha="right")
        fig.tight_layout()
        path = os.path.join(report_dir, "summary.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        return path

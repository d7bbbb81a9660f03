"""Check results and the JSON verification report format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    parameters: dict
    statistic: float
    threshold: float
    passed: bool
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"[{verdict}] {self.name}: statistic={self.statistic:.6g} "
                f"threshold={self.threshold:.6g}")

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": _plain(self.parameters),
            "statistic": _plain(self.statistic),
            "threshold": _plain(self.threshold),
            "pass": self.passed,
            "details": _plain(self.details),
        }


def _plain(obj):
    """Coerce numpy scalars / fractions into JSON-friendly values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    try:
        return float(obj)
    except (TypeError, ValueError):
        return str(obj)


def write_report(path, results, metadata=None) -> bool:
    """Write the per-check report; returns True when every check passed."""
    ok = all(r.passed for r in results)
    payload = {
        "metadata": _plain(metadata or {}),
        "all_pass": ok,
        "checks": [r.as_dict() for r in results],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return ok

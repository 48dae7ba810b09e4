"""Check reports: one record per verified claim, serializable and deterministic.

Report files never contain wall-clock data, so identical inputs and seeds
produce byte-identical JSON; runtimes are returned to the caller separately.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = "adscurv.report/1"


@dataclass
class CheckReport:
    """Outcome of one quantitative check.

    `claim` states the inequality or identity verified, so a failure names
    the violated statement directly.
    """

    name: str
    claim: str
    passed: bool
    measured: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    seed: int | None = None
    input_digest: str | None = None

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["schema"] = SCHEMA_VERSION
        d["status"] = "PASS" if self.passed else "FAIL"
        return d

    def summary_line(self) -> str:
        s = "PASS" if self.passed else "FAIL"
        return f"[{s}] {self.name}: {self.claim}"


def digest_of(obj) -> str:
    """Stable content digest of a JSON-serializable configuration."""
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_coerce)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _coerce(x):
    try:
        import numpy as np
        if isinstance(x, np.ndarray):
            return x.tolist()
        if isinstance(x, (np.floating, np.integer)):
            return x.item()
    except ImportError:
        pass
    raise TypeError(f"not JSON-serializable: {type(x)}")


def write_reports(reports, path) -> None:
    payload = [r.to_json_dict() for r in reports]
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")

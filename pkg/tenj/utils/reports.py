"""Validation reports shared by the validators and the command line."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

_COLORS = {PASS: "green", FAIL: "red", SKIPPED: "yellow"}


def print_color(*args, color=None, attrs=(), **kwargs):
    import termcolor

    if len(args) > 0:
        args = tuple(termcolor.colored(arg, color=color, attrs=attrs) for arg in args)
    print(*args, **kwargs)


def jsonable(value: Any) -> Any:
    """Convert report payloads (simplices, scalars, tuples) into JSON values."""
    from tenj.scalar.cyclotomic import Cyclotomic

    if isinstance(value, Cyclotomic):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {_key(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted((jsonable(v) for v in value), key=str)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "tolist"):
        return jsonable(value.tolist())
    return value


def _key(key: Any) -> str:
    if isinstance(key, str):
        return key
    if isinstance(key, (tuple, list, frozenset)):
        return ",".join(str(k) for k in (sorted(key, key=str) if isinstance(key, frozenset) else key))
    return str(key)


@dataclass
class Finding:
    check: str
    """Name of the check, e.g. ``closed`` or ``pachner(3,3)``."""

    status: str
    """One of PASS, FAIL, SKIPPED."""

    detail: str = ""
    """Human-readable explanation."""

    witness: Optional[Any] = None
    """Offending simplex, tuple or labeled configuration for failures."""

    def __post_init__(self):
        assert self.status in (PASS, FAIL, SKIPPED), f"unknown status {self.status}"


@dataclass
class Report:
    title: str
    findings: List[Finding] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(f.status != FAIL for f in self.findings)

    @property
    def status(self) -> str:
        return PASS if self.passed else FAIL

    @property
    def failures(self) -> List[Finding]:
        return [f for f in self.findings if f.status == FAIL]

    def ok(self, check: str, detail: str = "") -> None:
        self.findings.append(Finding(check, PASS, detail))

    def fail(self, check: str, detail: str = "", witness: Any = None) -> None:
        self.findings.append(Finding(check, FAIL, detail, witness))

    def skip(self, check: str, detail: str = "") -> None:
        self.findings.append(Finding(check, SKIPPED, detail))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for f in other.findings:
            name = f"{prefix}{f.check}" if prefix else f.check
            self.findings.append(Finding(name, f.status, f.detail, f.witness))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "status": self.status,
            "meta": jsonable(self.meta),
            "findings": [
                {
                    "check": f.check,
                    "status": f.status,
                    "detail": f.detail,
                    "witness": jsonable(f.witness),
                }
                for f in self.findings
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def print(self, show_passed: bool = True) -> None:
        print_color(f"{self.title}: {self.status}", color=_COLORS[self.status], attrs=("bold",))
        for f in self.findings:
            if f.status == PASS and not show_passed:
                continue
            line = f"  [{f.status}] {f.check}"
            if f.detail:
                line += f": {f.detail}"
            print_color(line, color=_COLORS[f.status])
            if f.witness is not None:
                print(f"      witness: {jsonable(f.witness)}")

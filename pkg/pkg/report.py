"""
dpwheel - Verification report models

Pydantic models for check outcomes and suite reports. The report body is
deterministic for fixed inputs; wall-clock timings travel in a separate
envelope so the body can be diffed byte for byte.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from pkg.ptrans import PartialInjection, to_dict


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class CheckResult(BaseModel):
    """Outcome of one check for one n"""

    name: str
    n: Optional[int] = None
    status: Status
    count: int = 0
    detail: str = ""
    witnesses: List[Dict[str, Any]] = Field(default_factory=list)

    @classmethod
    def of(
        cls,
        name: str,
        n: Optional[int],
        ok: bool,
        count: int = 0,
        detail: str = "",
        witness: Any = None,
    ) -> "CheckResult":
        witnesses = [] if ok or witness is None else [as_witness(witness)]
        if not ok and not witnesses:
            witnesses = [{"detail": detail or name}]
        return cls(
            name=name,
            n=n,
            status=Status.PASS if ok else Status.FAIL,
            count=count,
            detail=detail,
            witnesses=witnesses,
        )

    @classmethod
    def inconclusive(cls, name: str, n: Optional[int], detail: str) -> "CheckResult":
        return cls(name=name, n=n, status=Status.INCONCLUSIVE, detail=detail)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS


def as_witness(value: Any) -> Dict[str, Any]:
    if isinstance(value, PartialInjection):
        return {"element": to_dict(value)}
    if isinstance(value, dict):
        return {k: as_witness(v)["element"] if isinstance(v, PartialInjection) else v for k, v in value.items()}
    return {"value": value}


def overall(checks: List[CheckResult]) -> Status:
    if any(c.status is Status.FAIL for c in checks):
        return Status.FAIL
    if any(c.status is Status.INCONCLUSIVE for c in checks):
        return Status.INCONCLUSIVE
    return Status.PASS


class Report(BaseModel):
    suite: str
    n_min: int
    n_max: int
    status: Status
    checks: List[CheckResult]

    @classmethod
    def build(cls, suite: str, n_min: int, n_max: int, checks: List[CheckResult]) -> "Report":
        return cls(suite=suite, n_min=n_min, n_max=n_max, status=overall(checks), checks=checks)

    @property
    def exit_code(self) -> int:
        return {Status.PASS: 0, Status.FAIL: 1, Status.INCONCLUSIVE: 2}[self.status]


class ReportEnvelope(BaseModel):
    report: Report
    timings: Dict[str, float] = Field(default_factory=dict)

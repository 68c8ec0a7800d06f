import json
import time
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from app.algebra.qpoly import LaurentPoly, render

Outcome = Literal["pass", "fail", "error"]


class VerificationReport(BaseModel):
    id: str
    params: Dict[str, int] = Field(default_factory=dict)
    outcome: Outcome
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    error: Optional[str] = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json_dict(self, timings: bool = True) -> Dict[str, Any]:
        """Contract fields only; lhs/rhs on fail, error on error."""
        out: Dict[str, Any] = {"id": self.id, "params": dict(self.params), "outcome": self.outcome}
        if self.outcome == "fail":
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        if self.outcome == "error":
            out["error"] = self.error
        out["elapsed_ms"] = round(self.elapsed_ms, 3) if timings else 0
        return out


class GridReport(BaseModel):
    """verify_grid outcome: per-instance reports in parameter order plus the first failure."""

    id: str
    ranges: Dict[str, List[int]]
    outcome: Outcome
    reports: List[VerificationReport]
    first_failure: Optional[VerificationReport] = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"


class Stopwatch:
    def __init__(self):
        self._start = time.perf_counter()

    @property
    def ms(self) -> float:
        return (time.perf_counter() - self._start) * 1000.0


def make_report(rid: str, params: Dict[str, int], *, lhs: LaurentPoly, rhs: LaurentPoly,
                watch: Optional[Stopwatch] = None) -> VerificationReport:
    """pass iff the two canonical polynomials are identical; both sides rendered on fail."""
    ok = lhs == rhs
    return VerificationReport(
        id=rid,
        params=dict(params),
        outcome="pass" if ok else "fail",
        lhs=None if ok else render(lhs),
        rhs=None if ok else render(rhs),
        elapsed_ms=watch.ms if watch else 0.0,
    )


def make_check(rid: str, params: Dict[str, int], ok: bool, *, detail: Optional[str] = None,
               watch: Optional[Stopwatch] = None) -> VerificationReport:
    """Report for a structural check (partition, cardinality) rather than a polynomial equality."""
    return VerificationReport(
        id=rid,
        params=dict(params),
        outcome="pass" if ok else "fail",
        lhs=None if ok else (detail or "check failed"),
        rhs=None if ok else "",
        elapsed_ms=watch.ms if watch else 0.0,
    )


def make_error(rid: str, params: Dict[str, int], error: str,
               watch: Optional[Stopwatch] = None) -> VerificationReport:
    return VerificationReport(id=rid, params=dict(params), outcome="error", error=error,
                              elapsed_ms=watch.ms if watch else 0.0)


def combine(rid: str, params: Dict[str, int], parts: List[VerificationReport],
            watch: Optional[Stopwatch] = None) -> VerificationReport:
    """Fold several sub-checks into one report; the first non-pass wins."""
    for part in parts:
        if not part.passed:
            return part.model_copy(update={"id": rid, "params": dict(params),
                                           "elapsed_ms": watch.ms if watch else part.elapsed_ms})
    return VerificationReport(id=rid, params=dict(params), outcome="pass",
                              elapsed_ms=watch.ms if watch else 0.0)


def reports_to_json(reports: List[VerificationReport], timings: bool = True) -> str:
    return json.dumps([r.to_json_dict(timings=timings) for r in reports], indent=2)

"""Structured verification reports: typed check results, a fixed anchor
registry, JSON/CSV serialization with atomic writes, and the proved-vs-evidence
status policy.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass, field

from .foundations import ConstructionError

__all__ = [
    "ANCHORS",
    "CONJECTURE_BOUND_CHECKS",
    "PROVED_MAX_ORDER",
    "CheckResult",
    "VerificationReport",
    "status_class",
    "write_json_report",
    "write_csv_report",
    "atomic_write_text",
    "fmt17",
]

# fixed registry: every check must carry one of these anchors, each naming the
# mathematical statement it exercises
ANCHORS = frozenset(
    {
        "southeast-diagonal-sum-identity",
        "zero-counting-jumps",
        "principal-branch-roundtrip",
        "normalization-Gn-equals-one",
        "recurrence-relation",
        "reflection-symmetry",
        "boundary-phase-pochhammer",
        "boundary-limit-convergence",
        "log-convexity-order-n-plus-1",
        "product-part-growth-bound",
        "asymptotic-limit-inverse-factorial",
        "density-nonnegativity",
        "density-equals-boundary-imaginary-part",
        "cubic-interior-minimum",
        "stieltjes-representation",
        "herglotz-linear-term-vanishes",
        "pick-property-upper-half-plane",
        "complete-monotonicity-of-derivative",
        "log-inverse-stieltjes-kernel",
        "unit-ball-ratio-representation",
        "vanishing-point-mass-at-origin",
        "triple-gamma-stirling-formula",
        "log-gamma-functional-equation",
        "conjecture-evidence-summary",
    }
)

# checks whose pass/fail meaning exists only for the proved orders; above this
# order they may never assert, only report
CONJECTURE_BOUND_CHECKS = frozenset(
    {
        "density-nonnegativity",
        "density-equals-boundary-imaginary-part",
        "stieltjes-representation",
        "herglotz-linear-term-vanishes",
        "pick-property-upper-half-plane",
        "complete-monotonicity-of-derivative",
        "unit-ball-ratio-representation",
        "vanishing-point-mass-at-origin",
        "asymptotic-limit-inverse-factorial",
        "conjecture-evidence-summary",
    }
)

PROVED_MAX_ORDER = 3


def status_class(anchor: str, order: int | None) -> str:
    """'asserted' or 'evidence' per the static policy table."""
    if anchor not in ANCHORS:
        raise ConstructionError(f"unknown paper anchor {anchor!r}")
    if anchor == "conjecture-evidence-summary":
        return "evidence"
    if anchor in CONJECTURE_BOUND_CHECKS and order is not None and order > PROVED_MAX_ORDER:
        return "evidence"
    return "asserted"


@dataclass(frozen=True)
class CheckResult:
    name: str
    paper_anchor: str
    status: str  # pass | fail | evidence
    residual: float | None
    tolerance: float | None
    runtime_ms: float
    detail: str = ""

    def __post_init__(self) -> None:
        if self.paper_anchor not in ANCHORS:
            raise ConstructionError(f"unknown paper anchor {self.paper_anchor!r}")
        if self.status not in ("pass", "fail", "evidence"):
            raise ConstructionError(f"invalid status {self.status!r}")


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict:
        return {
            "metadata": dict(self.metadata),
            "checks": [asdict(c) for c in self.checks],
        }


def config_hash(config_dict: dict) -> str:
    blob = json.dumps(config_dict, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def fmt17(x) -> str:
    """17 significant digits: round-trip safe for binary64."""
    if x is None:
        return ""
    return format(float(x), ".17g")


def atomic_write_text(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-report-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"


def report_csv(report: VerificationReport) -> str:
    lines = ["name,paper_anchor,status,residual,tolerance,runtime_ms"]
    for c in report.checks:
        lines.append(
            ",".join(
                [
                    c.name,
                    c.paper_anchor,
                    c.status,
                    fmt17(c.residual) if c.residual is not None else "",
                    fmt17(c.tolerance) if c.tolerance is not None else "",
                    fmt17(c.runtime_ms),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_json_report(report: VerificationReport, path: str) -> None:
    atomic_write_text(path, report_json(report))


def write_csv_report(report: VerificationReport, path: str) -> None:
    atomic_write_text(path, report_csv(report))

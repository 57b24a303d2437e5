"""Numerical certification of the computed radii.

Four kinds of checks:
  containment  - every sampled point of the covering disk is interior
  violation    - slightly above the radius, some sampled point escapes
  tangency     - at the radius, the disk boundary meets the region boundary
  sharpness    - the extremal map attains the region boundary identity

The disk's tangency with the reverse lemniscate happens away from the real
axis, so the real-axis extremal identity cannot close there; those sharpness
reports are expected discrepancies, not failures of the computation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classes import disk_at
from .kernel import DomainError, FunctionClass, extremal_w
from .regions import RATIONAL_LANDMARK, SIN1, SQRT2, Region
from .solver import RadiusResult, solve_catalogue

# sharp pairs whose inscribed disk touches the region boundary off the real
# axis; the stated boundary identity cannot hold at z = +/-R for them
OFF_AXIS_TOUCH_KEYS = frozenset({"reverse-lemniscate"})

SHARPNESS_TOLERANCE = 1e-8
# the extremal map reaches the boundary at -R for these targets, at +R otherwise
_NEGATIVE_TOUCH_KEYS = frozenset({"lemniscate", "sine", "janowski-disk"})


@dataclass(frozen=True)
class VerificationReport:
    kind: str  # containment | violation | tangency | sharpness
    cls: FunctionClass
    region: Region
    r: float
    passed: bool
    worst_margin: float
    witness: Optional[complex]
    residual: float
    note: str = ""

    def line(self) -> str:
        state = "pass" if self.passed else "FAIL"
        extra = f"  [{self.note}]" if self.note else ""
        return (
            f"{self.kind:<11} {self.cls.value} {self.region.key:<18} "
            f"r={self.r:.9f} {state} margin={self.worst_margin: .3e} "
            f"residual={self.residual:.3e}{extra}"
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "class": self.cls.value,
            "region": self.region.key,
            "params": dict(self.region.params),
            "r": self.r,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "witness": None if self.witness is None else [self.witness.real, self.witness.imag],
            "residual": self.residual,
            "note": self.note,
        }


def _disk_samples(cls: FunctionClass, r: float, n: int) -> np.ndarray:
    disk = disk_at(cls, r)
    theta = np.arange(n, dtype=float) * (2.0 * math.pi / n)
    return disk.center + disk.radius * np.exp(1j * theta)


def verify_containment(
    cls: FunctionClass, reg: Region, r: float, n: int = 4096
) -> VerificationReport:
    """Sample the covering-disk boundary and require strict interiority."""
    if n < 256:
        raise DomainError("containment verification needs n >= 256 samples")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r={r} must lie in (0, 1)")
    pts = _disk_samples(cls, r, n)
    inside = reg.contains_many(pts)
    margins = reg.margin_many(pts)
    worst = int(np.argmin(margins))
    passed = bool(inside.all())
    witness = None if passed else complex(pts[int(np.argmin(np.where(inside, np.inf, margins)))])
    return VerificationReport(
        "containment", cls, reg, r, passed, float(margins[worst]), witness, 0.0
    )


def verify_violation(
    cls: FunctionClass, reg: Region, r: float, n: int = 4096
) -> VerificationReport:
    """Require that some sampled covering-disk point escapes the region."""
    inner = verify_containment(cls, reg, r, n=n)
    passed = not inner.passed
    return VerificationReport(
        "violation", cls, reg, r, passed, inner.worst_margin,
        inner.witness, 0.0,
        "" if passed else "no escape found",
    )


def verify_tangency(
    cls: FunctionClass, reg: Region, r: float, n: int = 4096, m: int = 8192
) -> VerificationReport:
    """At the computed radius the covering disk must graze the boundary:
    the least sample-to-boundary distance is at most 1e-4 * r."""
    pts = _disk_samples(cls, r, n)
    dist = reg.boundary_distance(pts, m=m)
    best = int(np.argmin(dist))
    residual = float(dist[best])
    return VerificationReport(
        "tangency", cls, reg, r, residual <= 1e-4 * r, residual,
        complex(pts[best]), residual,
    )


def sharpness_touch_point(reg_key: str, big_r: float) -> float:
    return -big_r if reg_key in _NEGATIVE_TOUCH_KEYS else big_r


def boundary_identity_residual(reg: Region, w: complex) -> float:
    """Distance of w from the region's boundary identity."""
    key = reg.key
    if key == "half-plane":
        return abs(w.real - reg.params["alpha"])
    if key == "lemniscate":
        return abs(abs(w * w - 1.0) - 1.0)
    if key == "parabola":
        return abs(w.real - abs(w - 1.0))
    if key == "exponential":
        return abs(abs(cmath.log(w)) - 1.0)
    if key == "cardioid":
        return abs(w - 1.0 / 3.0)
    if key == "sine":
        return abs(w - (1.0 + SIN1))
    if key == "lune":
        return abs(abs(w * w - 1.0) - 2.0 * abs(w))
    if key == "rational":
        return abs(w - RATIONAL_LANDMARK)
    if key == "reverse-lemniscate":
        return abs(abs((w - SQRT2) ** 2 - 1.0) - 1.0)
    if key == "janowski-disk":
        return abs(abs(w - reg.params["c0"]) - reg.params["d"])
    raise DomainError(f"no boundary identity for region {reg.key!r}")


def verify_sharpness(cls: FunctionClass, reg: Region, big_r: float) -> VerificationReport:
    """Evaluate the extremal map at the touch point and check the identity."""
    from .solver import status_of

    if status_of(cls, reg) == "lower-bound":
        raise DomainError(
            f"{cls.value}/{reg.key} is a lower-bound entry; no sharpness claim to check"
        )
    z = sharpness_touch_point(reg.key, big_r)
    w = extremal_w(cls, z)
    residual = boundary_identity_residual(reg, w)
    passed = residual <= SHARPNESS_TOLERANCE
    note = ""
    if reg.key in OFF_AXIS_TOUCH_KEYS and not passed:
        note = (
            "expected: tangency with this boundary is off the real axis, so the "
            "real extremal touch point does not reach it"
        )
    return VerificationReport("sharpness", cls, reg, big_r, passed, residual, w, residual, note)


@dataclass
class SuiteOutcome:
    results: list[RadiusResult]
    reports: list[VerificationReport]
    unexpected: list[VerificationReport]
    flags: list[str]

    @property
    def ok(self) -> bool:
        return not self.unexpected


def run_full_suite(
    n: int = 4096,
    tol: float = 1e-13,
    classes=tuple(FunctionClass),
    region_keys=None,
) -> SuiteOutcome:
    """Containment below / violation above / tangency (+ sharpness where
    claimed) for the whole catalogue; expected discrepancies are reported
    but do not count as failures."""
    if n < 256:
        raise DomainError("the verification suite needs n >= 256 samples")
    results = [
        res
        for res in solve_catalogue(classes=classes, tol=tol)
        if region_keys is None or res.region.key in region_keys
    ]
    reports: list[VerificationReport] = []
    unexpected: list[VerificationReport] = []
    flags: list[str] = []
    for res in results:
        cls, reg, big_r = res.cls, res.region, res.numeric
        for flag in res.flags:
            flags.append(f"{cls.value}/{reg.key}: {flag}")
        below = verify_containment(cls, reg, big_r * (1.0 - 1e-6), n=n)
        above = verify_violation(cls, reg, big_r * (1.0 + 1e-3), n=n)
        touch = verify_tangency(cls, reg, big_r, n=n)
        checks = [below, above, touch]
        if res.status == "sharp":
            checks.append(verify_sharpness(cls, reg, big_r))
        for rep in checks:
            reports.append(rep)
            if rep.passed:
                continue
            if rep.note.startswith("expected"):
                flags.append(f"{cls.value}/{reg.key}: sharpness identity open ({rep.note})")
            else:
                unexpected.append(rep)
    return SuiteOutcome(results, reports, unexpected, flags)

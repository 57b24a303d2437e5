"""Covering-disk data for the families F1..F4.

For each family, w = zf'(z)/f(z) maps |z| <= r into a disk with real center
c(r) and radius rho(r); the univalence radius is the r at which that disk
first touches 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .kernel import Disk, DomainError, FunctionClass


@dataclass(frozen=True)
class ClassSpec:
    cls: FunctionClass
    center: Callable[[float], float]
    radius: Callable[[float], float]
    univalence_radius: float


def _c_common(r: float) -> float:
    return 1.0 / (1.0 - r * r)


_SPECS = {
    FunctionClass.F1: ClassSpec(
        FunctionClass.F1, _c_common, lambda r: 5.0 * r / (1.0 - r * r), 0.2
    ),
    FunctionClass.F2: ClassSpec(
        FunctionClass.F2,
        _c_common,
        lambda r: (4.0 * r + r * r) / (1.0 - r * r),
        math.sqrt(5.0) - 2.0,
    ),
    FunctionClass.F3: ClassSpec(
        FunctionClass.F3, _c_common, lambda r: 3.0 * r / (1.0 - r * r), 1.0 / 3.0
    ),
    FunctionClass.F4: ClassSpec(
        FunctionClass.F4,
        lambda r: (1.0 + r * r) / (1.0 - r * r),
        lambda r: 4.0 * r / (1.0 - r * r),
        2.0 - math.sqrt(3.0),
    ),
}


def class_spec(cls: FunctionClass) -> ClassSpec:
    return _SPECS[cls]


def _check_r(r: float) -> float:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r={r} must satisfy 0 <= r < 1")
    return r


def center(cls: FunctionClass, r: float) -> float:
    return _SPECS[cls].center(_check_r(r))


def radius(cls: FunctionClass, r: float) -> float:
    return _SPECS[cls].radius(_check_r(r))


def disk_at(cls: FunctionClass, r: float) -> Disk:
    """Disk covering {zf'(z)/f(z) : |z| <= r} for every member of the family."""
    _check_r(r)
    spec = _SPECS[cls]
    return Disk(spec.center(r), spec.radius(r))


def univalence_radius(cls: FunctionClass) -> float:
    """1/5, sqrt(5)-2, 1/3 and 2-sqrt(3) for F1..F4 respectively."""
    return _SPECS[cls].univalence_radius


def max_dist_to_one(cls: FunctionClass, r: float) -> float:
    """Sharp bound on |w - 1| over the covering disk: |c(r)-1| + rho(r)."""
    d = disk_at(cls, r)
    return abs(d.center - 1.0) + d.radius

"""Complex-arithmetic kernel: the four extremal maps, their zf'/f ratios in
closed form, Moebius disk images and the logarithmic-derivative bound.

All arithmetic is plain 64-bit floating point; every operation here is pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ParameterError(ValueError):
    """A structural parameter (order, angle, disk size, ...) is out of range."""


class FunctionClass(Enum):
    """The four ratio-defined families F1..F4."""

    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Disk:
    """A disk in the w-plane with real center (all covering disks have one)."""

    center: float
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.center) and math.isfinite(self.radius)):
            raise DomainError("disk center/radius must be finite")
        if self.radius < 0:
            raise DomainError("disk radius must be nonnegative")

    def boundary_point(self, theta: float) -> complex:
        return self.center + self.radius * complex(math.cos(theta), math.sin(theta))


def _check_unit_disk(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite")
    if abs(z) >= 1.0:
        raise DomainError(f"z={z} lies outside the open unit disk (poles sit at +/-1)")
    return z


def extremal_f(cls: FunctionClass, z: complex) -> complex:
    """Value of the family's extremal map at z, |z| < 1.

    F1: z(1-z)^2/(1+z)^3   F2: z(1-z)^2/(1+z)^2
    F3: z(1-z)/(1+z)^2     F4: z(1-z)/(1+z)^3
    """
    z = _check_unit_disk(z)
    one_minus = 1.0 - z
    one_plus = 1.0 + z
    if cls is FunctionClass.F1:
        return z * one_minus * one_minus / (one_plus * one_plus * one_plus)
    if cls is FunctionClass.F2:
        return z * one_minus * one_minus / (one_plus * one_plus)
    if cls is FunctionClass.F3:
        return z * one_minus / (one_plus * one_plus)
    return z * one_minus / (one_plus * one_plus * one_plus)


def extremal_w(cls: FunctionClass, z: complex) -> complex:
    """z f'(z)/f(z) of the extremal map, via the rational closed form.

    F1: (1-5z)/(1-z^2)      F2: (1-4z-z^2)/(1-z^2)
    F3: (1-3z)/(1-z^2)      F4: (1-4z+z^2)/(1-z^2)
    """
    z = _check_unit_disk(z)
    den = 1.0 - z * z
    if cls is FunctionClass.F1:
        return (1.0 - 5.0 * z) / den
    if cls is FunctionClass.F2:
        return (1.0 - 4.0 * z - z * z) / den
    if cls is FunctionClass.F3:
        return (1.0 - 3.0 * z) / den
    return (1.0 - 4.0 * z + z * z) / den


def mobius_disk_image(kind: str, r: float) -> Disk:
    """Image of |z| <= r under 1/(1+z) ("reciprocal-one-plus") or
    (1-z)/(1+z) ("cayley"); both send it onto a real-centered disk.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r={r} must satisfy 0 <= r < 1")
    den = 1.0 - r * r
    if kind == "reciprocal-one-plus":
        return Disk(1.0 / den, r / den)
    if kind == "cayley":
        return Disk((1.0 + r * r) / den, 2.0 * r / den)
    raise ParameterError(f"unknown Moebius kind {kind!r}")


def logderiv_bound(alpha: float, r: float) -> float:
    """Sharp bound on |z p'(z)/p(z)| over |z| <= r for p with Re p > alpha,
    p(0) = 1:  2(1-alpha) r / ((1-r)(1+(1-2 alpha) r)).
    """
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha={alpha} must lie in [0, 1)")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r={r} must satisfy 0 <= r < 1")
    return 2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r))

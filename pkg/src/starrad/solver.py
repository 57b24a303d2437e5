"""Radius solver: bisection on the disk-containment margin, the tabulated
closed forms, and reconciliation flags.

For every family/region pair the computed radius is the largest r at which
the covering disk still fits inside the region by the inclusion lemma:
rho(r) <= rho_max(c(r)) with c(r) in the admissible center interval.  The
margin is continuous and strictly increasing on the bracket, so plain
bisection over [0, univalence radius] is exact enough and fully deterministic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .classes import center, radius, univalence_radius
from .kernel import DomainError, FunctionClass, ParameterError
from .regions import SIN1, SQRT2, E, Region, region

_SQRT5 = math.sqrt(5.0)


class NoSolutionError(RuntimeError):
    """The containment condition fails for every positive radius."""


@dataclass(frozen=True)
class RadiusResult:
    cls: FunctionClass
    region: Region
    numeric: float
    closed_form: Optional[float]
    residual: Optional[float]
    status: str  # "sharp" | "lower-bound"
    flags: Tuple[str, ...] = field(default_factory=tuple)

    def row(self) -> dict:
        return {
            "class": self.cls.value,
            "region": self.region.key,
            "params": dict(self.region.params),
            "numeric": self.numeric,
            "closed_form": self.closed_form,
            "residual": self.residual,
            "status": self.status,
            "flags": list(self.flags),
        }


# families for which the stated radius is only a lower bound (the pairs
# published as inequalities, plus every strong-starlikeness item)
_LOWER_BOUND_PAIRS = {
    (FunctionClass.F2, "lemniscate"),
    (FunctionClass.F2, "sine"),
    (FunctionClass.F2, "reverse-lemniscate"),
}

# 4-decimal values printed alongside the closed forms in the source tables;
# entries whose formula value strays beyond half an ulp of the print get a flag
PUBLISHED_DECIMALS = {
    (FunctionClass.F1, "lemniscate"): 0.0809,
    (FunctionClass.F1, "parabola"): 0.1010,
    (FunctionClass.F1, "exponential"): 0.1276,
    (FunctionClass.F1, "cardioid"): 0.1345,
    (FunctionClass.F1, "sine"): 0.1589,
    (FunctionClass.F1, "lune"): 0.1183,
    (FunctionClass.F1, "rational"): 0.0342,
    (FunctionClass.F1, "reverse-lemniscate"): 0.0566,
    (FunctionClass.F2, "lemniscate"): 0.0977,
    (FunctionClass.F2, "parabola"): 0.1231,
    (FunctionClass.F2, "exponential"): 0.1543,
    (FunctionClass.F2, "cardioid"): 0.1623,
    (FunctionClass.F2, "sine"): 0.1858,
    (FunctionClass.F2, "lune"): 0.1434,
    (FunctionClass.F2, "rational"): 0.0428,
    (FunctionClass.F2, "reverse-lemniscate"): 0.0692,
    (FunctionClass.F3, "lemniscate"): 0.1301,
    (FunctionClass.F3, "parabola"): 0.1716,
    (FunctionClass.F3, "exponential"): 0.2165,
    (FunctionClass.F3, "cardioid"): 0.2279,
    (FunctionClass.F3, "sine"): 0.2439,
    (FunctionClass.F3, "lune"): 0.2008,
    (FunctionClass.F3, "rational"): 0.0581,
    (FunctionClass.F3, "reverse-lemniscate"): 0.0926,
    (FunctionClass.F4, "lemniscate"): 0.9778,
    (FunctionClass.F4, "parabola"): 0.1315,
    (FunctionClass.F4, "exponential"): 0.1676,
    (FunctionClass.F4, "cardioid"): 0.1771,
    (FunctionClass.F4, "sine"): 0.1858,
    (FunctionClass.F4, "lune"): 0.1549,
    (FunctionClass.F4, "rational"): 0.0438,
    (FunctionClass.F4, "reverse-lemniscate"): 0.0694,
}

DECIMAL_TOLERANCE = 5e-5

# prose stating the F4 univalence radius prints 0.276949 once; 2 - sqrt(3)
# is 0.267949..., so the first decimal string cannot be the formula's value
F4_UNIVALENCE_NOTE = (
    "stated approximation 0.276949 disagrees with 2 - sqrt(3) = 0.267949"
)

# the stated equality of the S*(1, 1/2) radius with the parabolic radius
# 5 - 2 sqrt(6) ~ 0.101021 is not met by the disk bound, which gives
# (2 sqrt(7) - 5)/3 ~ 0.097168
STATED_EQUALITY_NOTE = (
    "stated equality with the parabolic radius 5 - 2*sqrt(6) ~ 0.101021 is not "
    "met by the disk bound, which gives (2*sqrt(7) - 5)/3 ~ 0.097168"
)


def status_of(cls: FunctionClass, reg: Region) -> str:
    if reg.key == "sector" or (cls, reg.key) in _LOWER_BOUND_PAIRS:
        return "lower-bound"
    return "sharp"


def _bisect_root(fn, lo: float, hi: float, width: float, max_iter: int = 200) -> float:
    """Largest x in [lo, hi] with fn(x) <= 0, for increasing fn with
    fn(lo) <= 0 < fn(hi)."""
    for _ in range(max_iter):
        if hi - lo <= width:
            break
        mid = 0.5 * (lo + hi)
        if fn(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def containment_margin(cls: FunctionClass, reg: Region, r: float) -> float:
    """rho(r) - rho_max(c(r)); positive once the covering disk no longer fits.
    Centers outside the admissible interval count as a violation."""
    a = center(cls, r)
    if not reg.admits_center(a):
        return math.inf
    return radius(cls, r) - reg.rho_max(a)


def solve_radius(cls: FunctionClass, reg: Region, tol: float = 1e-13) -> RadiusResult:
    """Largest admissible r with the covering disk inside the region."""
    if not 1e-14 <= tol <= 1e-6:
        raise ParameterError(f"tol={tol} must lie in [1e-14, 1e-6]")
    ru = univalence_radius(cls)

    def g(r: float) -> float:
        return containment_margin(cls, reg, r)

    if g(0.0) >= 0.0:  # even the degenerate disk {1} does not fit strictly
        raise NoSolutionError(
            f"covering disk of {cls.value} leaves {reg.key} for every r > 0"
        )
    if g(ru) <= 0.0:
        numeric = ru
    else:
        numeric = _bisect_root(g, 0.0, ru, tol * ru)
    cf = closed_form_radius(cls, reg)
    residual = abs(numeric - cf) if cf is not None else None
    return RadiusResult(
        cls, reg, numeric, cf, residual, status_of(cls, reg), _entry_flags(cls, reg, cf)
    )


def _entry_flags(cls: FunctionClass, reg: Region, cf: Optional[float]) -> Tuple[str, ...]:
    flags = []
    pub = PUBLISHED_DECIMALS.get((cls, reg.key))
    if cf is not None and pub is not None and abs(cf - pub) > DECIMAL_TOLERANCE:
        flags.append(
            f"published-decimal-mismatch: stated ~{pub:.4f}, formula gives {cf:.6f}"
        )
    if cls is FunctionClass.F4 and reg.key == "half-plane" and reg.params.get("alpha") == 0.0:
        flags.append("univalence-print: " + F4_UNIVALENCE_NOTE)
    if (
        cls is FunctionClass.F1
        and reg.key == "janowski-disk"
        and reg.params.get("c0") == 1.0
        and reg.params.get("d") == 0.5
    ):
        flags.append("stated-equality-mismatch: " + STATED_EQUALITY_NOTE)
    return tuple(flags)


# -- closed forms -------------------------------------------------------------

def starlike_order_radius(cls: FunctionClass, alpha: float) -> float:
    """Radius of starlikeness of order alpha, in rationalized closed form."""
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha={alpha} must lie in [0, 1)")
    if cls is FunctionClass.F1:
        return 2.0 * (1.0 - alpha) / (5.0 + math.sqrt(25.0 - 4.0 * alpha * (1.0 - alpha)))
    if cls is FunctionClass.F2:
        return (1.0 - alpha) / (2.0 + math.sqrt(4.0 + (1.0 - alpha) ** 2))
    if cls is FunctionClass.F3:
        return 2.0 * (1.0 - alpha) / (3.0 + math.sqrt(9.0 - 4.0 * alpha * (1.0 - alpha)))
    return (1.0 - alpha) / (2.0 + math.sqrt(3.0 + alpha * alpha))


def _strong_starlike_closed_form(cls: FunctionClass, gamma: float) -> float:
    s = math.sin(math.pi * gamma / 2.0)
    if cls is FunctionClass.F1:
        return s / 5.0
    if cls is FunctionClass.F2:
        return s / (2.0 + math.sqrt(4.0 + s))
    if cls is FunctionClass.F3:
        return s / 3.0
    return s / (2.0 + math.sqrt(4.0 - s * s))


def strong_starlike_radius(cls: FunctionClass, gamma: float, tol: float = 1e-13) -> RadiusResult:
    """Strong-starlikeness radius of order gamma (a lower bound)."""
    if not 0.0 < gamma <= 1.0:
        raise DomainError(f"gamma={gamma} must lie in (0, 1]")
    return solve_radius(cls, region("sector", gamma=gamma), tol=tol)


def _janowski_closed_form(cls: FunctionClass, c0: float, d: float) -> Optional[float]:
    if c0 != 1.0:
        return None
    if cls is FunctionClass.F1:
        return 2.0 * d / (5.0 + math.sqrt(25.0 + 4.0 * d * (1.0 + d)))
    if cls is FunctionClass.F2:
        return d / (2.0 + math.sqrt(4.0 + d * (2.0 + d)))
    if cls is FunctionClass.F3:
        return 2.0 * d / (3.0 + math.sqrt(9.0 + 4.0 * d * (1.0 + d)))
    return d / (2.0 + math.sqrt(4.0 + d * (2.0 + d)))


def janowski_disk_radius(cls: FunctionClass, c0: float, d: float, tol: float = 1e-13) -> float:
    """Largest r with |c(r) - c0| + rho(r) <= d (disk inside disk)."""
    return solve_radius(cls, region("janowski-disk", c0=c0, d=d), tol=tol).numeric


def _reverse_lemniscate_equation(cls: FunctionClass, r: float) -> float:
    """Radical equation whose root in (0, 1) is the reverse-lemniscate radius."""
    r2 = r * r
    if cls is FunctionClass.F4:
        return (
            16.0 * r2
            + (r2 - 1.0) ** 2
            - (1.0 - SQRT2 + (1.0 + SQRT2) * r2) ** 2
            + (r2 - 1.0) * math.sqrt(2.0 * SQRT2 - 2.0 - 2.0 * (1.0 + SQRT2) * r2 * r2)
        )
    head = {
        FunctionClass.F1: 25.0 * r2,
        FunctionClass.F2: r2 * (r + 4.0) ** 2,
        FunctionClass.F3: 9.0 * r2,
    }[cls]
    return (
        head
        + (r2 - 1.0) ** 2
        + (r2 - 1.0) * math.sqrt((r2 + SQRT2) * (2.0 - SQRT2 - r2))
        - (1.0 + SQRT2 * (r2 - 1.0)) ** 2
    )


def closed_form_radius(cls: FunctionClass, reg: Region) -> Optional[float]:
    """The tabulated closed form for the pair, when one is stated."""
    key = reg.key
    if key == "half-plane":
        return starlike_order_radius(cls, reg.params["alpha"])
    if key == "sector":
        return _strong_starlike_closed_form(cls, reg.params["gamma"])
    if key == "janowski-disk":
        return _janowski_closed_form(cls, reg.params["c0"], reg.params["d"])
    if key == "lemniscate":
        if cls is FunctionClass.F1:
            return (2.0 * SQRT2 - 2.0) / (5.0 + math.sqrt(33.0 - 4.0 * SQRT2))
        if cls is FunctionClass.F3:
            return (2.0 * SQRT2 - 2.0) / (3.0 + math.sqrt(17.0 - 4.0 * SQRT2))
        return (_SQRT5 - 2.0) / (1.0 + SQRT2)  # F2 and F4 share the bound
    if key == "parabola":
        return {
            FunctionClass.F1: 5.0 - 2.0 * math.sqrt(6.0),
            FunctionClass.F2: math.sqrt(17.0) - 4.0,
            FunctionClass.F3: 3.0 - 2.0 * SQRT2,
            FunctionClass.F4: (4.0 - math.sqrt(13.0)) / 3.0,
        }[cls]
    if key == "exponential":
        return {
            FunctionClass.F1: (2.0 * E - 2.0) / (5.0 * E + math.sqrt(25.0 * E * E + 4.0 * (1.0 - E))),
            FunctionClass.F2: (2.0 * E - 2.0) / (4.0 * E + math.sqrt(20.0 * E * E - 8.0 * E + 4.0)),
            FunctionClass.F3: (2.0 * E - 2.0) / (3.0 * E + math.sqrt(9.0 * E * E + 4.0 * (1.0 - E))),
            FunctionClass.F4: (E - 1.0) / (2.0 * E + math.sqrt(3.0 * E * E + 1.0)),
        }[cls]
    if key == "cardioid":
        return {
            FunctionClass.F1: (15.0 - math.sqrt(217.0)) / 2.0,
            FunctionClass.F2: math.sqrt(10.0) - 3.0,
            FunctionClass.F3: (9.0 - math.sqrt(73.0)) / 2.0,
            FunctionClass.F4: (3.0 - math.sqrt(7.0)) / 2.0,
        }[cls]
    if key == "sine":
        s1 = SIN1
        return {
            FunctionClass.F1: 2.0 * s1 / (5.0 + math.sqrt(25.0 + 4.0 * s1 * (1.0 + s1))),
            FunctionClass.F2: s1 / (2.0 + math.sqrt(4.0 + s1 * (2.0 + s1))),
            FunctionClass.F3: 2.0 * s1 / (3.0 + math.sqrt(9.0 + 4.0 * s1 * (1.0 + s1))),
            FunctionClass.F4: s1 / (2.0 + math.sqrt(4.0 + s1 * (2.0 + s1))),
        }[cls]
    if key == "lune":
        return {
            FunctionClass.F1: (4.0 - 2.0 * SQRT2) / (5.0 + math.sqrt(41.0 - 12.0 * SQRT2)),
            FunctionClass.F2: (2.0 - SQRT2) / (2.0 + math.sqrt(10.0 - 4.0 * SQRT2)),
            FunctionClass.F3: (4.0 - 2.0 * SQRT2) / (3.0 + math.sqrt(25.0 - 12.0 * SQRT2)),
            FunctionClass.F4: SQRT2 - math.sqrt(3.0 - SQRT2),
        }[cls]
    if key == "rational":
        return {
            FunctionClass.F1: (6.0 - 4.0 * SQRT2) / (5.0 + math.sqrt(81.0 - 40.0 * SQRT2)),
            FunctionClass.F2: (3.0 - 2.0 * SQRT2) / (2.0 + math.sqrt(21.0 - 12.0 * SQRT2)),
            FunctionClass.F3: (6.0 - 4.0 * SQRT2) / (3.0 + math.sqrt(65.0 - 40.0 * SQRT2)),
            FunctionClass.F4: (3.0 - 2.0 * SQRT2) / (2.0 + math.sqrt(15.0 - 8.0 * SQRT2)),
        }[cls]
    if key == "reverse-lemniscate":
        return _bisect_root(
            lambda r: _reverse_lemniscate_equation(cls, r),
            0.0,
            univalence_radius(cls),
            1e-15,
        )
    return None


# -- catalogue ----------------------------------------------------------------

CATALOGUE_KEYS = (
    "half-plane",
    "lemniscate",
    "parabola",
    "exponential",
    "cardioid",
    "sine",
    "lune",
    "rational",
    "reverse-lemniscate",
    "sector",
)


def catalogue_regions(alpha: float = 0.0, gamma: float = 1.0) -> list[Region]:
    return [region(key, alpha=alpha, gamma=gamma) for key in CATALOGUE_KEYS]


def disk_target_regions() -> list[Region]:
    """The two disk targets S*(1, sqrt2 - 1) and S*(1, 1/2) studied for F1."""
    return [
        region("janowski-disk", c0=1.0, d=SQRT2 - 1.0),
        region("janowski-disk", c0=1.0, d=0.5),
    ]


def solve_catalogue(
    classes=tuple(FunctionClass),
    alpha: float = 0.0,
    gamma: float = 1.0,
    tol: float = 1e-13,
    include_disk_targets: bool = True,
) -> list[RadiusResult]:
    """The 4 x 10 radius grid plus (for F1) the two disk-target rows."""
    results = []
    regs = catalogue_regions(alpha=alpha, gamma=gamma)
    for cls in classes:
        for reg in regs:
            results.append(solve_radius(cls, reg, tol=tol))
        if include_disk_targets and cls is FunctionClass.F1:
            for reg in disk_target_regions():
                results.append(solve_radius(cls, reg, tol=tol))
    return results

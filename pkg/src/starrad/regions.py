"""Catalogue of the ten target regions in the w-plane.

Each region carries a strict-interior membership predicate, a closed boundary
parametrization theta in [0, 2pi) -> C, the interval of admissible real disk
centers, and the inclusion radius rho_max(a): any disk with center a in that
interval and radius below rho_max(a) lies inside the region.

Membership for the cardioid, sine and rational regions is decided by the
winding number of a sampled boundary polygon (their implicit inequalities are
easy to mis-orient); everything else has an exact predicate.  Boundary points
always classify as outside: all predicates are strict.
"""
from __future__ import annotations

import math
from typing import Callable, Dict, Tuple

import numpy as np

from .geometry import ClosedPolyline, sample_boundary, winding_membership
from .kernel import DomainError, ParameterError

SQRT2 = math.sqrt(2.0)
SIN1 = math.sin(1.0)
E = math.e
K_RATIONAL = SQRT2 + 1.0  # pole parameter of the rational target map
RATIONAL_LANDMARK = 2.0 * (SQRT2 - 1.0)  # left vertex (cusp) of the rational region

# Far-field closure scales for the unbounded regions.  The artificial edges
# sit well outside both the plot window and every covering disk.
_HALFPLANE_BOX = 20.0
_PARABOLA_VMAX = 6.0
_PARABOLA_XMAX = 25.0
_SECTOR_RADIUS = 30.0

REGION_KEYS = (
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
    "janowski-disk",
)

_WINDING_KEYS = frozenset({"cardioid", "sine", "rational"})

# default polygon resolutions: membership / boundary-distance work
MEMBERSHIP_SAMPLES = 4096
DISTANCE_SAMPLES = 8192


def _piecewise(parts):
    """Build theta -> point from (length, fn s in [0,1] -> point) parts."""
    lengths = np.array([p[0] for p in parts], dtype=float)
    cuts = np.concatenate([[0.0], np.cumsum(lengths)]) / lengths.sum()

    def boundary(theta):
        theta = np.asarray(theta, dtype=float)
        scalar = theta.ndim == 0
        t = (np.atleast_1d(theta) / (2.0 * np.pi)) % 1.0
        out = np.empty(t.shape, dtype=complex)
        for i, (_, fn) in enumerate(parts):
            lo, hi = cuts[i], cuts[i + 1]
            mask = (t >= lo) & (t < hi) if i + 1 < len(parts) else (t >= lo)
            if mask.any():
                s = (t[mask] - lo) / (hi - lo)
                out[mask] = fn(s)
        return out[0] if scalar else out

    return boundary


def _segment(a: complex, b: complex):
    return (abs(b - a), lambda s: a + s * (b - a))


def _lemniscate_loop(s):
    # right loop of |w^2 - 1| = 1 in polar form rho^2 = 2 cos 2t, ccw from the node
    t = -np.pi / 4.0 + s * (np.pi / 2.0)
    rho = np.sqrt(np.maximum(2.0 * np.cos(2.0 * t), 0.0))
    return rho * np.exp(1j * t)


def _reverse_lemniscate_loop(s):
    # left loop of |(w - sqrt2)^2 - 1| = 1, ccw (sqrt2 -> 0 over the top)
    t = -np.pi / 4.0 + s * (np.pi / 2.0)
    rho = np.sqrt(np.maximum(2.0 * np.cos(2.0 * t), 0.0))
    return SQRT2 - rho * np.exp(1j * t)


def _rational_map(z):
    return 1.0 + (K_RATIONAL * z + z * z) / (K_RATIONAL * K_RATIONAL - K_RATIONAL * z)


class Region:
    """One catalogue region; immutable after construction."""

    def __init__(
        self,
        key: str,
        params: Dict[str, float],
        label: str,
        a_lo: float,
        a_hi: float,
        rho_max_fn: Callable[[float], float],
        contains_fn: Callable[[np.ndarray], np.ndarray] | None,
        margin_fn: Callable[[np.ndarray], np.ndarray] | None,
        boundary_fn: Callable[[np.ndarray], np.ndarray],
    ):
        self.key = key
        self.params = dict(params)
        self.label = label
        self.a_lo = a_lo
        self.a_hi = a_hi
        self._rho_max = rho_max_fn
        self._contains = contains_fn
        self._margin = margin_fn
        self._boundary = boundary_fn
        self._polylines: Dict[int, ClosedPolyline] = {}

    # -- identity ------------------------------------------------------------
    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        if self.params:
            inner = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
            return f"Region({self.key}; {inner})"
        return f"Region({self.key})"

    @property
    def uses_winding(self) -> bool:
        return self.key in _WINDING_KEYS

    # -- geometry ------------------------------------------------------------
    def boundary(self, theta):
        """Boundary point(s) at parameter theta in [0, 2pi)."""
        return self._boundary(theta)

    def polygon(self, m: int = MEMBERSHIP_SAMPLES) -> ClosedPolyline:
        poly = self._polylines.get(m)
        if poly is None:
            poly = ClosedPolyline(sample_boundary(self._boundary, m))
            self._polylines[m] = poly
        return poly

    def boundary_points(self, m: int) -> np.ndarray:
        """Ordered (re, im) pairs of the sampled boundary, for export."""
        pts = sample_boundary(self._boundary, m)
        return np.column_stack([pts.real, pts.imag])

    # -- membership ----------------------------------------------------------
    def contains_many(self, w, m: int = MEMBERSHIP_SAMPLES) -> np.ndarray:
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        if self._contains is not None:
            return self._contains(w)
        return self.polygon(m).contains(w)

    def contains(self, w: complex, m: int = MEMBERSHIP_SAMPLES) -> bool:
        return bool(self.contains_many([w], m=m)[0])

    def margin_many(self, w) -> np.ndarray:
        """Signed interiority margin: positive inside, negative outside.

        For predicate regions this is the raw inequality slack; for winding
        regions it is the distance to the boundary polyline signed by
        membership.
        """
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        if self._margin is not None:
            return self._margin(w)
        dist = self.polygon(DISTANCE_SAMPLES).distance(w)
        sign = np.where(self.contains_many(w), 1.0, -1.0)
        return sign * dist

    def boundary_distance(self, w, m: int = DISTANCE_SAMPLES) -> np.ndarray:
        w = np.atleast_1d(np.asarray(w, dtype=complex))
        return self.polygon(m).distance(w)

    # -- inclusion lemma -----------------------------------------------------
    def admits_center(self, a: float) -> bool:
        return self.a_lo <= a <= self.a_hi

    def rho_max(self, a: float) -> float:
        """Largest guaranteed inradius of a disk centered at a (open endpoints
        of the admissible interval extend by continuity)."""
        if not self.admits_center(a):
            raise DomainError(
                f"center a={a} outside the admissible interval "
                f"[{self.a_lo}, {self.a_hi}] of {self.key}"
            )
        return max(0.0, self._rho_max(a))

    def center_span(self, cap: float = 3.0) -> Tuple[float, float]:
        """Finite interval of admissible centers usable for sampling tests."""
        hi = self.a_hi if math.isfinite(self.a_hi) else self.a_lo + cap
        return self.a_lo, hi


def _make_half_plane(alpha: float) -> Region:
    if not 0.0 <= alpha < 1.0:
        raise ParameterError(f"half-plane order alpha={alpha} must lie in [0, 1)")
    b = _HALFPLANE_BOX
    x = alpha
    boundary = _piecewise(
        [
            _segment(complex(x, -b), complex(x + b, -b)),
            _segment(complex(x + b, -b), complex(x + b, b)),
            _segment(complex(x + b, b), complex(x, b)),
            _segment(complex(x, b), complex(x, -b)),
        ]
    )
    return Region(
        "half-plane",
        {"alpha": alpha},
        f"half-plane Re w > {alpha:g}",
        alpha,
        math.inf,
        lambda a: a - alpha,
        lambda w: w.real > alpha,
        lambda w: w.real - alpha,
        boundary,
    )


def _make_lemniscate() -> Region:
    def contains(w):
        return (np.abs(w * w - 1.0) < 1.0) & (w.real > 0.0)

    def margin(w):
        return np.minimum(1.0 - np.abs(w * w - 1.0), w.real)

    return Region(
        "lemniscate",
        {},
        "right loop of |w^2 - 1| = 1",
        2.0 - SQRT2,
        SQRT2,
        lambda a: (SQRT2 - 1.0) - abs(a - 1.0),
        contains,
        margin,
        _piecewise([(1.0, _lemniscate_loop)]),
    )


def _make_parabola() -> Region:
    v = _PARABOLA_VMAX
    u_end = (1.0 + v * v) / 2.0

    def arc(s):
        vv = v - s * (2.0 * v)  # v from +V down to -V keeps the loop ccw
        return (1.0 + vv * vv) / 2.0 + 1j * vv

    arc_len = 2.0 * v * 3.5  # rough weight; exactness is irrelevant here
    boundary = _piecewise(
        [
            (arc_len, arc),
            _segment(complex(u_end, -v), complex(_PARABOLA_XMAX, -v)),
            _segment(complex(_PARABOLA_XMAX, -v), complex(_PARABOLA_XMAX, v)),
            _segment(complex(_PARABOLA_XMAX, v), complex(u_end, v)),
        ]
    )
    return Region(
        "parabola",
        {},
        "parabolic region Re w > |w - 1|",
        0.5,
        1.5,
        lambda a: a - 0.5,
        lambda w: w.real > np.abs(w - 1.0),
        lambda w: w.real - np.abs(w - 1.0),
        boundary,
    )


def _make_exponential() -> Region:
    def contains(w):
        with np.errstate(divide="ignore", invalid="ignore"):
            mod = np.hypot(np.log(np.abs(w)), np.angle(w))
        return mod < 1.0

    def margin(w):
        with np.errstate(divide="ignore", invalid="ignore"):
            mod = np.hypot(np.log(np.abs(w)), np.angle(w))
        return 1.0 - mod

    return Region(
        "exponential",
        {},
        "|log w| < 1",
        1.0 / E,
        (E + 1.0 / E) / 2.0,
        lambda a: a - 1.0 / E,
        contains,
        margin,
        _piecewise([(1.0, lambda s: np.exp(np.exp(2j * np.pi * s)))]),
    )


def _make_cardioid() -> Region:
    def boundary_core(s):
        z = np.exp(2j * np.pi * s)
        return 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z

    return Region(
        "cardioid",
        {},
        "cardioid region",
        1.0 / 3.0,
        5.0 / 3.0,
        lambda a: a - 1.0 / 3.0,
        None,
        None,
        _piecewise([(1.0, boundary_core)]),
    )


def _make_sine() -> Region:
    def boundary_core(s):
        return 1.0 + np.sin(np.exp(2j * np.pi * s))

    return Region(
        "sine",
        {},
        "image of the disk under 1 + sin z",
        1.0 - SIN1,
        1.0 + SIN1,
        lambda a: SIN1 - abs(a - 1.0),
        None,
        None,
        _piecewise([(1.0, boundary_core)]),
    )


def _make_lune() -> Region:
    def contains(w):
        return (np.abs(w - 1.0) < SQRT2) & (np.abs(w + 1.0) > SQRT2)

    def margin(w):
        return np.minimum(SQRT2 - np.abs(w - 1.0), np.abs(w + 1.0) - SQRT2)

    # outer arc |w-1| = sqrt2 swept ccw, then inner arc |w+1| = sqrt2 swept back
    def outer(s):
        phi = -0.75 * np.pi + s * 1.5 * np.pi
        return 1.0 + SQRT2 * np.exp(1j * phi)

    def inner(s):
        phi = 0.25 * np.pi - s * 0.5 * np.pi
        return -1.0 + SQRT2 * np.exp(1j * phi)

    return Region(
        "lune",
        {},
        "lune |w^2 - 1| < 2|w| (right component)",
        SQRT2 - 1.0,
        SQRT2 + 1.0,
        lambda a: 1.0 - abs(SQRT2 - a),
        contains,
        margin,
        _piecewise([(SQRT2 * 1.5 * np.pi, outer), (SQRT2 * 0.5 * np.pi, inner)]),
    )


def _make_rational() -> Region:
    def boundary_core(s):
        return _rational_map(np.exp(2j * np.pi * s))

    return Region(
        "rational",
        {},
        "image of the disk under 1 + (kz + z^2)/(k^2 - kz), k = sqrt2 + 1",
        RATIONAL_LANDMARK,
        SQRT2,
        lambda a: a - RATIONAL_LANDMARK,
        None,
        None,
        _piecewise([(1.0, boundary_core)]),
    )


def _make_reverse_lemniscate() -> Region:
    def contains(w):
        s = w - SQRT2
        return (np.abs(s * s - 1.0) < 1.0) & (w.real < SQRT2)

    def margin(w):
        s = w - SQRT2
        return np.minimum(1.0 - np.abs(s * s - 1.0), SQRT2 - w.real)

    def rho(a):
        u = 1.0 - (SQRT2 - a) ** 2
        return math.sqrt(max(0.0, math.sqrt(u) - u))

    return Region(
        "reverse-lemniscate",
        {},
        "left loop of |(w - sqrt2)^2 - 1| = 1",
        SQRT2 / 3.0,
        SQRT2,
        rho,
        contains,
        margin,
        _piecewise([(1.0, _reverse_lemniscate_loop)]),
    )


def _make_sector(gamma: float) -> Region:
    if not 0.0 < gamma <= 1.0:
        raise ParameterError(f"sector order gamma={gamma} must lie in (0, 1]")
    half = math.pi * gamma / 2.0
    rot_plus = complex(math.cos(half), math.sin(half))
    rot_minus = rot_plus.conjugate()
    rr = _SECTOR_RADIUS

    def contains(w):
        return ((w * rot_plus).imag > 0.0) & ((w * rot_minus).imag < 0.0)

    def margin(w):
        return np.minimum((w * rot_plus).imag, -(w * rot_minus).imag)

    def arc(s):
        phi = -half + s * 2.0 * half
        return rr * np.exp(1j * phi)

    boundary = _piecewise(
        [
            _segment(0.0 + 0.0j, rr * rot_minus),
            (rr * 2.0 * half, arc),
            _segment(rr * rot_plus, 0.0 + 0.0j),
        ]
    )
    return Region(
        "sector",
        {"gamma": gamma},
        f"sector |arg w| < pi*{gamma:g}/2",
        0.0,
        math.inf,
        lambda a: a * math.sin(half),
        contains,
        margin,
        boundary,
    )


def _make_janowski(c0: float, d: float) -> Region:
    if not (math.isfinite(c0) and math.isfinite(d)):
        raise ParameterError("janowski disk parameters must be finite")
    if d <= 0.0:
        raise ParameterError(f"janowski disk size d={d} must be positive")

    def boundary_core(s):
        return c0 + d * np.exp(2j * np.pi * s)

    return Region(
        "janowski-disk",
        {"c0": c0, "d": d},
        f"disk |w - {c0:g}| < {d:g}",
        c0 - d,
        c0 + d,
        lambda a: d - abs(a - c0),
        lambda w: np.abs(w - c0) < d,
        lambda w: d - np.abs(w - c0),
        _piecewise([(1.0, boundary_core)]),
    )


def region(
    key: str,
    alpha: float = 0.0,
    gamma: float = 1.0,
    c0: float = 1.0,
    d: float = SQRT2 - 1.0,
) -> Region:
    """Build a catalogue region; parameters are used only where they apply."""
    if key == "half-plane":
        return _make_half_plane(alpha)
    if key == "lemniscate":
        return _make_lemniscate()
    if key == "parabola":
        return _make_parabola()
    if key == "exponential":
        return _make_exponential()
    if key == "cardioid":
        return _make_cardioid()
    if key == "sine":
        return _make_sine()
    if key == "lune":
        return _make_lune()
    if key == "rational":
        return _make_rational()
    if key == "reverse-lemniscate":
        return _make_reverse_lemniscate()
    if key == "sector":
        return _make_sector(gamma)
    if key == "janowski-disk":
        return _make_janowski(c0, d)
    raise ParameterError(f"unknown region {key!r}")


def contains(reg: Region, w: complex) -> bool:
    return reg.contains(w)


def max_inradius(reg: Region, a: float) -> float:
    return reg.rho_max(a)


def region_winding_membership(reg: Region, w: complex, m: int = MEMBERSHIP_SAMPLES) -> bool:
    """Winding-number membership against the region's own boundary."""
    return winding_membership(reg.boundary, w, m=m)

from __future__ import annotations

import math

import numpy as np
import pytest

from starrad import DomainError, FunctionClass, disk_at, extremal_w, max_dist_to_one, univalence_radius
from starrad.classes import center, radius


def test_disk_examples():
    d = disk_at(FunctionClass.F1, 0.2)
    assert abs(d.center - 25.0 / 24.0) < 1e-15
    assert abs(d.center - d.radius) < 1e-15  # touches 0 at the univalence radius
    assert disk_at(FunctionClass.F3, 0.0).center == 1.0
    assert disk_at(FunctionClass.F3, 0.0).radius == 0.0
    d = disk_at(FunctionClass.F4, 2.0 - math.sqrt(3.0))
    assert abs(d.center - d.radius) < 1e-14


def test_univalence_radii():
    assert univalence_radius(FunctionClass.F1) == 0.2
    assert abs(univalence_radius(FunctionClass.F2) - (math.sqrt(5.0) - 2.0)) < 1e-16
    assert univalence_radius(FunctionClass.F3) == 1.0 / 3.0
    assert abs(univalence_radius(FunctionClass.F4) - (2.0 - math.sqrt(3.0))) < 1e-16


def test_domain_error():
    with pytest.raises(DomainError):
        disk_at(FunctionClass.F1, 1.0)


def test_max_dist_to_one_identities():
    rs = np.linspace(0.0, 0.3, 61)
    for r in rs:
        d1 = max_dist_to_one(FunctionClass.F1, r)
        assert abs(d1 - (5 * r + r * r) / (1 - r * r)) < 1e-13
        d3 = max_dist_to_one(FunctionClass.F3, r)
        assert abs(d3 - (3 * r + r * r) / (1 - r * r)) < 1e-13
        for cls in (FunctionClass.F2, FunctionClass.F4):
            d = max_dist_to_one(cls, r)
            assert abs(d - (4 * r + 2 * r * r) / (1 - r * r)) < 1e-13
    assert max_dist_to_one(FunctionClass.F2, 0.0) == 0.0


def test_extremal_stays_in_covering_disk():
    rng = np.random.default_rng(42)
    for cls in FunctionClass:
        ru = univalence_radius(cls)
        for _ in range(1000):
            r = rng.uniform(0.0, 0.95 * ru)
            theta = rng.uniform(0.0, 2.0 * np.pi)
            w = extremal_w(cls, r * np.exp(1j * theta))
            d = disk_at(cls, r)
            assert abs(w - d.center) <= d.radius + 1e-9


def test_real_axis_tangency():
    # the extremal map reaches the left disk extreme for every family, and the
    # right extreme for F1/F3/F4; the F2 extremal misses the right extreme by
    # exactly 2r^2/(1-r^2), which is why its entries bound by |w - 1| are only
    # lower bounds
    for cls in FunctionClass:
        ru = univalence_radius(cls)
        for r in np.arange(0.02, ru, 0.02):
            d = disk_at(cls, r)
            assert abs(extremal_w(cls, r) - (d.center - d.radius)) < 1e-10
            right = extremal_w(cls, -r)
            if cls is FunctionClass.F2:
                deficit = (d.center + d.radius) - right.real
                assert abs(deficit - 2 * r * r / (1 - r * r)) < 1e-10
            else:
                assert abs(right - (d.center + d.radius)) < 1e-10


def test_monotonicity():
    for cls in FunctionClass:
        ru = univalence_radius(cls)
        rs = np.linspace(0.0, ru, 200)
        cens = np.array([center(cls, r) for r in rs])
        rads = np.array([radius(cls, r) for r in rs])
        low = cens - rads
        assert (np.diff(cens) > 0).all()
        assert (np.diff(rads) > 0).all()
        assert (np.diff(low) < 0).all()
        assert low[0] == 1.0 and abs(low[-1]) < 1e-12

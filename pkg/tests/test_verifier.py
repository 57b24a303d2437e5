from __future__ import annotations

import pytest

from starrad import DomainError, FunctionClass, solve_radius
from starrad.regions import SIN1, SQRT2, region
from starrad.verifier import (
    run_full_suite,
    verify_containment,
    verify_sharpness,
    verify_tangency,
    verify_violation,
)

F1, F2, F3, F4 = FunctionClass


def test_containment_below_above_lemniscate():
    reg = region("lemniscate")
    ok = verify_containment(F1, reg, 0.0800, n=2048)
    assert ok.passed and ok.worst_margin > 0.0
    bad = verify_containment(F1, reg, 0.0820, n=2048)
    assert not bad.passed
    assert bad.witness is not None
    # the escape happens on the real axis, just beyond sqrt(2)
    assert abs(bad.witness.imag) < 1e-9
    assert bad.witness.real > SQRT2


def test_containment_tiny_radius_everywhere():
    for key in ("parabola", "cardioid", "rational", "reverse-lemniscate", "sector"):
        rep = verify_containment(F2, region(key), 1e-6, n=256)
        assert rep.passed


def test_containment_argument_checks():
    with pytest.raises(DomainError):
        verify_containment(F1, region("parabola"), 0.05, n=100)
    with pytest.raises(DomainError):
        verify_containment(F1, region("parabola"), 1.5)


def test_violation_probe():
    reg = region("parabola")
    big_r = solve_radius(F1, reg).numeric
    rep = verify_violation(F1, reg, big_r * (1 + 1e-3), n=1024)
    assert rep.passed and rep.witness is not None
    rep = verify_violation(F1, reg, big_r * 0.5, n=1024)
    assert not rep.passed


def test_witness_symmetry():
    reg = region("lune")
    big_r = solve_radius(F4, reg).numeric
    rep = verify_containment(F4, reg, big_r * (1 + 1e-3), n=2048)
    assert not rep.passed
    w = rep.witness
    assert reg.contains(w) == reg.contains(w.conjugate())


def test_tangency_touch_points():
    reg = region("parabola")
    big_r = solve_radius(F1, reg).numeric
    rep = verify_tangency(F1, reg, big_r)
    assert rep.passed
    assert abs(rep.witness - 0.5) < 1e-2  # grazes the vertex

    reg = region("half-plane")
    big_r = solve_radius(F2, reg).numeric
    rep = verify_tangency(F2, reg, big_r)
    assert rep.passed
    assert abs(rep.witness) < 1e-2  # disk through the origin

    reg = region("lemniscate")
    big_r = solve_radius(F3, reg).numeric
    rep = verify_tangency(F3, reg, big_r)
    assert rep.passed
    assert abs(rep.witness - SQRT2) < 1e-2


def test_sharpness_identities():
    for cls in FunctionClass:
        reg = region("exponential")
        rep = verify_sharpness(cls, reg, solve_radius(cls, reg).numeric)
        assert rep.passed and rep.residual <= 1e-8
    reg = region("cardioid")
    rep = verify_sharpness(F3, reg, solve_radius(F3, reg).numeric)
    assert rep.passed
    assert abs(rep.witness - 1.0 / 3.0) < 1e-12
    reg = region("sine")
    rep = verify_sharpness(F4, reg, solve_radius(F4, reg).numeric)
    assert rep.passed
    assert abs(rep.witness - (1.0 + SIN1)) < 1e-12


def test_sharpness_misuse_on_lower_bound():
    reg = region("sine")
    with pytest.raises(DomainError):
        verify_sharpness(F2, reg, solve_radius(F2, reg).numeric)
    with pytest.raises(DomainError):
        verify_sharpness(F1, region("sector"), 0.1)


def test_reverse_lemniscate_sharpness_gap_is_reported():
    reg = region("reverse-lemniscate")
    for cls in (F1, F3, F4):
        rep = verify_sharpness(cls, reg, solve_radius(cls, reg).numeric)
        assert not rep.passed
        assert rep.residual > 1e-3
        assert rep.note.startswith("expected")


def test_full_suite_outcomes(suite):
    assert suite.ok
    assert len(suite.unexpected) == 0
    assert len(suite.flags) >= 2
    kinds = {rep.kind for rep in suite.reports}
    assert kinds == {"containment", "violation", "tangency", "sharpness"}


def test_suite_stable_across_sample_counts(suite):
    small = run_full_suite(n=256)
    pattern = {
        (r.kind, r.cls, r.region.key, round(r.r, 12)): r.passed for r in small.reports
    }
    big_pattern = {
        (r.kind, r.cls, r.region.key, round(r.r, 12)): r.passed for r in suite.reports
    }
    assert pattern == big_pattern


def test_suite_restricted_to_f1():
    out = run_full_suite(n=256, classes=(F1,))
    assert len(out.results) == 12  # ten catalogue entries + two disk-target rows

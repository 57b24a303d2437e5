"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Known mismatches between the formulas and the published 4-decimal prints are
reported (and asserted as reported), never silently matched.
"""
from __future__ import annotations

import csv
import io
import json
import math
import xml.etree.ElementTree as ET

import numpy as np

from starrad import FunctionClass
from starrad.cli import main as cli_main
from starrad.regions import SQRT2, region
from starrad.solver import (
    DECIMAL_TOLERANCE,
    PUBLISHED_DECIMALS,
    janowski_disk_radius,
    starlike_order_radius,
    strong_starlike_radius,
)
from starrad.verifier import OFF_AXIS_TOUCH_KEYS

F1, F2, F3, F4 = FunctionClass

GRID_KEYS = (
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

# formula values that stray beyond half an ulp of their published 4-decimal
# print; these must be flagged and reported, not matched
EXPECTED_DECIMAL_FLAGS = {
    (F1, "lemniscate"),
    (F1, "sine"),
    (F1, "rational"),
    (F2, "lemniscate"),
    (F3, "cardioid"),
    (F3, "sine"),
    (F4, "lemniscate"),
    (F4, "reverse-lemniscate"),
}


def _grid(results):
    return {(r.cls, r.region.key): r for r in results if r.region.key in GRID_KEYS}


def _ok(num, text):
    print(f"[acceptance] criterion {num}: PASS - {text}")


def test_criterion_1_radius_table(catalogue_results):
    grid = _grid(catalogue_results)
    reported = []
    flagged = set()
    for (cls, key), printed in PUBLISHED_DECIMALS.items():
        res = grid[(cls, key)]
        assert res.closed_form is not None
        assert res.residual <= 1e-10, f"{cls}/{key}: numeric vs closed form {res.residual}"
        has_flag = any("published-decimal-mismatch" in f for f in res.flags)
        if has_flag:
            flagged.add((cls, key))
            assert abs(res.closed_form - printed) > DECIMAL_TOLERANCE
            reported.append(
                f"    reported: {cls.value}/{key} printed {printed:.4f}, "
                f"formula {res.closed_form:.6f}"
            )
        else:
            assert abs(res.numeric - printed) <= DECIMAL_TOLERANCE, f"{cls}/{key}"
            assert abs(res.closed_form - printed) <= DECIMAL_TOLERANCE, f"{cls}/{key}"
    assert flagged == EXPECTED_DECIMAL_FLAGS
    matched = len(PUBLISHED_DECIMALS) - len(flagged)
    _ok(
        1,
        f"all 32 closed-form entries agree with bisection to 1e-10; {matched} match "
        f"their published decimals to 5e-5; {len(flagged)} published decimals are "
        "themselves off and are reported as flags:",
    )
    for line in reported:
        print(line)


def test_criterion_2_flagged_discrepancies(catalogue_results):
    grid = _grid(catalogue_results)
    lem4 = grid[(F4, "lemniscate")]
    assert any("0.9778" in f for f in lem4.flags)
    assert abs(lem4.numeric - (math.sqrt(5.0) - 2.0) / (1.0 + SQRT2)) <= 1e-10
    assert abs(lem4.numeric - 0.9778) > 0.5  # reported, never matched

    hp4 = grid[(F4, "half-plane")]
    assert any("0.276949" in f for f in hp4.flags)
    assert abs(hp4.numeric - (2.0 - math.sqrt(3.0))) <= 1e-12

    jan_half = [
        r
        for r in catalogue_results
        if r.region.key == "janowski-disk" and r.region.params.get("d") == 0.5
    ]
    assert len(jan_half) == 1
    res = jan_half[0]
    assert any("stated-equality-mismatch" in f for f in res.flags)
    target = (2.0 * math.sqrt(7.0) - 5.0) / 3.0
    assert abs(res.numeric - target) <= 1e-10
    assert abs(res.numeric - (5.0 - 2.0 * math.sqrt(6.0))) > 3e-3
    _ok(
        2,
        "the three mandated discrepancies are reported with computed values "
        "0.097783 (lemniscate print 0.9778), 0.267949 (print 0.276949) and "
        "0.097168 (stated equality with 0.101021)",
    )


def test_criterion_3_univalence_radii(catalogue_results):
    grid = _grid(catalogue_results)
    expected = {
        F1: 0.2,
        F2: math.sqrt(5.0) - 2.0,
        F3: 1.0 / 3.0,
        F4: 2.0 - math.sqrt(3.0),
    }
    for cls, val in expected.items():
        assert abs(starlike_order_radius(cls, 0.0) - val) <= 1e-12
        assert abs(grid[(cls, "half-plane")].numeric - val) <= 1e-12
    _ok(3, "univalence radii 1/5, sqrt(5)-2, 1/3, 2-sqrt(3) reproduced at alpha=0 to 1e-12")


def test_criterion_4_criticality(suite):
    below = {}
    above = {}
    for rep in suite.reports:
        if rep.region.key not in GRID_KEYS:
            continue
        pair = (rep.cls, rep.region.key)
        if rep.kind == "containment":
            below[pair] = rep.passed
        elif rep.kind == "violation":
            above[pair] = rep.passed
    assert len(below) == 40 and len(above) == 40
    assert all(below.values()), [k for k, v in below.items() if not v]
    assert all(above.values()), [k for k, v in above.items() if not v]
    _ok(
        4,
        "all 40 catalogue entries: containment holds at R(1-1e-6) with N=4096 "
        "and fails at R(1+1e-3)",
    )


def test_criterion_5_sharpness_identities(suite):
    passed = 0
    open_gaps = []
    for rep in suite.reports:
        if rep.kind != "sharpness":
            continue
        if rep.region.key in OFF_AXIS_TOUCH_KEYS:
            # the inscribed disk grazes this boundary off the real axis, so the
            # stated identity cannot close at z = +/-R; reported, not matched
            assert not rep.passed and rep.residual > 1e-3
            assert rep.note.startswith("expected")
            open_gaps.append(f"    reported: {rep.cls.value}/{rep.region.key} "
                             f"identity residual {rep.residual:.4f} (off-axis tangency)")
        else:
            assert rep.passed and rep.residual <= 1e-8, (
                f"{rep.cls}/{rep.region.key}: sharpness residual {rep.residual}"
            )
            passed += 1
    assert passed == 32  # 30 grid identities + the two disk-target rows
    assert len(open_gaps) == 3
    _ok(
        5,
        f"{passed} extremal boundary identities hold to 1e-8; the 3 "
        "reverse-lemniscate claims have no real-axis touch point and are reported:",
    )
    for line in open_gaps:
        print(line)


def test_criterion_6_lemma_soundness():
    lemmas = [
        region("parabola"),
        region("exponential"),
        region("cardioid"),
        region("sine"),
        region("lune"),
        region("rational"),
        region("reverse-lemniscate"),
        region("sector", gamma=1.0),
    ]
    theta = np.arange(512) * (2.0 * np.pi / 512)
    unit = np.exp(1j * theta)
    for reg in lemmas:
        lo, hi = reg.center_span()
        centers = lo + (hi - lo) * np.linspace(1e-3, 1.0 - 1e-3, 200)
        rhos = np.array([reg.rho_max(a) for a in centers])
        pts = (centers[:, None] + (1.0 - 1e-9) * rhos[:, None] * unit[None, :]).ravel()
        ok = reg.contains_many(pts)
        assert ok.all(), f"{reg.key}: {int((~ok).sum())} of {ok.size} points escaped"
    _ok(6, "eight inclusion lemmas sound on 200 centers x 512 angles at (1-1e-9) rho_max")


def test_criterion_7_predicate_winding_cross_validation():
    keys = [
        ("half-plane", {}),
        ("lemniscate", {}),
        ("parabola", {}),
        ("exponential", {}),
        ("lune", {}),
        ("reverse-lemniscate", {}),
        ("sector", {"gamma": 1.0}),
        ("janowski-disk", {"c0": 1.0, "d": SQRT2 - 1.0}),
    ]
    rng = np.random.default_rng(20240817)
    pts = rng.uniform(-0.5, 3.0, 10_000) + 1j * rng.uniform(-1.5, 1.5, 10_000)
    for key, kw in keys:
        reg = region(key, **kw)
        sel = pts[reg.boundary_distance(pts) > 1e-4]
        pred = reg.contains_many(sel)
        wind = reg.polygon(4096).contains(sel)
        mismatches = int((pred != wind).sum())
        assert mismatches == 0, f"{key}: {mismatches} disagreements"
    _ok(7, "predicate vs winding membership: zero disagreements on 1e4 points per region")


def test_criterion_8_consistency_identities(catalogue_results):
    grid = _grid(catalogue_results)
    for cls in FunctionClass:
        a = strong_starlike_radius(cls, 1.0).numeric
        b = starlike_order_radius(cls, 0.0)
        assert abs(a - b) <= 1e-12, f"{cls}: sector(1) vs half-plane(0)"
    lem = grid[(F1, "lemniscate")].numeric
    assert abs(janowski_disk_radius(F1, 1.0, SQRT2 - 1.0) - lem) <= 1e-10
    par = grid[(F1, "parabola")].numeric
    assert abs(starlike_order_radius(F1, 0.5) - par) <= 1e-10
    _ok(
        8,
        "sector(1) = half-plane(0) to 1e-12; S*(1, sqrt2-1) radius = lemniscate radius "
        "and S*(1/2) radius = parabolic radius for F1 to 1e-10",
    )


def test_criterion_9_cli_contract(tmp_path, capsys):
    def run(*argv):
        code = cli_main(list(argv))
        out = capsys.readouterr()
        return code, out.out

    # exit-code table
    assert run("radii", "--class", "f1", "--region", "parabola")[0] == 0
    assert run("radii", "--region", "nonsense")[0] == 2
    assert run("verify", "--class", "f1", "--region", "lemniscate", "--at", "0.082",
               "--samples", "512")[0] == 1
    assert run("plot", "--class", "f1", "--region", "lune",
               "--out", str(tmp_path / "missing" / "f.svg"))[0] == 3

    # byte determinism
    j1 = run("radii", "--format", "json")[1]
    j2 = run("radii", "--format", "json")[1]
    assert j1 == j2
    c1 = run("radii", "--format", "csv")[1]
    c2 = run("radii", "--format", "csv")[1]
    assert c1 == c2

    # csv round-trip at emitted precision
    for row in list(csv.reader(io.StringIO(c1)))[1:]:
        for cell in (row[3], row[4], row[5]):
            if cell:
                assert f"{float(cell):.12g}" == cell

    # svg: well-formed, exactly three curve paths
    out_svg = tmp_path / "fig.svg"
    assert run("plot", "--class", "f1", "--region", "lemniscate", "--out", str(out_svg))[0] == 0
    root = ET.parse(out_svg).getroot()
    curves = [
        el for el in root.iter()
        if el.tag.endswith("path") and el.get("class") != "axis"
    ]
    assert len(curves) == 3

    # json parses and carries the fixed record schema
    rows = json.loads(j1)
    assert {"class", "region", "params", "numeric", "closed_form", "residual", "status", "flags"} == set(rows[0])
    _ok(9, "CLI exit codes 0/1/2/3, byte-deterministic JSON/CSV, round-trip CSV, 3-curve SVG")

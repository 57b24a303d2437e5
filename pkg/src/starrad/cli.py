"""Command-line surface: radius tables, verification runs and figure export.

Exit codes: 0 success (reported discrepancies included), 1 verification
failure, 2 argument error, 3 I/O error.  All documents are byte-deterministic:
numbers are fixed at 12 significant digits, field order is fixed, line endings
are LF.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable

import numpy as np

from .classes import disk_at
from .kernel import DomainError, FunctionClass, ParameterError, extremal_w
from .regions import SQRT2, Region, region
from .solver import (
    CATALOGUE_KEYS,
    NoSolutionError,
    RadiusResult,
    solve_catalogue,
    solve_radius,
)
from .verifier import run_full_suite, verify_containment, verify_sharpness, verify_tangency

VIEWBOX = (-0.5, -1.5, 3.5, 3.0)  # w-plane window containing every region
_CLS_BY_NAME = {c.value: c for c in FunctionClass}
_REGION_CHOICES = CATALOGUE_KEYS + ("janowski-disk",)


def _fmt(x) -> str:
    if x is None:
        return ""
    return f"{x:.12g}"


def _round12(x):
    return None if x is None else float(f"{x:.12g}")


def _params_str(params: dict) -> str:
    return ";".join(f"{k}={_fmt(v)}" for k, v in sorted(params.items()))


def _row_records(results: Iterable[RadiusResult]) -> list[dict]:
    records = []
    for res in results:
        rec = res.row()
        rec["numeric"] = _round12(rec["numeric"])
        rec["closed_form"] = _round12(rec["closed_form"])
        rec["residual"] = _round12(rec["residual"])
        records.append(rec)
    return records


def _emit_table(records: list[dict], out) -> None:
    headers = ["class", "region", "params", "numeric", "closed_form", "residual", "status", "flags"]
    rows = [
        [
            rec["class"],
            rec["region"],
            _params_str(rec["params"]),
            _fmt(rec["numeric"]),
            _fmt(rec["closed_form"]),
            _fmt(rec["residual"]),
            rec["status"],
            "; ".join(rec["flags"]),
        ]
        for rec in records
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    out.write("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(r[i].ljust(widths[i]) for i in range(len(headers))).rstrip() + "\n")


def _emit_json(records: list[dict], out) -> None:
    out.write(json.dumps(records, indent=2) + "\n")


def _emit_csv(records: list[dict], out) -> None:
    import csv

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["class", "region", "params", "numeric", "closed_form", "residual", "status", "flags"])
    for rec in records:
        writer.writerow(
            [
                rec["class"],
                rec["region"],
                _params_str(rec["params"]),
                _fmt(rec["numeric"]),
                _fmt(rec["closed_form"]),
                _fmt(rec["residual"]),
                rec["status"],
                ";".join(rec["flags"]),
            ]
        )


def _region_from_args(key: str, args) -> Region:
    return region(key, alpha=args.alpha, gamma=args.gamma, c0=args.c0, d=args.d)


def cmd_radii(args) -> int:
    classes = [_CLS_BY_NAME[args.cls]] if args.cls else list(FunctionClass)
    if args.region:
        results = [
            solve_radius(cls, _region_from_args(args.region, args), tol=args.tol)
            for cls in classes
        ]
    else:
        results = solve_catalogue(classes=tuple(classes), alpha=args.alpha, gamma=args.gamma, tol=args.tol)
    records = _row_records(results)
    emit = {"table": _emit_table, "json": _emit_json, "csv": _emit_csv}[args.format]
    emit(records, sys.stdout)
    return 0


def _emit_verify(reports, flags, unexpected: int, fmt: str) -> None:
    if fmt == "json":
        doc = {
            "reports": [
                {k: (_round12(v) if isinstance(v, float) else v) for k, v in rep.to_dict().items()}
                for rep in reports
            ],
            "flags": flags,
            "unexpected_failures": unexpected,
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
        return
    for rep in reports:
        print(rep.line())
    for flag in flags:
        print(f"flag        {flag}")
    print(f"summary: {unexpected} unexpected failures, {len(flags)} reported flags")


def cmd_verify(args) -> int:
    n = args.samples
    if args.cls or args.region or args.at is not None:
        classes = [_CLS_BY_NAME[args.cls]] if args.cls else list(FunctionClass)
        keys = [args.region] if args.region else list(CATALOGUE_KEYS)
        reports, flags = [], []
        unexpected = 0
        for cls in classes:
            for key in keys:
                reg = _region_from_args(key, args)
                res = solve_radius(cls, reg, tol=args.tol)
                flags.extend(f"{cls.value}/{reg.key}: {flag}" for flag in res.flags)
                if args.at is not None:
                    rep = verify_containment(cls, reg, args.at, n=n)
                    reports.append(rep)
                    unexpected += 0 if rep.passed else 1
                    continue
                checks = [
                    verify_containment(cls, reg, res.numeric * (1.0 - 1e-6), n=n),
                    verify_tangency(cls, reg, res.numeric, n=n),
                ]
                if res.status == "sharp":
                    checks.append(verify_sharpness(cls, reg, res.numeric))
                for rep in checks:
                    reports.append(rep)
                    if rep.passed:
                        continue
                    if rep.note.startswith("expected"):
                        flags.append(f"{cls.value}/{reg.key}: sharpness identity open")
                    else:
                        unexpected += 1
        _emit_verify(reports, flags, unexpected, args.format)
        return 0 if unexpected == 0 else 1
    outcome = run_full_suite(n=n, tol=args.tol)
    _emit_verify(outcome.reports, outcome.flags, len(outcome.unexpected), args.format)
    return 0 if outcome.ok else 1


def _clip_to_window(points: np.ndarray, pad: float = 0.25) -> list[np.ndarray]:
    """Split a polyline into runs that stay inside the padded view window."""
    x0, y0, w, h = VIEWBOX
    keep = (
        (points.real >= x0 - pad)
        & (points.real <= x0 + w + pad)
        & (points.imag >= y0 - pad)
        & (points.imag <= y0 + h + pad)
    )
    runs = []
    start = None
    for i, k in enumerate(keep):
        if k and start is None:
            start = i
        elif not k and start is not None:
            runs.append(points[start:i])
            start = None
    if start is not None:
        runs.append(points[start:])
    return [r for r in runs if r.size >= 2]


def _path_d(points: np.ndarray, close: bool) -> str:
    cmds = []
    for i, p in enumerate(points):
        op = "M" if i == 0 else "L"
        cmds.append(f"{op} {p.real:.6f} {-p.imag:.6f}")
    if close:
        cmds.append("Z")
    return " ".join(cmds)


def _plot_curves(cls: FunctionClass, reg: Region, tol: float):
    res = solve_radius(cls, reg, tol=tol)
    big_r = res.numeric
    boundary = np.asarray(reg.boundary(np.linspace(0.0, 2.0 * math.pi, 1024, endpoint=False)))
    disk = disk_at(cls, big_r)
    theta = np.linspace(0.0, 2.0 * math.pi, 512, endpoint=False)
    circle = disk.center + disk.radius * np.exp(1j * theta)
    zs = big_r * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False))
    image = np.array([extremal_w(cls, z) for z in zs])
    return res, boundary, circle, image


def _write_svg(path: str, boundary: np.ndarray, circle: np.ndarray, image: np.ndarray) -> None:
    x0, y0, w, h = VIEWBOX
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{x0} {-(y0 + h)} {w} {h}" width="700" height="600">',
        f'<path class="axis" d="M {x0} 0 L {x0 + w} 0" stroke="#999999" '
        'stroke-width="0.006" fill="none"/>',
    ]
    runs = _clip_to_window(boundary)
    survives_whole = len(runs) == 1 and runs[0].size == boundary.size
    d = " ".join(_path_d(run, close=survives_whole) for run in runs)
    lines.append(
        f'<path class="region-boundary" d="{d}" stroke="#1f77b4" stroke-width="0.012" fill="none"/>'
    )
    lines.append(
        f'<path class="covering-disk" d="{_path_d(circle, close=True)}" '
        'stroke="#d62728" stroke-width="0.012" fill="none"/>'
    )
    lines.append(
        f'<path class="extremal-image" d="{_path_d(image, close=True)}" '
        'stroke="#2ca02c" stroke-width="0.012" fill="none"/>'
    )
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_plot_csv(path: str, boundary: np.ndarray, circle: np.ndarray, image: np.ndarray) -> None:
    import csv

    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["curve", "index", "re", "im"])
        for name, pts in (
            ("region-boundary", boundary),
            ("covering-disk", circle),
            ("extremal-image", image),
        ):
            for i, p in enumerate(pts):
                writer.writerow([name, i, _fmt(p.real), _fmt(p.imag)])


def cmd_plot(args) -> int:
    cls = _CLS_BY_NAME[args.cls]
    reg = _region_from_args(args.region, args)
    res, boundary, circle, image = _plot_curves(cls, reg, args.tol)
    try:
        if args.format == "csv":
            _write_plot_csv(args.out, boundary, circle, image)
        else:
            _write_svg(args.out, boundary, circle, image)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {args.out} ({args.format}, {cls.value}/{reg.key}, r={_fmt(res.numeric)})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starrad",
        description="Radii of starlikeness for the families F1..F4, with certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_region_default=True):
        p.add_argument("--class", dest="cls", choices=sorted(_CLS_BY_NAME), default=None)
        p.add_argument("--region", choices=_REGION_CHOICES, default=None)
        p.add_argument("--alpha", type=float, default=0.0, help="half-plane order")
        p.add_argument("--gamma", type=float, default=1.0, help="sector order")
        p.add_argument("--c0", type=float, default=1.0, help="janowski disk center")
        p.add_argument("--d", type=float, default=SQRT2 - 1.0, help="janowski disk size")
        p.add_argument("--tol", type=float, default=1e-13, help="bisection tolerance")

    p_radii = sub.add_parser("radii", help="radius table for the catalogue")
    common(p_radii)
    p_radii.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_radii.set_defaults(fn=cmd_radii)

    p_verify = sub.add_parser("verify", help="containment/tangency/sharpness checks")
    common(p_verify)
    p_verify.add_argument("--samples", type=int, default=4096)
    p_verify.add_argument(
        "--at", type=float, default=None,
        help="verify containment at this radius instead of the computed one",
    )
    p_verify.add_argument("--format", choices=["stream", "json"], default="stream")
    p_verify.set_defaults(fn=cmd_verify)

    p_plot = sub.add_parser("plot", help="export region/disk/extremal geometry")
    common(p_plot)
    p_plot.add_argument("--format", choices=["svg", "csv"], default="svg")
    p_plot.add_argument("--out", required=True)
    p_plot.set_defaults(fn=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "plot" and args.cls is None:
        print("plot needs --class", file=sys.stderr)
        return 2
    if getattr(args, "command", None) == "plot" and args.region is None:
        print("plot needs --region", file=sys.stderr)
        return 2
    if getattr(args, "samples", 4096) < 256:
        print("--samples must be >= 256", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (ParameterError, DomainError, NoSolutionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:  # console-script shim
    sys.exit(main())

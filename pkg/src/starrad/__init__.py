"""Radii of starlikeness for four ratio-defined families of analytic maps.

The families F1..F4 send |z| <= r onto an explicit covering disk under
w = zf'(z)/f(z); for each of ten target regions in the right half-plane the
package computes the largest r keeping that disk inside the region, matches
it against the tabulated closed form, and certifies the result numerically.
"""
from .classes import class_spec, disk_at, max_dist_to_one, univalence_radius
from .geometry import BoundaryIndeterminateError, ClosedPolyline, winding_membership
from .kernel import (
    Disk,
    DomainError,
    FunctionClass,
    ParameterError,
    extremal_f,
    extremal_w,
    logderiv_bound,
    mobius_disk_image,
)
from .regions import Region, contains, max_inradius, region
from .solver import (
    NoSolutionError,
    RadiusResult,
    closed_form_radius,
    janowski_disk_radius,
    solve_catalogue,
    solve_radius,
    starlike_order_radius,
    strong_starlike_radius,
)
from .verifier import (
    VerificationReport,
    run_full_suite,
    verify_containment,
    verify_sharpness,
    verify_tangency,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryIndeterminateError",
    "ClosedPolyline",
    "Disk",
    "DomainError",
    "FunctionClass",
    "NoSolutionError",
    "ParameterError",
    "RadiusResult",
    "Region",
    "VerificationReport",
    "class_spec",
    "closed_form_radius",
    "contains",
    "disk_at",
    "extremal_f",
    "extremal_w",
    "janowski_disk_radius",
    "logderiv_bound",
    "max_dist_to_one",
    "max_inradius",
    "mobius_disk_image",
    "region",
    "run_full_suite",
    "solve_catalogue",
    "solve_radius",
    "starlike_order_radius",
    "strong_starlike_radius",
    "univalence_radius",
    "verify_containment",
    "verify_sharpness",
    "verify_tangency",
    "winding_membership",
]

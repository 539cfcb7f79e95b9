"""Construction and verification of multipartite Bell inequalities.

Exact-rational functionals, LHV bounds by vertex enumeration, facet tests,
an iterative builder that grows (n+1)-party inequalities out of n-party
ones, the MABK / CAF / EMABK / I3322 families, a 46-entry (3,2,2) catalog
with four- and five-party extensions, and see-saw lower bounds on quantum
values.
"""

from .core import (
    BellFunctional,
    FormatError,
    OrbitTooLarge,
    Scenario,
    Transform,
    apply_transform,
    canonical_form,
    evaluate,
    parse,
    parse_transform,
    render,
)
from .iterate import (
    caf,
    chsh,
    check_constraints,
    decompose,
    emabk,
    i3322,
    iterate,
    iterate_2m,
    iterate_3m,
    iterate_sym,
    mabk,
    restrict,
    sliwa,
    sliwa4,
    sliwa5,
)
from .local import VertexReport, TightnessReport, is_tight, lhv_bound

__all__ = [
    "BellFunctional",
    "FormatError",
    "OrbitTooLarge",
    "Scenario",
    "Transform",
    "VertexReport",
    "TightnessReport",
    "apply_transform",
    "caf",
    "canonical_form",
    "chsh",
    "check_constraints",
    "decompose",
    "emabk",
    "evaluate",
    "i3322",
    "is_tight",
    "iterate",
    "iterate_2m",
    "iterate_3m",
    "iterate_sym",
    "lhv_bound",
    "mabk",
    "parse",
    "parse_transform",
    "render",
    "restrict",
    "sliwa",
    "sliwa4",
    "sliwa5",
]

__version__ = "0.1.0"

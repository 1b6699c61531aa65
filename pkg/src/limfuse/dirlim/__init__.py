"""Direct systems of graded vector spaces, their limits, and tensor products."""

from limfuse.dirlim.poset import DirectedPoset
from limfuse.dirlim.graded import GradedSpace, GradeMap
from limfuse.dirlim.system import (
    DirectSystem,
    IncompatibleTarget,
    InvalidSystem,
    Limit,
    Target,
    UnknownElement,
    ValidationReport,
    direct_limit,
    kernel_of_leg,
    kernel_union,
    universal_map,
    validate_system,
)
from limfuse.dirlim.inclusion import (
    InclusionSystem,
    NotASubspace,
    QMapResult,
    canonical_subspace,
    inclusion_system,
    q_map,
)
from limfuse.dirlim.tensor import FubiniReport, fubini_compare, tensor_system
from limfuse.dirlim.serialize import system_from_json, system_to_json
from limfuse.dirlim.selftest import SelftestResult, run_selftest

__all__ = [
    "DirectedPoset",
    "GradedSpace",
    "GradeMap",
    "DirectSystem",
    "Limit",
    "Target",
    "ValidationReport",
    "InvalidSystem",
    "IncompatibleTarget",
    "UnknownElement",
    "NotASubspace",
    "InclusionSystem",
    "QMapResult",
    "FubiniReport",
    "SelftestResult",
    "validate_system",
    "direct_limit",
    "universal_map",
    "kernel_of_leg",
    "kernel_union",
    "canonical_subspace",
    "inclusion_system",
    "q_map",
    "tensor_system",
    "fubini_compare",
    "system_to_json",
    "system_from_json",
    "run_selftest",
]

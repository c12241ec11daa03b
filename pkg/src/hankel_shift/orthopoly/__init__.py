"""Moment functionals, three-term recurrences and the shifted Hankel engine."""

from .functional import MomentFunctional, apply_moment_functional, norm_ratio
from .recurrence import (
    ThreeTermRecurrence,
    bordered_polynomial,
    extract_recurrence,
    monic_op,
)
from .shifts import ShiftEngineState, double_shift_D, jacobi_d, jacobi_ds, shifted_hankel
from .tags import TAGS, RecurrenceTag, tag_spec, tagged_recurrence

__all__ = [
    "MomentFunctional",
    "RecurrenceTag",
    "ShiftEngineState",
    "TAGS",
    "ThreeTermRecurrence",
    "apply_moment_functional",
    "bordered_polynomial",
    "double_shift_D",
    "extract_recurrence",
    "jacobi_d",
    "jacobi_ds",
    "monic_op",
    "norm_ratio",
    "shifted_hankel",
    "tag_spec",
    "tagged_recurrence",
]

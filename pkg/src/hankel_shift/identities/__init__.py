"""Closed forms, auxiliary sequences and the proposition verifiers."""

from .aux import (
    RECURRENCE_IDENTITIES,
    AuxKind,
    K_rational,
    RationalFunction,
    aux_sequence,
    p_poly,
    shift_recurrence_targets,
)
from .closed_forms import FORMULAS, ClosedForm, FormKind, brute_force, closed_form
from .propositions import (
    PROPOSITION_IDS,
    PROPOSITIONS,
    Proposition,
    verify_all,
    verify_proposition,
)
from .report import RECORD_COLUMNS, VerificationRecord, VerificationReport
from .standard_form import StandardForm

__all__ = [
    "FORMULAS",
    "PROPOSITIONS",
    "PROPOSITION_IDS",
    "RECORD_COLUMNS",
    "RECURRENCE_IDENTITIES",
    "AuxKind",
    "ClosedForm",
    "FormKind",
    "K_rational",
    "Proposition",
    "RationalFunction",
    "StandardForm",
    "VerificationRecord",
    "VerificationReport",
    "aux_sequence",
    "brute_force",
    "closed_form",
    "p_poly",
    "shift_recurrence_targets",
    "verify_all",
    "verify_proposition",
]

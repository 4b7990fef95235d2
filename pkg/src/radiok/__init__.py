"""Radio-k-numbers of cycles: exact values, bounds, constructions and an exact search."""

from .constructions import CaseId, CaseParams, ConstructionError, build, classify
from .cyclic import CycleInstance, InstanceError, cycle_distance, lb, phi, subgroup
from .dispatch import Kind, RnStatus, consistency_audit, resolve, rn_d_plus_1_reference
from .oracle import BudgetExceeded, exact_rn, scan_conjecture
from .verify import Labeling, Verdict, minimal_labels_for_order, verify_full, verify_reduced

__all__ = [
    "BudgetExceeded", "CaseId", "CaseParams", "ConstructionError", "CycleInstance",
    "InstanceError", "Kind", "Labeling", "RnStatus", "Verdict", "build", "classify",
    "consistency_audit", "cycle_distance", "exact_rn", "lb", "minimal_labels_for_order",
    "phi", "resolve", "rn_d_plus_1_reference", "scan_conjecture", "subgroup",
    "verify_full", "verify_reduced",
]

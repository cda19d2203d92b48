"""Exact numerical classification of semistable genus-g fibrations over P^1 with five singular fibers."""

__version__ = "0.1.0"

from .certificates import BoundCertificate
from .enumerator import (
    K2Family,
    certify_max_genus,
    chain_lemma_bound,
    component_genus_budget,
    del_pezzo_case_constraints,
    double_fibration_cap,
    feasible_genus_k2,
    scroll_case_feasible,
)
from .invariants import (
    FibrationConfig,
    adjoint_square,
    euler_number_ef,
    g5_slack,
    h0_adjoint_twice,
    mvt_check,
    mvt_scan,
    rf,
    ttz_check,
)
from .lattice import DivisorClass, SurfaceModel, arithmetic_genus, canonical_class, intersection_pairing, proper_transform
from .pencils import CaseId, CaseModel, build_case, enumerate_trigonal, minimal_degree_target, sextic_case, verify_case

"""Quiver representations with relations, the moment-map energy flow and its rank bookkeeping."""
from .builders import (adhm_quiver, a1_double, build_extended_adhm, build_handsaw,
                       build_nakajima_double, edgeless, fixture, handsaw_framing, jordan_double)
from .checks import RelationChecks, relation_set_checks
from .config import DEFAULT, Tolerances, rng_for
from .critical import (CriticalClassification, HessianIndex, HNType, classify_critical,
                       framed_stable, hessian_index, hn_type_algebraic, is_alpha_stable)
from .deformation import (CokernelCheck, DeformationReport, coker_dnu_check, deformation_complex,
                          negative_slice_basis, project_to_relations)
from .errors import (DegenerateSpectrum, NotCritical, NotOnFlowLine, NumericalFailure,
                     NumericalStall, PreconditionFailed, QuiverError, UnstableLedger)
from .expansion import (ExpansionSpec, Restriction, adhm_to_handsaw_spec,
                        build_negative_slice_quiver, embed_restricted_rep, expand_restrict,
                        restrict_rep)
from .flow import FlowResult, closed_path_traces, energy, grad_energy, integrate_flow
from .ledger import ConvolutionLedger, CriticalFactorization, build_ledger, critical_factorization
from .quiver import (DimensionVector, Edge, Path, Quiver, Relation, RelationSet, dims_and_forms,
                     make_relation)
from .rep import (GradedLinearMap, LieAlgebraElement, Representation, block_sum, d_nu,
                  d_nu_adjoint, inf_action, inf_action_adjoint, moment_map, relation_map)
from .slice_hecke import (AdjacentPair, adjacent_fibre, bundle_ranks, euler_data,
                          hecke_tangent_report, negative_slice_at)
from .stability import CentralElement, canonical_central, induced_central, slope

__version__ = "0.1.0"

__all__ = [
    "adhm_quiver", "a1_double", "build_extended_adhm", "build_handsaw", "build_nakajima_double",
    "edgeless", "fixture", "handsaw_framing", "jordan_double", "RelationChecks",
    "relation_set_checks", "DEFAULT", "Tolerances", "rng_for", "CriticalClassification",
    "HessianIndex", "HNType", "classify_critical", "framed_stable", "hessian_index",
    "hn_type_algebraic", "is_alpha_stable", "CokernelCheck", "DeformationReport",
    "coker_dnu_check", "deformation_complex", "negative_slice_basis", "project_to_relations",
    "DegenerateSpectrum", "NotCritical", "NotOnFlowLine", "NumericalFailure", "NumericalStall",
    "PreconditionFailed", "QuiverError", "UnstableLedger", "ExpansionSpec", "Restriction",
    "adhm_to_handsaw_spec", "build_negative_slice_quiver", "embed_restricted_rep",
    "expand_restrict", "restrict_rep", "FlowResult", "closed_path_traces", "energy", "grad_energy",
    "integrate_flow", "ConvolutionLedger", "CriticalFactorization", "build_ledger",
    "critical_factorization", "DimensionVector", "Edge", "Path", "Quiver", "Relation",
    "RelationSet", "dims_and_forms", "make_relation", "GradedLinearMap", "LieAlgebraElement",
    "Representation", "block_sum", "d_nu", "d_nu_adjoint", "inf_action", "inf_action_adjoint",
    "moment_map", "relation_map", "AdjacentPair", "adjacent_fibre", "bundle_ranks", "euler_data",
    "hecke_tangent_report", "negative_slice_at", "CentralElement", "canonical_central",
    "induced_central", "slope",
]

"""Operator-valued Bohr inequalities: checks, radii, and instance generators."""

from .checks import (
    BohrVerdict,
    Branch,
    ProofStep,
    ProofStepReport,
    RadiusReport,
    Relaxation,
    SearchResult,
    SharpnessRow,
    Status,
    Thm2Bounds,
    bombieri_radius,
    build_radius_report,
    check_bb2_norm_bound,
    check_bohr,
    check_cor2,
    check_thm2_bounds,
    chi,
    coefficient_bound_eq14,
    cor2_rhs,
    counterexample_search,
    empirical_bohr_radius,
    majorant,
    proof_step_validate,
    sharpness_scan,
    thm1_admissible_radius,
    xi,
    xi_argmax,
)
from .errors import (
    BohrlabError,
    BoundExceeded,
    CommutationViolated,
    DimensionMismatch,
    DomainError,
    GridTooCoarse,
    HypothesisViolated,
    NoConvergence,
    NotHermitian,
    NotInvertible,
    NotPSD,
    OutsideDomain,
    StepClassMismatch,
)
from .fileio import FunctionFile, load_function_file, save_function_file
from .functions import (
    CoefficientSeries,
    FunctionSamples,
    HalfPlaneLift,
    MobiusLift,
    OperatorFunction,
    Polynomial,
    SchurCertificate,
    TransferRealization,
    certified_sup,
    certify_schur_bound,
    coefficients_dft,
    decimate,
    generate_thm1_instance,
    generate_thm2_instance,
    generate_transfer_instance,
    hypothesis_check,
    mobius_witness,
    reconstruct_from_transform,
    schur_transform,
)
from .linalg import (
    LoewnerVerdict,
    Order,
    abs_operator,
    hermitian_eigen,
    loewner_leq,
    operator_norm,
    psd_sqrt,
)

__version__ = "0.1.0"

"""Exact integrality gates for support t-designs of extremal binary doubly
even self-dual codes."""

from .combinat import binom, elem_sym, falling, stirling2, stirling2_by_formula
from .families import (
    CodeFamily,
    DesignParams,
    NonIntegralLambdaError,
    admissible_scan,
    apply_strengthening,
    block_count,
    design_params,
    extend_lambda,
    lambda_at,
    lambda_base,
    lambda_vector,
)
from .gate import (
    FAIL_NONINTEGER,
    PASS,
    GateResult,
    IntersectionSolution,
    MomentVector,
    NonIntegralMomentError,
    OffsetSet,
    annihilator_divisor,
    integrality_gate,
    moment_vector,
    offset_moment_coefficients,
    offset_product_sum,
    residual_coefficient,
    solve_intersection_numbers,
)
from .gleason import (
    LENGTH_CAP,
    HomogeneousPoly,
    WeightEnumerator,
    extremal_weight_enumerator,
    gleason_basis,
    min_weight_count,
    next_weight_count,
)
from .theorems import THEOREM_IDS, TheoremOutcome, run_theorem

__version__ = "0.1.0"

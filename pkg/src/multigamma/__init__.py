"""Barnes multiple Gamma functions G_n on the cut plane, the Pick ratio
functions f_n = log G_n(z+1) / (z^n Log z), their conjectured Stieltjes
densities, and a numerical verification harness.
"""
from .foundations import (
    CONSTANTS,
    ConstantsTable,
    ConstructionError,
    ConvergenceError,
    CutPlanePoint,
    DomainError,
    PoleError,
    SingularityError,
    bernoulli,
    binomial,
    counting_N,
    max_order,
    pochhammer,
    principal_log,
    southeast_diagonal_sum,
    zero_multiplicity,
)
from .multigamma import (
    BoundaryValue,
    CanonicalProductParams,
    LogMultiGammaValue,
    boundary_log_gn,
    canonical_params,
    log_abs_gn_negative_axis,
    log_barnes_g2,
    log_g3,
    log_gamma,
    log_gn,
    log_gn_shifted,
    log_weierstrass_part,
    recurrence_residual,
    stirling_log_g3,
)
from .pick_stieltjes import (
    DensityQuadrature,
    DensitySample,
    HerglotzParams,
    MonotonicityReport,
    PickScanReport,
    ReconstructionResult,
    boundary_im_f_n,
    complete_monotonicity_probe,
    density_d_n,
    f_n_eval,
    g_n_log_eval,
    g_n_stieltjes_reconstruct,
    herglotz_params,
    pick_grid_scan,
    point_mass_estimate,
    stieltjes_log_inverse,
    stieltjes_reconstruct,
)
from .quadrature import QuadratureConfig, tanh_sinh
from .report import CheckResult, VerificationReport
from .suite import SuiteConfig, run_suite

__version__ = "0.1.0"

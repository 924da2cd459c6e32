"""Exact roots of Eulerian polynomials, Norlund-number identities, and the
log-Cauchy limit law of their empirical measures."""

from .combinatorics import (
    IdentityReport,
    eulerian,
    eulerian_row,
    norlund_integral,
    norlund_numbers,
    stirling2,
    stirling2_row,
    u_elementary,
    verify_eulerian_stirling_sum,
    verify_stirling_norlund,
)
from .limit_law import (
    DomainError,
    cdf_mu,
    density_mu,
    inverse_stieltjes_mass,
    moment_nu,
    stieltjes_mu,
    stieltjes_nu,
)
from .measures import (
    EmpiricalMeasure,
    MomentReport,
    empirical_cdf,
    exact_power_sums,
    ks_distance,
    moment_reference,
    numeric_moments,
)
from .polynomials import (
    DEFAULT_TOL,
    DensePoly,
    RootCountMismatch,
    RootInterval,
    eulerian_poly,
    isolated_u_roots,
    refine_root,
    refined_u_roots,
    roots_x_from_u,
    sturm_isolate,
    u_poly,
)
from .series import (
    TruncatedSeries,
    exp_series,
    log1p,
    norlund_from_egf,
    series_div,
    series_mul,
    verify_stirling_egf,
)

__version__ = "0.1.0"

"""densitylab: verification suites for extremals with a prescribed density.

Three problem families are covered, each asking when an Euler-Lagrange
equation admits several inequivalent solutions inducing the same Lagrangian
density: minimal graphs sharing an area density (:mod:`.minimal_graphs`),
Calabi's band-metric Lagrangian from extremal isosystolic geometry
(:mod:`.calabi`), and constant-energy harmonic maps between spheres
(:mod:`.harmonic`, :mod:`.sphere_maps`).  Exact rational arithmetic is used
wherever a statement is exact; everything else is checked against stated
double-precision tolerances.
"""

from .errors import DensityLabError
from .jets import Jet
from .minimal_graphs import (
    ConstantPlane,
    DensityFamily,
    DoublyPeriodic,
    FirstIntegrals,
    HeliCatenoid,
    LiftedAngle,
    ScherkFifth,
    SurfacePoint,
    c_system_residual,
    compatibility_data,
    density_value,
    first_integrals,
    lift_theta_along,
    minimal_residual,
    mu_C_from_F,
    period_sigma,
    reconstruct_u,
    scherk_closed_form,
    theta_gradient,
    two_theta_solutions,
    zeta_form,
)
from .calabi import (
    CompatibilityData,
    GradientPair,
    band_metric,
    compatibility_extract,
    el_residual,
    ellipse_param,
    lagrangian_L,
    psi_components,
    theta_gradient_calabi,
    third_order_residual,
    two_theta_candidates,
)
from .harmonic import (
    HarmonicElement,
    Poly,
    SpectralParams,
    a_sequence,
    admissible_lambda,
    b_coeff,
    brace,
    dim_harmonics,
    dot,
    harmonic_decompose,
    identity_suite,
    inner,
    laplacian,
    so_action,
    vee,
)
from .sphere_maps import (
    GramMatrix,
    HarmonicBasis,
    KernelCertificate,
    SphericalHarmonicMap,
    basis_Hm,
    canonical_exact_map,
    construct_map,
    energy_density,
    h_of_G,
    nonuniqueness_report,
    solve_h_equals_Rm,
)

__version__ = "0.1.0"

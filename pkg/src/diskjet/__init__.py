"""diskjet: exact variability regions of the first three derivatives of
analytic self-maps of the unit disk fixing the origin.

Built around degree-3 Taylor jets of nested Moebius transformations and
finite Blaschke products; the second- and third-derivative regions are
closed disks, and the region over all admissible second derivatives is a
convex set bounded by an envelope of circles.
"""

from .common import (ClosedDisk, DegenerateCaseError, DomainError,
                     InfeasibleConstraintError, WrongRegimeError)
from .jets import BACKEND, BlaschkeSpec, Jet3, MoebiusParam, blaschke_jet, \
    blaschke_value, jet_arith, moebius_jet, moebius_value
from .peschl import PeschlTriple, peschl_derivatives, peschl_via_conjugation, \
    schur_residual
from .dieudonne import (ExtremalSpec, InterpolationData, NormalizedConfig,
                        disk_order1, disk_order2, disk_order3,
                        disk_order3_params, eval_extremal, extremal_spec,
                        lambda_from_w1, mu_from_w2, normalize, normalized_disk,
                        sharp_bound_lambda1)
from .envelope import (EnvelopeConfig, SupportPoint, circle_family,
                       classify_regime, critical_angles, solve_t_theta,
                       support_point, zeta_theta)
from .boundary import (BoundaryCurve, BoundaryPoint, RegionSpec,
                       abstract_region, closed_form_cap, closed_form_circle,
                       contains, denormalize, gamma, region_spec,
                       sample_boundary)
from .verify import (VerificationReport, fd_audit, fd_jet, membership_audit,
                     regime2_search, sample_self_map)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Variability disks for f', f'', f''' of disk self-maps fixing the origin.

Given interpolation data at a base point z0 (value w0, optionally the
first and second derivatives w1, w2), the exact sets of possible values
of the first, second and third derivative are closed disks.  This module
computes those disks, extracts the disk-valued parameters (lambda, mu)
that coordinatize the data, reduces general configurations to the real
normalized frame (z0 = r > 0, w0 = s >= 0), and builds the nested-Moebius
extremal maps that attain the disk boundaries.

Conventions
-----------
* ``lambda`` parametrizes w1:  w1 = w0/z0 + (r^2-s^2)/(z0 (1-r^2)) * lambda.
* ``mu`` parametrizes w2 once lambda is interior (see :func:`mu_from_w2`).
* |lambda| = 1 forces both w2 and w3 (a unique degree-2 Blaschke-type
  extremal); |lambda| < 1 = |mu| forces w3; otherwise w3 fills a disk of
  positive radius.

The first-derivative radius is (r^2 - s^2)/(r (1 - r^2)).  (The variant
with 1 - s^2 in the denominator that sometimes appears in print is too
small: it is already exceeded by f(z) = z (z - z0)/(1 - conj(z0) z).)
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .common import ClosedDisk, DegenerateCaseError, DomainError, InfeasibleConstraintError
from .jets import Jet3, moebius_jet

#: Accepted overshoot of |lambda|, |mu| beyond 1 before data is declared
#: infeasible; values in (1, 1 + FEAS_TOL] are clamped to the unit circle.
#: Extraction from floating-point jets of genuinely extremal maps lands
#: marginally outside.
FEAS_TOL = 1e-9

#: |lambda| >= 1 - CASE1_TOL is dispatched to the degenerate case (1);
#: same threshold for |mu| and case (2).
CASE1_TOL = 1e-12


@dataclass(frozen=True)
class InterpolationData:
    """Base point, value, and optional derivative constraints."""

    z0: complex
    w0: complex
    w1: Optional[complex] = None
    w2: Optional[complex] = None

    def __post_init__(self):
        r = abs(self.z0)
        if not 0.0 < r < 1.0:
            raise DomainError(f"need 0 < |z0| < 1, got |z0| = {r}")
        if not abs(self.w0) < r:
            raise InfeasibleConstraintError(
                f"need |w0| < |z0| (Schwarz), got |w0| = {abs(self.w0)}, |z0| = {r}")
        if self.w1 is not None:
            # feasibility of w1 == |lambda| <= 1 (+ tolerance)
            lambda_from_w1(self.z0, self.w0, self.w1)

    @property
    def r(self) -> float:
        return abs(self.z0)

    @property
    def s(self) -> float:
        return abs(self.w0)


@dataclass(frozen=True)
class NormalizedConfig:
    """Reduced coordinates: z0 = r, w0 = s with rotation phases recorded.

    ``lam``/``mu`` are the disk parameters recomputed in the rotated frame.
    Regions in the original frame are the normalized regions multiplied by
    ``exp(-i (k phi - xi))`` for the k-th derivative.
    """

    r: float
    s: float
    lam: complex
    mu: Optional[complex] = None
    phi: float = 0.0
    xi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.s < self.r < 1.0:
            raise DomainError(f"need 0 <= s < r < 1, got s={self.s}, r={self.r}")
        if abs(self.lam) > 1.0 + FEAS_TOL:
            raise InfeasibleConstraintError(f"|lambda| = {abs(self.lam)} > 1")
        if self.mu is not None and abs(self.mu) > 1.0 + FEAS_TOL:
            raise InfeasibleConstraintError(f"|mu| = {abs(self.mu)} > 1")

    def rotation(self, k: int) -> complex:
        """exp(i (k phi - xi)): multiplies the k-th derivative when normalizing."""
        return cmath.exp(1j * (k * self.phi - self.xi))


@dataclass(frozen=True)
class ExtremalSpec:
    """Nested-Moebius extremal map attaining a disk boundary (or center).

    depth 1: f(z) = z T_{u0}(v0 T_{-z0}(z))                        (|v0| = 1)
    depth 2: f(z) = z T_{u0}(T_{-z0}(z) T_{v0}(tau T_{-z0}(z)))    (|tau| = 1)
    depth 3: f(z) = z T_{u0}(T_{-z0}(z) T_{v0}(T_{-z0}(z) T_{eta_ext}(
                         e^{i theta} T_{-z0}(z))))
    """

    z0: complex
    u0: complex
    depth: int
    v0: complex
    tau: Optional[complex] = None
    eta_ext: Optional[complex] = None
    theta: float = 0.0


def _clamp_unit(v: complex, what: str) -> complex:
    m = abs(v)
    if m <= 1.0:
        return v
    if m <= 1.0 + FEAS_TOL:
        return v / m
    raise InfeasibleConstraintError(f"|{what}| = {m} exceeds 1 beyond tolerance")


def disk_order1(z0: complex, w0: complex) -> ClosedDisk:
    """Exact region of f'(z0) over self-maps with f(0)=0, f(z0)=w0."""
    r = abs(z0)
    if r == 0:
        raise DomainError("z0 must be nonzero")
    if not r < 1.0:
        raise DomainError("need |z0| < 1")
    s = abs(w0)
    if not s < r:
        raise InfeasibleConstraintError("need |w0| < |z0| (Schwarz)")
    return ClosedDisk(w0 / z0, (r * r - s * s) / (r * (1.0 - r * r)))


def disk_order2(z0: complex, w0: complex, beta: complex) -> ClosedDisk:
    """Exact region of f''(z0) when f'(z0) is pinned through beta in the closed disk."""
    r = abs(z0)
    if r == 0:
        raise DomainError("z0 must be nonzero")
    s = abs(w0)
    if not s < r < 1.0:
        raise InfeasibleConstraintError("need |w0| < |z0| < 1")
    beta = _clamp_unit(complex(beta), "beta")
    scale = 2.0 * (r * r - s * s) / (r * r * (1.0 - r * r) ** 2)
    center = scale * (z0.conjugate() / z0) * beta * (1.0 - w0.conjugate() * beta)
    radius = scale * r * (1.0 - abs(beta) ** 2)
    return ClosedDisk(center, radius)


def lambda_from_w1(z0: complex, w0: complex, w1: complex) -> complex:
    """Disk parameter of the first derivative; clamped to the closed disk."""
    r, s = abs(z0), abs(w0)
    lam = (w1 - w0 / z0) * z0 * (1.0 - r * r) / (r * r - s * s)
    return _clamp_unit(lam, "lambda")


def mu_from_w2(z0: complex, w0: complex, w2: complex, lam: complex) -> complex:
    """Disk parameter of the second derivative given an interior lambda."""
    r, s = abs(z0), abs(w0)
    if abs(lam) >= 1.0 - CASE1_TOL:
        raise DegenerateCaseError(
            "|lambda| = 1: w2 is forced and mu is undefined (case 1)")
    num = w2 * z0 * z0 * (1.0 - r * r) ** 2 / (2.0 * (r * r - s * s)) \
        - lam * (1.0 - w0.conjugate() * lam)
    mu = num / (z0 * (1.0 - abs(lam) ** 2))
    return _clamp_unit(mu, "mu")


def _curly_b(w0: complex, r: float, lam: complex) -> complex:
    w0b = w0.conjugate()
    return w0b * w0b * lam ** 3 - w0b * (1.0 + r * r) * lam ** 2 + r * r * lam


def disk_order3_params(z0: complex, w0: complex, lam: complex,
                       mu: Optional[complex] = None) -> ClosedDisk:
    """Region of f'''(z0) from the disk parameters (lambda, mu).

    |lambda| = 1 (case 1) and |mu| = 1 (case 2) give radius-zero disks.
    mu may be omitted only in case 1, where it is irrelevant.
    """
    r, s = abs(z0), abs(w0)
    if not s < r < 1.0:
        raise InfeasibleConstraintError("need |w0| < |z0| < 1")
    lam = _clamp_unit(complex(lam), "lambda")
    scale = 6.0 * (r * r - s * s) / (z0 ** 3 * (1.0 - r * r) ** 3)
    if abs(lam) >= 1.0 - CASE1_TOL:
        return ClosedDisk(scale * _curly_b(w0, r, lam), 0.0)
    if mu is None:
        raise DomainError("mu required when |lambda| < 1")
    mu = _clamp_unit(complex(mu), "mu")
    gap_l = 1.0 - abs(lam) ** 2
    center = scale * (
        _curly_b(w0, r, lam)
        + z0 * mu * gap_l * (1.0 + r * r - 2.0 * w0.conjugate() * lam - z0 * lam.conjugate() * mu))
    if abs(mu) >= 1.0 - CASE1_TOL:
        return ClosedDisk(center, 0.0)
    radius = 6.0 * (r * r - s * s) / (r * (1.0 - r * r) ** 3) * gap_l * (1.0 - abs(mu) ** 2)
    return ClosedDisk(center, radius)


def disk_order3(data: InterpolationData) -> ClosedDisk:
    """Region of f'''(z0) from raw interpolation data (w1 and, unless
    lambda is unimodular, w2)."""
    if data.w1 is None:
        raise DomainError("w1 required for the order-3 disk")
    lam = lambda_from_w1(data.z0, data.w0, data.w1)
    if abs(lam) >= 1.0 - CASE1_TOL:
        return disk_order3_params(data.z0, data.w0, lam)
    if data.w2 is None:
        raise DomainError("w2 required for the order-3 disk when |lambda| < 1")
    mu = mu_from_w2(data.z0, data.w0, data.w2, lam)
    return disk_order3_params(data.z0, data.w0, lam, mu)


def normalized_disk(r: float, s: float, lam: complex,
                    mu: Optional[complex] = None) -> ClosedDisk:
    """Order-3 disk in the real normalized frame (z0 = r, w0 = s)."""
    return disk_order3_params(complex(r), complex(s), lam, mu)


def coeff_a(r: float, s: float) -> float:
    """Scale constant 6 (r^2 - s^2) / (r^3 (1 - r^2)^3) of the normalized frame."""
    return 6.0 * (r * r - s * s) / (r ** 3 * (1.0 - r * r) ** 3)


def coeff_b(r: float, s: float, lam: complex) -> complex:
    """Cubic s^2 lam^3 - s (1 + r^2) lam^2 + r^2 lam of the normalized frame."""
    return s * s * lam ** 3 - s * (1.0 + r * r) * lam ** 2 + r * r * lam


def normalize(data: InterpolationData) -> NormalizedConfig:
    """Rotate the configuration to z0 = r > 0, w0 = s >= 0.

    The rotated map is f~(z) = e^{-i xi} f(e^{i phi} z), so the k-th
    derivative picks up e^{i (k phi - xi)}; lambda and mu are recomputed
    from the rotated derivative values.
    """
    if data.w1 is None:
        raise DomainError("w1 required to extract lambda")
    r, s = data.r, data.s
    phi = cmath.phase(data.z0)
    xi = cmath.phase(data.w0) if data.w0 != 0 else 0.0
    w1_n = cmath.exp(1j * (phi - xi)) * data.w1
    lam_n = lambda_from_w1(complex(r), complex(s), w1_n)
    mu_n: Optional[complex] = None
    if data.w2 is not None and abs(lam_n) < 1.0 - CASE1_TOL:
        w2_n = cmath.exp(1j * (2.0 * phi - xi)) * data.w2
        mu_n = mu_from_w2(complex(r), complex(s), w2_n, lam_n)
    return NormalizedConfig(r=r, s=s, lam=lam_n, mu=mu_n, phi=phi, xi=xi)


def extremal_spec(config: NormalizedConfig, depth: int, theta: float = 0.0) -> ExtremalSpec:
    """Extremal map of the stated nesting depth for the configuration.

    Depth 1 needs |lambda| = 1; depth 2 needs |lambda| < 1 = |mu|;
    depth 3 needs both interior.  The returned spec lives in the original
    (rotated) frame of the configuration.
    """
    r, s = config.r, config.s
    z0 = r * cmath.exp(1j * config.phi)
    w0 = s * cmath.exp(1j * config.xi)
    u0 = w0 / z0
    # disk parameters back in the original frame
    lam_o = cmath.exp(1j * config.xi) * config.lam
    mu_o = None if config.mu is None else cmath.exp(1j * (config.xi - config.phi)) * config.mu
    frame = r * r / (z0 * z0)  # unimodular

    if depth == 1:
        if abs(config.lam) < 1.0 - CASE1_TOL:
            raise DomainError("depth 1 requires |lambda| = 1")
        return ExtremalSpec(z0=z0, u0=u0, depth=1, v0=frame * lam_o, theta=theta)

    if abs(config.lam) >= 1.0 - CASE1_TOL:
        raise DomainError("depths 2 and 3 require |lambda| < 1")
    if mu_o is None:
        raise DomainError("mu required for depths 2 and 3")
    v0 = frame * lam_o

    if depth == 2:
        if abs(config.mu) < 1.0 - CASE1_TOL:
            raise DomainError("depth 2 requires |mu| = 1")
        tau = z0.conjugate() * mu_o / z0
        return ExtremalSpec(z0=z0, u0=u0, depth=2, v0=v0, tau=tau, theta=theta)

    if depth == 3:
        if abs(config.mu) >= 1.0 - CASE1_TOL:
            raise DomainError("depth 3 requires |mu| < 1")
        eta = frame * mu_o
        if abs(eta) >= 1.0:
            # cannot happen for admissible mu; kept as a hard runtime guard
            raise InfeasibleConstraintError(f"constructed |eta_ext| = {abs(eta)} >= 1")
        return ExtremalSpec(z0=z0, u0=u0, depth=3, v0=v0, eta_ext=eta, theta=theta)

    raise DomainError(f"depth must be 1, 2 or 3, got {depth}")


def eval_extremal(spec: ExtremalSpec, z: Optional[complex] = None) -> Jet3:
    """Jet of the extremal map at z (default: its own base point)."""
    at = spec.z0 if z is None else complex(z)
    zj = Jet3.identity(at)
    m = moebius_jet(-spec.z0, zj)
    if spec.depth == 1:
        inner = m.scale(spec.v0)
    elif spec.depth == 2:
        inner = m * moebius_jet(spec.v0, m.scale(spec.tau))
    else:
        rot = cmath.exp(1j * spec.theta)
        inner = m * moebius_jet(spec.v0, m * moebius_jet(spec.eta_ext, m.scale(rot)))
    return zj * moebius_jet(spec.u0, inner)


def sharp_bound_lambda1(r: float, s: float) -> tuple[float, float]:
    """Largest |f'''| over the degenerate |lambda| = 1 family, and the
    Moebius parameter of the attaining map.

    The bound is A [(1 + r^2) s + s^2 + r^2], attained at lambda = -1 by
    f(z) = z T_{s/r}(-T_{-r}(z)), a disk automorphism up to the leading
    factor with parameter a = (r^2 + s)/(r (1 + s)).
    """
    if not 0.0 <= s < r < 1.0:
        raise DomainError("need 0 <= s < r < 1")
    bound = coeff_a(r, s) * ((1.0 + r * r) * s + s * s + r * r)
    a = (r * r + s) / (r * (1.0 + s))
    return bound, a

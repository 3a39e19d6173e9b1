"""Support-point machinery for the union of the circle family

    c(zeta) = zeta (1 - eta zeta),   rho(zeta) = t (1 - |zeta|^2),

over zeta in the closed unit disk.  The union V is a compact convex set;
its boundary is traced by support points v_theta, one per direction
theta, obtained either from an interior tangent disk (when the defining
gap is negative) or from a degenerate point-circle on |zeta| = 1 (found
by a bracketed root solve).

Configs may be abstract: any t > |eta| is accepted, even pairs not
realizable from admissible (r, s, lambda) data, so all three boundary
regimes are exercisable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .common import ClosedDisk, DomainError, WrongRegimeError

#: Absolute tolerance on the branch predicate |t e^{i theta} - conj(eta)|
#: - 2 (t^2 - |eta|^2); makes the branch switch deterministic.
BRANCH_TOL = 1e-12


@dataclass(frozen=True)
class EnvelopeConfig:
    t: float
    eta: complex = 0j

    def __post_init__(self):
        if not self.t > 0.0:
            raise DomainError("need t > 0")
        if not self.t > abs(self.eta):
            raise DomainError(f"need t > |eta|, got t={self.t}, |eta|={abs(self.eta)}")


@dataclass(frozen=True)
class SupportPoint:
    """Boundary point of V maximizing Re(e^{-i theta} w).

    ``regime_branch`` records which case produced it: "full-point" when a
    positive-radius member disk touches the supporting line, "disk-point"
    when the support comes from a degenerate point-circle on |zeta| = 1.
    """

    theta: float
    t_theta: float
    zeta_theta: complex
    v_theta: complex
    regime_branch: str


def circle_family(cfg: EnvelopeConfig, zeta: complex) -> ClosedDisk:
    """Member disk of the family at parameter zeta, |zeta| <= 1."""
    az = abs(zeta)
    if az > 1.0 + 1e-12:
        raise DomainError("need |zeta| <= 1")
    return ClosedDisk(zeta * (1.0 - cfg.eta * zeta), cfg.t * max(0.0, 1.0 - az * az))


def _gap(cfg: EnvelopeConfig, theta: float) -> float:
    ae = abs(cfg.eta)
    return abs(cfg.t * cmath.exp(1j * theta) - cfg.eta.conjugate()) \
        - 2.0 * (cfg.t * cfg.t - ae * ae)


def solve_t_theta(cfg: EnvelopeConfig, theta: float) -> float:
    """The radius parameter of the support construction.

    When the gap at t is nonnegative, returns the unique x > |eta| with
    |x e^{i theta} - conj(eta)| = 2 (x^2 - |eta|^2); otherwise returns t.
    """
    if _gap(cfg, theta) < -BRANCH_TOL:
        return cfg.t
    ae = abs(cfg.eta)
    eb = cfg.eta.conjugate()
    w = cmath.exp(1j * theta)

    def f(x: float) -> float:
        return 2.0 * (x * x - ae * ae) - abs(x * w - eb)

    lo = ae + 1e-15 * (1.0 + ae)
    if f(lo) >= 0.0:
        # only at theta = -arg(eta) with the root collapsing onto |eta|
        return lo
    hi = max(cfg.t, lo + 0.5)
    for _ in range(200):
        if f(hi) > 0.0:
            break
        hi *= 2.0
    else:  # pragma: no cover - RHS is eventually quadratic-dominant
        raise RuntimeError("root bracketing failure in solve_t_theta")
    return brentq(f, lo, hi, xtol=1e-15, rtol=8.9e-16)


def zeta_theta(cfg: EnvelopeConfig, theta: float) -> complex:
    """Family parameter of the support point; on the root branch it is
    unimodular by construction."""
    tt = solve_t_theta(cfg, theta)
    ae = abs(cfg.eta)
    if tt <= ae:
        raise DomainError("degenerate configuration: t_theta <= |eta|")
    return (tt * cmath.exp(1j * theta) - cfg.eta.conjugate()) / (2.0 * (tt * tt - ae * ae))


def support_point(cfg: EnvelopeConfig, theta: float) -> SupportPoint:
    """Boundary point of V in direction theta with its branch tag."""
    gap = _gap(cfg, theta)
    if gap < -BRANCH_TOL:
        zt = zeta_theta(cfg, theta)
        disk = circle_family(cfg, zt)
        v = disk.center + disk.radius * cmath.exp(1j * theta)
        return SupportPoint(theta, cfg.t, zt, v, "full-point")
    tt = solve_t_theta(cfg, theta)
    ae = abs(cfg.eta)
    zt = (tt * cmath.exp(1j * theta) - cfg.eta.conjugate()) / (2.0 * (tt * tt - ae * ae))
    v = zt * (1.0 - cfg.eta * zt)
    return SupportPoint(theta, tt, zt, v, "disk-point")


def classify_regime(cfg: EnvelopeConfig) -> str:
    """"i": boundary is the image of |zeta| = 1 only; "ii": one full circle;
    "iii": mixed circular arc plus cap."""
    ae = abs(cfg.eta)
    if cfg.t + ae <= 0.5:
        return "i"
    if cfg.t - ae >= 0.5:
        return "ii"
    return "iii"


def critical_angles(cfg: EnvelopeConfig) -> tuple[float, float]:
    """The two branch-switch angles theta1 < theta2 in (-pi, pi] (regime iii).

    They solve |t e^{i theta} - conj(eta)| = 2 (t^2 - |eta|^2), i.e.
    cos(theta + arg eta) = (t^2 + |eta|^2 - 4 (t^2 - |eta|^2)^2) / (2 t |eta|).
    """
    if classify_regime(cfg) != "iii":
        raise WrongRegimeError("critical angles exist only in regime iii")
    ae = abs(cfg.eta)
    q = cfg.t * cfg.t - ae * ae
    rhs = (cfg.t * cfg.t + ae * ae - 4.0 * q * q) / (2.0 * cfg.t * ae)
    rhs = min(1.0, max(-1.0, rhs))
    psi = math.acos(rhs)
    base = -cmath.phase(cfg.eta)
    th = sorted(_wrap(base + sgn * psi) for sgn in (-1.0, 1.0))
    return th[0], th[1]


def _wrap(theta: float) -> float:
    """Wrap to (-pi, pi]."""
    w = math.fmod(theta + math.pi, 2.0 * math.pi)
    if w <= 0.0:
        w += 2.0 * math.pi
    return w - math.pi

"""Invariant derivatives of disk self-maps and the degree-3 Schur residual.

For a holomorphic self-map g of the unit disk, the hyperbolically
invariant derivatives D1, D2, D3 at a point z are the rational
combinations of g, g', g'', g''' evaluated below.  They are the Taylor
coefficients (times n!) of the conjugated map

    w  ->  T_{-g(z)} ( g(T_z(w)) )

at w = 0, which is how :func:`peschl_via_conjugation` computes them as an
independent cross-check.

Note: the classical D3 display is sometimes printed with the mixed term
``-12 conj(g) g'^2 / ((1-|z|^2)(1-|g|^2))`` missing its ``conj(z)``
factor; that reading fails the conjugation identity already for g = id.
The form below carries the factor and matches the conjugation route to
machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from .common import DomainError
from .jets import Jet3, moebius_jet


@dataclass(frozen=True)
class PeschlTriple:
    d1: complex
    d2: complex
    d3: complex


def peschl_derivatives(g_jet: Jet3, z: complex) -> PeschlTriple:
    """D1, D2, D3 of the self-map whose jet at z is g_jet.

    g_jet holds Taylor coefficients, so g' = a1, g'' = 2 a2, g''' = 6 a3.
    """
    if not abs(z) < 1.0:
        raise DomainError("evaluation point must lie in the open unit disk")
    g = g_jet.a0
    if not abs(g) < 1.0:
        raise DomainError("|g(z)| >= 1: invariant derivatives undefined")
    g1 = g_jet.a1
    g2 = 2.0 * g_jet.a2
    g3 = 6.0 * g_jet.a3
    zb = complex(z).conjugate()
    gb = g.conjugate()
    dz = 1.0 - abs(z) ** 2
    dg = 1.0 - abs(g) ** 2

    d1 = dz * g1 / dg
    d2 = dz * dz / dg * (g2 - 2.0 * zb * g1 / dz + 2.0 * gb * g1 * g1 / dg)
    d3 = dz ** 3 / dg * (
        g3
        - 6.0 * zb * g2 / dz
        + 6.0 * gb * g1 * g2 / dg
        + 6.0 * zb * zb * g1 / (dz * dz)
        - 12.0 * zb * gb * g1 * g1 / (dz * dg)
        + 6.0 * gb * gb * g1 ** 3 / (dg * dg)
    )
    return PeschlTriple(d1, d2, d3)


def peschl_via_conjugation(g_jet: Jet3, z: complex) -> PeschlTriple:
    """Independent route: expand T_{-g(z)} ∘ g ∘ T_z at the origin."""
    if not abs(g_jet.a0) < 1.0:
        raise DomainError("|g(z)| >= 1: invariant derivatives undefined")
    t_z = moebius_jet(complex(z), Jet3.identity(0j))
    comp = g_jet.compose(t_z)
    out = moebius_jet(-g_jet.a0, comp)
    return PeschlTriple(out.a1, 2.0 * out.a2, 6.0 * out.a3)


def schur_residual(p: PeschlTriple) -> float:
    """Slack in the degree-3 coefficient inequality; >= 0 for genuine self-maps.

    Zero exactly when the map is a Blaschke product of degree at most 3.
    Returned signed (not clamped) so violations are detectable.
    """
    half_d2 = p.d2 / 2.0
    gap = 1.0 - abs(p.d1) ** 2
    return gap * gap - abs(half_d2) ** 2 - abs(p.d3 / 6.0 * gap + p.d1.conjugate() * half_d2 * half_d2)

"""Variability disks, parameter extraction, normalization, extremals."""

import cmath
import math

import pytest

from diskjet import (DegenerateCaseError, DomainError, InfeasibleConstraintError,
                     InterpolationData, Jet3, NormalizedConfig, blaschke_jet,
                     disk_order1, disk_order2, disk_order3, disk_order3_params,
                     eval_extremal, extremal_spec, lambda_from_w1, mu_from_w2,
                     moebius_value, normalize, normalized_disk,
                     sharp_bound_lambda1)
from diskjet.dieudonne import CASE1_TOL, coeff_a, coeff_b
from diskjet.jets import BlaschkeSpec

from conftest import random_disk_point, rng


def w1_of(z0, w0, lam):
    r, s = abs(z0), abs(w0)
    return w0 / z0 + (r * r - s * s) / (z0 * (1.0 - r * r)) * lam


def w2_of(z0, w0, lam, mu):
    r, s = abs(z0), abs(w0)
    return 2.0 * (r * r - s * s) / (z0 ** 2 * (1.0 - r * r) ** 2) * (
        lam * (1.0 - w0.conjugate() * lam) + z0 * mu * (1.0 - abs(lam) ** 2))


# --------------------------------------------------------------------------
# order 1 and 2

def test_order1_rational_example():
    d = disk_order1(0.5, 0.25)
    assert d.center == 0.5
    assert d.radius == 0.5


def test_order1_radius_attained():
    # f(z) = z (z - z0)/(1 - conj(z0) z) sends z0 to 0 with
    # f'(z0) = z0/(1 - r^2); any smaller radius formula is falsified by it
    for z0 in (0.5, 0.3 + 0.4j, -0.7j):
        r = abs(z0)
        fp = z0 * (1.0 - r * r) / (1.0 - r * r) ** 2
        d = disk_order1(z0, 0.0)
        assert abs(abs(fp - d.center) - d.radius) < 1e-14


def test_order1_validation():
    with pytest.raises(DomainError):
        disk_order1(0.0, 0.0)
    with pytest.raises(DomainError):
        disk_order1(1.5, 0.0)
    with pytest.raises(InfeasibleConstraintError):
        disk_order1(0.5, 0.6)


def test_order2_pinned_center_zero():
    # beta = 0 pins f'(z0) = w0/z0; the second derivative then fills a
    # disk centered at 0 of radius 2 (r^2 - s^2) / (r (1 - r^2)^2)
    z0, w0 = 0.5, 0.2
    d = disk_order2(z0, w0, 0.0)
    assert abs(d.center) < 1e-15
    assert abs(d.radius - 2.0 * (0.25 - 0.04) / (0.5 * 0.75 ** 2)) < 1e-15


def test_order2_unimodular_beta_degenerate():
    d = disk_order2(0.5, 0.2, cmath.exp(0.7j))
    assert d.radius < 1e-15


def test_order2_beta_overshoot():
    with pytest.raises(InfeasibleConstraintError):
        disk_order2(0.5, 0.2, 1.0 + 1e-6)
    clamped = disk_order2(0.5, 0.2, 1.0 + 1e-12)
    assert clamped.radius < 1e-15


# --------------------------------------------------------------------------
# parameter extraction

def test_lambda_mu_roundtrip():
    gen = rng(31)
    for _ in range(30):
        z0 = random_disk_point(gen, cap=0.9)
        if abs(z0) < 0.05:
            continue
        w0 = abs(z0) * 0.9 * random_disk_point(gen, cap=1.0)
        lam = random_disk_point(gen, cap=0.95)
        mu = random_disk_point(gen, cap=0.95)
        w1 = w1_of(z0, w0, lam)
        w2 = w2_of(z0, w0, lam, mu)
        lam_back = lambda_from_w1(z0, w0, w1)
        mu_back = mu_from_w2(z0, w0, w2, lam_back)
        assert abs(lam_back - lam) < 1e-12
        assert abs(mu_back - mu) < 1e-11


def test_lambda_infeasible_w1():
    z0, w0 = 0.5, 0.2
    w1 = w1_of(z0, w0, 1.5 + 0j)
    with pytest.raises(InfeasibleConstraintError):
        lambda_from_w1(z0, w0, w1)
    with pytest.raises(InfeasibleConstraintError):
        InterpolationData(z0, w0, w1)


def test_mu_degenerate_when_lambda_unimodular():
    with pytest.raises(DegenerateCaseError):
        mu_from_w2(0.5, 0.2, 0.0, cmath.exp(0.3j))


def test_interpolation_data_validation():
    with pytest.raises(DomainError):
        InterpolationData(0.0, 0.0)
    with pytest.raises(DomainError):
        InterpolationData(1.2, 0.1)
    with pytest.raises(InfeasibleConstraintError):
        InterpolationData(0.4, 0.5)
    d = InterpolationData(0.5 + 0j, 0.1 + 0.1j)
    assert d.r == 0.5 and d.s == pytest.approx(abs(0.1 + 0.1j))


# --------------------------------------------------------------------------
# order-3 disk

def test_order3_requires_mu_when_interior():
    with pytest.raises(DomainError):
        disk_order3_params(0.5, 0.2, 0.3)
    with pytest.raises(DomainError):
        disk_order3(InterpolationData(0.5, 0.2))


def test_order3_cases_degenerate():
    z0, w0 = 0.5, 0.2
    lam1 = cmath.exp(0.4j)
    assert disk_order3_params(z0, w0, lam1).radius == 0.0
    mu1 = cmath.exp(-1.1j)
    assert disk_order3_params(z0, w0, 0.3 + 0.1j, mu1).radius == 0.0


def test_order3_lambda_zero_circle():
    # lambda = 0 centers every mu-disk so that the union boundary is the
    # exact circle of radius 6 (r^2 - s^2)(1 + r^2) / (r^2 (1 - r^2)^3)
    r, s = 0.5, 0.25
    d = normalized_disk(r, s, 0.0, cmath.exp(0.9j))
    scale = 6.0 * (r * r - s * s) / (r ** 3 * (1.0 - r * r) ** 3)
    # |mu| = 1 value: center modulus r (1 + r^2) * scale / ... spelled out:
    expected = 6.0 * (r * r - s * s) * (1.0 + r * r) / (r * r * (1.0 - r * r) ** 3)
    assert abs(abs(d.center) - expected) < 1e-12 * expected
    assert scale > 0


def test_order3_from_data_matches_params():
    z0 = 0.4 + 0.3j
    w0 = 0.2 - 0.1j
    lam, mu = 0.3 - 0.2j, -0.4 + 0.5j
    data = InterpolationData(z0, w0, w1_of(z0, w0, lam), w2_of(z0, w0, lam, mu))
    d1 = disk_order3(data)
    d2 = disk_order3_params(z0, w0, lam, mu)
    assert abs(d1.center - d2.center) < 1e-10 * (1.0 + abs(d2.center))
    assert abs(d1.radius - d2.radius) < 1e-10 * (1.0 + d2.radius)


def test_membership_concrete_map():
    # f = z * B for a fixed degree-2 Blaschke product must land inside
    z0 = 0.35 + 0.2j
    spec = BlaschkeSpec(phase=0.3, zeros=(0.2 - 0.1j, -0.4j))
    fj = Jet3.identity(z0) * blaschke_jet(spec, z0)
    lam = lambda_from_w1(z0, fj.a0, fj.a1)
    mu = mu_from_w2(z0, fj.a0, 2.0 * fj.a2, lam)
    d = disk_order3_params(z0, fj.a0, lam, mu)
    assert d.excess(6.0 * fj.a3) <= 1e-9 * (1.0 + d.radius)


# --------------------------------------------------------------------------
# normalization

def test_normalize_identity_frame():
    data = InterpolationData(0.5, 0.25, w1_of(0.5 + 0j, 0.25 + 0j, 0.3 + 0.2j))
    cfg = normalize(data)
    assert cfg.phi == 0.0 and cfg.xi == 0.0
    assert abs(cfg.lam - (0.3 + 0.2j)) < 1e-13


def test_normalize_equivariance():
    gen = rng(37)
    for _ in range(20):
        z0 = random_disk_point(gen, cap=0.85)
        if abs(z0) < 0.1:
            continue
        w0 = 0.8 * abs(z0) * random_disk_point(gen, cap=1.0)
        lam = random_disk_point(gen, cap=0.9)
        mu = random_disk_point(gen, cap=0.9)
        data = InterpolationData(z0, w0, w1_of(z0, w0, lam), w2_of(z0, w0, lam, mu))
        cfg = normalize(data)
        d_orig = disk_order3(data)
        d_norm = normalized_disk(cfg.r, cfg.s, cfg.lam, cfg.mu)
        rot = cmath.exp(-1j * (3.0 * cfg.phi - cfg.xi))
        assert abs(d_orig.center - rot * d_norm.center) < 1e-11 * (1.0 + abs(d_norm.center))
        assert abs(d_orig.radius - d_norm.radius) < 1e-11 * (1.0 + d_norm.radius)


def test_normalized_config_validation():
    with pytest.raises(DomainError):
        NormalizedConfig(r=0.3, s=0.4, lam=0j)
    with pytest.raises(InfeasibleConstraintError):
        NormalizedConfig(r=0.5, s=0.2, lam=1.5 + 0j)
    cfg = NormalizedConfig(r=0.5, s=0.2, lam=0j, phi=0.4, xi=0.1)
    assert abs(cfg.rotation(3) - cmath.exp(1j * (1.2 - 0.1))) < 1e-15


# --------------------------------------------------------------------------
# extremal maps

def _interp_checks(spec, z0, w0, lam, mu=None):
    jet = eval_extremal(spec)
    assert abs(jet.a0 - w0) < 1e-12
    lam_back = lambda_from_w1(z0, jet.a0, jet.a1)
    assert abs(lam_back - lam) < 1e-10
    if mu is not None and abs(lam) < 1.0 - CASE1_TOL:
        mu_back = mu_from_w2(z0, jet.a0, 2.0 * jet.a2, lam_back)
        assert abs(mu_back - mu) < 1e-9
    return jet


def test_depth1_forced_value():
    r, s = 0.5, 0.25
    lam = cmath.exp(2.1j)
    cfg = NormalizedConfig(r=r, s=s, lam=lam)
    spec = extremal_spec(cfg, 1)
    jet = _interp_checks(spec, complex(r), complex(s), lam)
    d = normalized_disk(r, s, lam)
    assert abs(6.0 * jet.a3 - d.center) < 1e-10 * (1.0 + abs(d.center))


def test_depth2_forced_value_and_interpolation():
    r, s = 0.6, 0.3
    lam, mu = 0.2 - 0.3j, cmath.exp(-0.8j)
    cfg = NormalizedConfig(r=r, s=s, lam=lam, mu=mu)
    jet = _interp_checks(extremal_spec(cfg, 2), complex(r), complex(s), lam, mu)
    d = normalized_disk(r, s, lam, mu)
    assert abs(6.0 * jet.a3 - d.center) < 1e-9 * (1.0 + abs(d.center))


def test_depth3_boundary_attainment():
    r, s = 0.5, 0.25
    lam, mu = 0.3 + 0.2j, 0.4 - 0.3j
    cfg = NormalizedConfig(r=r, s=s, lam=lam, mu=mu)
    d = normalized_disk(r, s, lam, mu)
    for k in range(12):
        theta = 2.0 * math.pi * k / 12.0
        jet = _interp_checks(extremal_spec(cfg, 3, theta), complex(r), complex(s), lam, mu)
        assert abs(abs(6.0 * jet.a3 - d.center) - d.radius) < 1e-9 * (1.0 + d.radius)


def test_depth3_rotated_frame():
    # attainment survives rotation out of the real normalized frame
    z0 = 0.5 * cmath.exp(0.7j)
    w0 = 0.25 * cmath.exp(-0.4j)
    lam, mu = 0.3 + 0.2j, 0.4 - 0.3j
    data = InterpolationData(z0, w0, w1_of(z0, w0, lam), w2_of(z0, w0, lam, mu))
    cfg = normalize(data)
    d = disk_order3(data)
    jet = eval_extremal(extremal_spec(cfg, 3, 0.9))
    assert abs(jet.a0 - w0) < 1e-12
    assert abs(jet.a1 - data.w1) < 1e-12
    assert abs(2.0 * jet.a2 - data.w2) < 1e-11
    assert abs(abs(6.0 * jet.a3 - d.center) - d.radius) < 1e-9 * (1.0 + d.radius)


def test_extremal_spec_depth_errors():
    cfg_int = NormalizedConfig(r=0.5, s=0.2, lam=0.1 + 0j, mu=0.2 + 0j)
    cfg_uni = NormalizedConfig(r=0.5, s=0.2, lam=cmath.exp(0.2j))
    with pytest.raises(DomainError):
        extremal_spec(cfg_int, 1)
    with pytest.raises(DomainError):
        extremal_spec(cfg_uni, 3)
    with pytest.raises(DomainError):
        extremal_spec(cfg_int, 2)       # needs |mu| = 1
    with pytest.raises(DomainError):
        extremal_spec(NormalizedConfig(r=0.5, s=0.2, lam=0.1 + 0j), 3)
    with pytest.raises(DomainError):
        extremal_spec(cfg_int, 4)


def test_extremal_is_self_map():
    # spot check |f| < 1 on the disk and f(0) = 0
    cfg = NormalizedConfig(r=0.5, s=0.25, lam=0.3 + 0.2j, mu=0.4 - 0.3j)
    spec = extremal_spec(cfg, 3, 1.3)
    assert abs(eval_extremal(spec, 0j).a0) < 1e-15
    gen = rng(41)
    for _ in range(50):
        z = random_disk_point(gen, cap=0.99)
        assert abs(eval_extremal(spec, z).a0) < 1.0


# --------------------------------------------------------------------------
# sharp bound on the degenerate family

def test_sharp_bound_formula_and_attainment():
    for r, s in ((0.5, 0.25), (0.8, 0.3)):
        bound, a = sharp_bound_lambda1(r, s)
        grid_max, arg = 0.0, 0.0
        for k in range(512):
            alpha = -math.pi + 2.0 * math.pi * (k + 1) / 512.0
            c = coeff_a(r, s) * abs(coeff_b(r, s, cmath.exp(1j * alpha)))
            if c > grid_max:
                grid_max, arg = c, alpha
        assert abs(grid_max - bound) < 1e-9 * bound
        assert abs(abs(arg) - math.pi) < 2.0 * math.pi / 512.0 + 1e-12

        # the attaining map is the depth-1 extremal at lambda = -1; at the
        # base point it reduces to z0 * T_{s/r}(0) = s
        cfg = NormalizedConfig(r=r, s=s, lam=-1.0 + 0j)
        jet = eval_extremal(extremal_spec(cfg, 1))
        assert abs(abs(6.0 * jet.a3) - bound) < 1e-9 * bound
        assert abs(jet.a0 / r - moebius_value(s / r, 0j)) < 1e-14
        assert 0.0 < a < 1.0


def test_sharp_bound_validation():
    with pytest.raises(DomainError):
        sharp_bound_lambda1(0.3, 0.4)

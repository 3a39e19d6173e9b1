"""Invariant derivatives: dual-path agreement and the Schur residual."""

import math

import pytest

from diskjet import (DomainError, Jet3, blaschke_jet, moebius_jet,
                     peschl_derivatives, peschl_via_conjugation, schur_residual)

from conftest import random_blaschke, random_disk_point, rng


def triples_close(a, b, tol=1e-10):
    scale = max(1.0, abs(a.d1), abs(a.d2), abs(a.d3))
    return (abs(a.d1 - b.d1) <= tol * scale
            and abs(a.d2 - b.d2) <= tol * scale
            and abs(a.d3 - b.d3) <= tol * scale)


def test_identity_map():
    z = 0.3 - 0.2j
    p = peschl_derivatives(Jet3.identity(z), z)
    assert abs(p.d1 - 1.0) < 1e-14
    assert abs(p.d2) < 1e-13
    assert abs(p.d3) < 1e-13


def test_dual_path_agreement():
    gen = rng(17)
    for _ in range(40):
        b = random_blaschke(gen, int(gen.integers(1, 7)))
        z = random_disk_point(gen, cap=0.85)
        jet = blaschke_jet(b, z)
        assert triples_close(peschl_derivatives(jet, z),
                             peschl_via_conjugation(jet, z))


def test_automorphism_unimodular_d1():
    # for a disk automorphism the invariant first derivative is unimodular
    # and the residual vanishes
    gen = rng(19)
    for _ in range(20):
        a = random_disk_point(gen)
        z = random_disk_point(gen, cap=0.8)
        jet = moebius_jet(a, Jet3.identity(z))
        p = peschl_derivatives(jet, z)
        assert abs(abs(p.d1) - 1.0) < 1e-12
        assert abs(schur_residual(p)) < 1e-12


def test_residual_zero_low_degree():
    gen = rng(23)
    for degree in (1, 2, 3):
        for _ in range(15):
            b = random_blaschke(gen, degree)
            z = random_disk_point(gen, cap=0.8)
            p = peschl_derivatives(blaschke_jet(b, z), z)
            assert abs(schur_residual(p)) < 1e-9


def test_residual_nonnegative_degree6():
    gen = rng(29)
    positive = 0
    for _ in range(60):
        b = random_blaschke(gen, 6)
        z = random_disk_point(gen, cap=0.8)
        p = peschl_derivatives(blaschke_jet(b, z), z)
        res = schur_residual(p)
        assert res >= -1e-10
        if res > 1e-6:
            positive += 1
    # residual is strictly positive generically above degree 3
    assert positive > 0


def test_contraction_scaled_map():
    # g(z) = z/2 at z = 0: D1 = 1/2, D2 = D3 = 0, residual (3/4)^2 > 0
    jet = Jet3(0j, 0.5 + 0j, 0j, 0j)
    p = peschl_derivatives(jet, 0j)
    assert abs(p.d1 - 0.5) < 1e-15
    assert abs(p.d2) < 1e-15 and abs(p.d3) < 1e-15
    assert abs(schur_residual(p) - 0.5625) < 1e-14


def test_domain_checks():
    with pytest.raises(DomainError):
        peschl_derivatives(Jet3.identity(0.5), 1.2)
    with pytest.raises(DomainError):
        peschl_derivatives(Jet3.constant(1.5), 0.2)
    with pytest.raises(DomainError):
        peschl_via_conjugation(Jet3.constant(1.5), 0.2)

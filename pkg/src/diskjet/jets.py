"""Degree-3 complex jets, Moebius transformations and Blaschke products.

A :class:`Jet3` carries the Taylor coefficients ``(a0, a1, a2, a3)`` of an
analytic function at a fixed base point, so the k-th derivative is
``k! * a_k`` exactly by construction.  Jets are fixed at degree 3; that is
all the disk machinery ever needs and it keeps exhaustive testing cheap.

The arithmetic kernels live in a compiled Cython module with a pure
Python twin.  The compiled backend is used when available; set the
environment variable ``DISKJET_PURE=1`` before import to force the pure
backend (used by the benchmark and the backend-parity tests).
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from typing import NamedTuple

from .common import DomainError

if os.environ.get("DISKJET_PURE", "") == "1":
    from . import _kernels_py as _k
else:
    try:
        from . import _kernels as _k  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _k

BACKEND: str = _k.BACKEND_NAME


class Jet3(NamedTuple):
    """Degree-3 truncated Taylor expansion: value and first three derivatives."""

    a0: complex
    a1: complex
    a2: complex
    a3: complex

    @staticmethod
    def identity(z0: complex) -> "Jet3":
        """Jet of z -> z at z0."""
        return Jet3(complex(z0), 1.0 + 0j, 0j, 0j)

    @staticmethod
    def constant(c: complex) -> "Jet3":
        return Jet3(complex(c), 0j, 0j, 0j)

    def derivative(self, k: int) -> complex:
        """k-th derivative, k in 0..3."""
        return math.factorial(k) * self[k]

    def scale(self, c: complex) -> "Jet3":
        return Jet3(*_k.jet_scale(c, self))

    def __add__(self, other):  # type: ignore[override]
        if isinstance(other, Jet3):
            return Jet3(*_k.jet_add(self, other))
        return Jet3(*_k.jet_shift(other, self))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Jet3(*_k.jet_scale(-1.0, self))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet3) else -complex(other))

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, Jet3):
            return Jet3(*_k.jet_mul(self, other))
        return self.scale(complex(other))

    def __rmul__(self, other):
        return self.scale(complex(other))

    def __truediv__(self, other):
        if not isinstance(other, Jet3):
            return self.scale(1.0 / complex(other))
        try:
            return Jet3(*_k.jet_div(self, other))
        except ZeroDivisionError as exc:
            raise DomainError(str(exc)) from exc

    def compose(self, inner: "Jet3") -> "Jet3":
        """Jet of self∘inner; self must be expanded at inner.a0."""
        return Jet3(*_k.jet_compose(self, inner))


def jet_arith(op: str, x: Jet3, y: Jet3) -> Jet3:
    """Dispatch form of the four jet operations: add, mul, div, compose."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "compose":
        return x.compose(y)
    raise ValueError(f"unknown jet operation {op!r}")


@dataclass(frozen=True)
class MoebiusParam:
    """Parameter a of the disk automorphism T_a(z) = (z + a)/(1 + conj(a) z)."""

    a: complex

    def __post_init__(self):
        if not abs(self.a) < 1.0:
            raise DomainError(f"Moebius parameter must satisfy |a| < 1, got |a|={abs(self.a)}")


@dataclass(frozen=True)
class BlaschkeSpec:
    """Finite Blaschke product e^{i phase} prod (z - z_j)/(1 - conj(z_j) z)."""

    phase: float = 0.0
    zeros: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        for z in self.zeros:
            if not abs(z) < 1.0:
                raise DomainError(f"Blaschke zero must lie in the open unit disk, got |z|={abs(z)}")

    @property
    def degree(self) -> int:
        return len(self.zeros)


def _param(a) -> complex:
    return a.a if isinstance(a, MoebiusParam) else complex(a)


def moebius_value(a, z: complex) -> complex:
    return _k.moebius_value(_param(a), complex(z))


def moebius_jet(a, z: Jet3) -> Jet3:
    """Jet of T_a along the inner jet z.

    Raises DomainError when the denominator 1 + conj(a) z vanishes at the
    base point (pole crossing).
    """
    av = _param(a)
    if abs(1.0 + av.conjugate() * z.a0) == 0.0:
        raise DomainError("Moebius denominator vanishes at the base point")
    return Jet3(*_k.moebius_jet(av, z))


def blaschke_value(b: BlaschkeSpec, z: complex) -> complex:
    ph = cmath.exp(1j * b.phase)
    return _k.blaschke_value(ph.real, ph.imag, b.zeros, complex(z))


def blaschke_jet(b: BlaschkeSpec, z0: complex) -> Jet3:
    """Jet of the Blaschke product at an interior point z0."""
    if not abs(z0) < 1.0:
        raise DomainError(f"base point must lie in the open unit disk, got |z0|={abs(z0)}")
    ph = cmath.exp(1j * b.phase)
    return Jet3(*_k.blaschke_jet(ph.real, ph.imag, b.zeros, complex(z0)))

"""Degree-3 Taylor-jet kernels, pure Python backend.

A jet is a 4-tuple ``(a0, a1, a2, a3)`` of complex Taylor coefficients of
an analytic function about a fixed expansion point; the k-th derivative
equals ``k! * ak``.  The compiled backend ``_kernels.pyx`` mirrors this
module function for function; ``diskjet.jets`` selects one at import time.

Everything here works on plain tuples and builtin complex numbers so the
two backends are interchangeable.
"""

BACKEND_NAME = "python"


def jet_add(x, y):
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])


def jet_scale(c, x):
    return (c * x[0], c * x[1], c * x[2], c * x[3])


def jet_shift(c, x):
    """Add the constant c to the jet x."""
    return (x[0] + c, x[1], x[2], x[3])


def jet_mul(x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0,
        x0 * y1 + x1 * y0,
        x0 * y2 + x1 * y1 + x2 * y0,
        x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0,
    )


def jet_recip(y):
    y0, y1, y2, y3 = y
    if y0 == 0:
        raise ZeroDivisionError("reciprocal of a jet with zero constant term")
    r0 = 1.0 / y0
    r1 = -(y1 * r0) * r0
    r2 = -(y1 * r1 + y2 * r0) * r0
    r3 = -(y1 * r2 + y2 * r1 + y3 * r0) * r0
    return (r0, r1, r2, r3)


def jet_div(x, y):
    return jet_mul(x, jet_recip(y))


def jet_compose(x, y):
    """Jet of f∘g where x is the jet of f at y[0] and y is the jet of g.

    Faa di Bruno truncated at order 3.
    """
    f0, f1, f2, f3 = x
    d1, d2, d3 = y[1], y[2], y[3]
    return (
        f0,
        f1 * d1,
        f1 * d2 + f2 * d1 * d1,
        f1 * d3 + 2.0 * f2 * d1 * d2 + f3 * d1 * d1 * d1,
    )


def moebius_value(a, z):
    """T_a(z) = (z + a) / (1 + conj(a) z)."""
    return (z + a) / (1.0 + a.conjugate() * z)


def moebius_jet(a, z):
    """Jet of T_a along the (inner-function) jet z."""
    ac = a.conjugate()
    num = (z[0] + a, z[1], z[2], z[3])
    den = (1.0 + ac * z[0], ac * z[1], ac * z[2], ac * z[3])
    return jet_div(num, den)


def blaschke_value(phase_re, phase_im, zeros, z):
    """Value of e^{i*theta} prod (z - z_j)/(1 - conj(z_j) z).

    The unimodular phase factor is passed as a complex number split into
    components so both backends share one signature.
    """
    acc = complex(phase_re, phase_im)
    for zj in zeros:
        acc *= (z - zj) / (1.0 - zj.conjugate() * z)
    return acc


def blaschke_jet(phase_re, phase_im, zeros, z0):
    """Jet of a finite Blaschke product at z0."""
    acc = (complex(phase_re, phase_im), 0j, 0j, 0j)
    for zj in zeros:
        zjc = zj.conjugate()
        num = (z0 - zj, 1.0 + 0j, 0j, 0j)
        den = (1.0 - zjc * z0, -zjc, 0j, 0j)
        acc = jet_mul(acc, jet_div(num, den))
    return acc

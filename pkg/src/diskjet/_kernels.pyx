# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Degree-3 Taylor-jet kernels, compiled backend.

Mirrors ``_kernels_py`` function for function; see that module for the
jet conventions.  Keep the two in sync.
"""

BACKEND_NAME = "cython"


cdef inline double complex _c(object v):
    return v


def jet_add(x, y):
    return (_c(x[0]) + _c(y[0]), _c(x[1]) + _c(y[1]),
            _c(x[2]) + _c(y[2]), _c(x[3]) + _c(y[3]))


def jet_scale(c, x):
    cdef double complex cc = _c(c)
    return (cc * _c(x[0]), cc * _c(x[1]), cc * _c(x[2]), cc * _c(x[3]))


def jet_shift(c, x):
    return (_c(x[0]) + _c(c), x[1], x[2], x[3])


def jet_mul(x, y):
    cdef double complex x0 = _c(x[0]), x1 = _c(x[1]), x2 = _c(x[2]), x3 = _c(x[3])
    cdef double complex y0 = _c(y[0]), y1 = _c(y[1]), y2 = _c(y[2]), y3 = _c(y[3])
    return (x0 * y0,
            x0 * y1 + x1 * y0,
            x0 * y2 + x1 * y1 + x2 * y0,
            x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0)


def jet_recip(y):
    cdef double complex y0 = _c(y[0]), y1 = _c(y[1]), y2 = _c(y[2]), y3 = _c(y[3])
    cdef double complex r0, r1, r2, r3
    if y0 == 0:
        raise ZeroDivisionError("reciprocal of a jet with zero constant term")
    r0 = 1.0 / y0
    r1 = -(y1 * r0) * r0
    r2 = -(y1 * r1 + y2 * r0) * r0
    r3 = -(y1 * r2 + y2 * r1 + y3 * r0) * r0
    return (r0, r1, r2, r3)


def jet_div(x, y):
    cdef double complex y0 = _c(y[0]), y1 = _c(y[1]), y2 = _c(y[2]), y3 = _c(y[3])
    cdef double complex x0 = _c(x[0]), x1 = _c(x[1]), x2 = _c(x[2]), x3 = _c(x[3])
    cdef double complex r0, r1, r2, r3
    if y0 == 0:
        raise ZeroDivisionError("reciprocal of a jet with zero constant term")
    r0 = 1.0 / y0
    r1 = -(y1 * r0) * r0
    r2 = -(y1 * r1 + y2 * r0) * r0
    r3 = -(y1 * r2 + y2 * r1 + y3 * r0) * r0
    return (x0 * r0,
            x0 * r1 + x1 * r0,
            x0 * r2 + x1 * r1 + x2 * r0,
            x0 * r3 + x1 * r2 + x2 * r1 + x3 * r0)


def jet_compose(x, y):
    cdef double complex f0 = _c(x[0]), f1 = _c(x[1]), f2 = _c(x[2]), f3 = _c(x[3])
    cdef double complex d1 = _c(y[1]), d2 = _c(y[2]), d3 = _c(y[3])
    return (f0,
            f1 * d1,
            f1 * d2 + f2 * d1 * d1,
            f1 * d3 + 2.0 * f2 * d1 * d2 + f3 * d1 * d1 * d1)


def moebius_value(a, z):
    cdef double complex ac = _c(a), zc = _c(z)
    return (zc + ac) / (1.0 + ac.conjugate() * zc)


def moebius_jet(a, z):
    cdef double complex ac = _c(a)
    cdef double complex z0 = _c(z[0]), z1 = _c(z[1]), z2 = _c(z[2]), z3 = _c(z[3])
    cdef double complex cj = ac.conjugate()
    cdef double complex y0 = 1.0 + cj * z0, y1 = cj * z1, y2 = cj * z2, y3 = cj * z3
    cdef double complex r0, r1, r2, r3, x0
    if y0 == 0:
        raise ZeroDivisionError("reciprocal of a jet with zero constant term")
    r0 = 1.0 / y0
    r1 = -(y1 * r0) * r0
    r2 = -(y1 * r1 + y2 * r0) * r0
    r3 = -(y1 * r2 + y2 * r1 + y3 * r0) * r0
    x0 = z0 + ac
    return (x0 * r0,
            x0 * r1 + z1 * r0,
            x0 * r2 + z1 * r1 + z2 * r0,
            x0 * r3 + z1 * r2 + z2 * r1 + z3 * r0)


def blaschke_value(double phase_re, double phase_im, zeros, z):
    cdef double complex acc = phase_re + 1j * phase_im
    cdef double complex zc = _c(z), zj
    for zo in zeros:
        zj = _c(zo)
        acc = acc * (zc - zj) / (1.0 - zj.conjugate() * zc)
    return acc


def blaschke_jet(double phase_re, double phase_im, zeros, z0):
    cdef double complex a0 = phase_re + 1j * phase_im, a1 = 0, a2 = 0, a3 = 0
    cdef double complex zc = _c(z0), zj, zjc
    cdef double complex y0, y1, r0, r1, r2, r3, f0, f1, f2, f3
    cdef double complex b0, b1, b2, b3
    for zo in zeros:
        zj = _c(zo)
        zjc = zj.conjugate()
        # factor jet: (z - zj) / (1 - conj(zj) z) along the identity jet at zc
        y0 = 1.0 - zjc * zc
        y1 = -zjc
        r0 = 1.0 / y0
        r1 = -(y1 * r0) * r0
        r2 = -(y1 * r1) * r0
        r3 = -(y1 * r2) * r0
        f0 = (zc - zj) * r0
        f1 = (zc - zj) * r1 + r0
        f2 = (zc - zj) * r2 + r1
        f3 = (zc - zj) * r3 + r2
        b0 = a0 * f0
        b1 = a0 * f1 + a1 * f0
        b2 = a0 * f2 + a1 * f1 + a2 * f0
        b3 = a0 * f3 + a1 * f2 + a2 * f1 + a3 * f0
        a0, a1, a2, a3 = b0, b1, b2, b3
    return (a0, a1, a2, a3)

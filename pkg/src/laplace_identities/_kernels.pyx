# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled complex log-gamma and digamma kernels.

Same algorithms and constants as ``_kernels_py``; loops run without the GIL
and without numpy temporaries.
"""

import numpy as np

from libc.complex cimport clog, csin, ctan
from libc.math cimport M_PI

cdef double LANCZOS_G_HALF = 5.2421875
cdef double SQRT_2PI = 2.5066282746310005
cdef double LOG_PI = 1.1447298858494002
cdef double DIGAMMA_SHIFT = 10.0

cdef double[15] LANCZOS_COEFFS
LANCZOS_COEFFS[:] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
]

cdef double[8] DIGAMMA_TAIL
DIGAMMA_TAIL[:] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
]


cdef inline double complex _lanczos(double complex x) noexcept nogil:
    cdef double complex head
    cdef double complex ser = LANCZOS_COEFFS[0]
    cdef int k
    for k in range(1, 15):
        ser = ser + LANCZOS_COEFFS[k] / (x + k)
    head = (x + 0.5) * (clog(x + LANCZOS_G_HALF) - 1.0)
    return head + (clog(SQRT_2PI * ser / x) - (LANCZOS_G_HALF - 0.5))


cdef inline double complex _lgamma(double complex z) noexcept nogil:
    if z.real < 0.5:
        return LOG_PI - clog(csin(M_PI * z)) - _lanczos(1.0 - z)
    return _lanczos(z)


cdef inline double complex _digamma_right(double complex w) noexcept nogil:
    cdef double complex acc = 0.0
    cdef double complex r2, tail = 0.0
    cdef int k
    while w.real < DIGAMMA_SHIFT:
        acc = acc - 1.0 / w
        w = w + 1.0
    r2 = 1.0 / (w * w)
    for k in range(7, -1, -1):
        tail = tail * r2 + DIGAMMA_TAIL[k]
    return acc + clog(w) - 0.5 / w - tail * r2


cdef inline double complex _digamma(double complex z) noexcept nogil:
    if z.real < 0.5:
        return _digamma_right(1.0 - z) - M_PI / ctan(M_PI * z)
    return _digamma_right(z)


def lgamma(z):
    cdef double complex[::1] src = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    out = np.empty(src.shape[0], dtype=np.complex128)
    cdef double complex[::1] dst = out
    cdef Py_ssize_t i, n = src.shape[0]
    with nogil:
        for i in range(n):
            dst[i] = _lgamma(src[i])
    return out.reshape(np.shape(z))


def digamma(z):
    cdef double complex[::1] src = np.ascontiguousarray(z, dtype=np.complex128).ravel()
    out = np.empty(src.shape[0], dtype=np.complex128)
    cdef double complex[::1] dst = out
    cdef Py_ssize_t i, n = src.shape[0]
    with nogil:
        for i in range(n):
            dst[i] = _digamma(src[i])
    return out.reshape(np.shape(z))

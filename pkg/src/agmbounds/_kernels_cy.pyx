# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels.

Cython twin of _kernels_py with identical floating-point operation order;
compiled with -ffp-contract=off so results match the pure backend bit for
bit.
"""

from libc.math cimport M_PI, exp, fabs, log, log1p, sqrt, cos, sin

from agmbounds._gl16 import GL16_NODES, GL16_WEIGHTS

cdef double[16] _NODES
cdef double[16] _WEIGHTS
cdef int _i
for _i in range(16):
    _NODES[_i] = GL16_NODES[_i]
    _WEIGHTS[_i] = GL16_WEIGHTS[_i]


def agm_limit(double a, double b, double rel_tol):
    """Common limit of the arithmetic-geometric iteration, plus step count."""
    cdef double hi, lo, x, y, nx, ny, gap, new_gap
    cdef int n
    if a == b:
        return a, 0
    if a >= b:
        hi = a
        lo = b
    else:
        hi = b
        lo = a
    x = 1.0
    y = lo / hi
    n = 0
    gap = x - y
    while gap > rel_tol * x:
        nx = 0.5 * (x + y)
        ny = sqrt(x * y)
        x = nx
        y = ny
        n += 1
        new_gap = fabs(x - y)
        if new_gap >= gap:
            gap = new_gap
            break
        gap = new_gap
    return hi * x, n


def agm_iterates(double a, double b, double rel_tol):
    """Full AGM iterate sequence [(a_0, b_0), ..., (a_n, b_n)], a_k >= b_k."""
    cdef double hi, lo, x, y, nx, ny, gap, new_gap
    if a == b:
        return [(a, b)]
    if a >= b:
        hi = a
        lo = b
    else:
        hi = b
        lo = a
    out = [(hi, lo)]
    x = 1.0
    y = lo / hi
    gap = x - y
    while gap > rel_tol * x:
        nx = 0.5 * (x + y)
        ny = sqrt(x * y)
        x = nx
        y = ny
        out.append((hi * x, hi * y))
        new_gap = fabs(x - y)
        if new_gap >= gap:
            break
        gap = new_gap
    return out


def log_mean(double a, double b):
    """(b - a) / (ln b - ln a), continuously extended to a at a == b."""
    cdef double hi, lo, d
    if a == b:
        return a
    if a >= b:
        hi = a
        lo = b
    else:
        hi = b
        lo = a
    d = hi - lo
    return d / log1p(d / lo)


def identric_mean(double a, double b):
    """(1/e) * (b^b / a^a)^(1/(b-a)) in log space; a at a == b."""
    cdef double hi, lo, d
    if a == b:
        return a
    if a >= b:
        hi = a
        lo = b
    else:
        hi = b
        lo = a
    d = hi - lo
    if d < 1e-9 * hi:
        return 0.5 * (lo + hi)
    return exp((hi * log(hi) - lo * log(lo)) / d - 1.0)


def k_series_sum(double tsq, int max_terms, double rel_cutoff):
    """Partial sum of sum_i [C(2i,i)/4^i]^2 * tsq^i with its truncation data."""
    cdef double s = 1.0
    cdef double coeff = 1.0
    cdef double tpow = 1.0
    cdef double r, term
    cdef int terms = 1
    cdef int i
    while True:
        i = terms
        r = (2.0 * i - 1.0) / (2.0 * i)
        coeff = coeff * (r * r)
        tpow = tpow * tsq
        term = coeff * tpow
        if term < rel_cutoff * s:
            return s, terms, term, True
        if terms >= max_terms:
            return s, terms, term, False
        s = s + term
        terms += 1


def k_quad_panels(double a, double b, int panels):
    """Composite 16-point Gauss-Legendre value of
    integral_0^{pi/2} dtheta / sqrt(a^2 cos^2 + b^2 sin^2) on uniform panels.
    """
    cdef double h = (M_PI / 2.0) / panels
    cdef double half = 0.5 * h
    cdef double aa = a * a
    cdef double bb = b * b
    cdef double total = 0.0
    cdef double mid, psum, theta, c, sn
    cdef int p, i
    for p in range(panels):
        mid = (p + 0.5) * h
        psum = 0.0
        for i in range(16):
            theta = mid + half * _NODES[i]
            c = cos(theta)
            sn = sin(theta)
            psum += _WEIGHTS[i] / sqrt(aa * c * c + bb * sn * sn)
        total += psum
    return total * half

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled monomial product kernels; same API as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t

from qspaces import _kernels_py as _py

IMPLEMENTATION = "cython"

cdef enum:
    ST_NOT = 0
    ST_POWER = 1
    ST_OTHER = 2
    # coefficient of c^s is at most C(b, s) <= 2^b in absolute value
    MAX_FACTORS = 62
    # exponent inputs beyond this go to the Python kernel (no long overflow)
    MAX_INPUT = 1 << 20

STATUS_NOT_PROPORTIONAL = ST_NOT
STATUS_POWER = ST_POWER
STATUS_OTHER = ST_OTHER


cdef struct Expansion:
    int b          # number of linear factors
    long lo        # smallest exponent that can occur
    long width     # hi - lo + 1
    int64_t *coef  # (b + 1) x width, row s holds the coefficient of c^s


cdef int contraction_c(long i, long i2, long *i3, long *exps) noexcept nogil:
    """Fill ``exps`` and return their count; see ``_kernels_py.contraction``."""
    cdef long a, b, s
    if (i >= 0 and i2 >= 0) or (i <= 0 and i2 <= 0):
        i3[0] = i + i2
        return 0
    if i > 0:
        a = i
        b = -i2
        i3[0] = a - b
        if a >= b:
            for s in range(1, b + 1):
                exps[s - 1] = 2 * s
            return <int>b
        for s in range(1, a + 1):
            exps[s - 1] = 2 * s + 2 * (b - a)
        return <int>a
    a = -i
    b = i2
    i3[0] = b - a
    if a >= b:
        for s in range(b):
            exps[s] = -2 * s
        return <int>b
    for s in range(a):
        exps[s] = -2 * s - 2 * (b - a)
    return <int>a


cdef int expand_c(long *exps, int b, Expansion *out) noexcept nogil:
    cdef long lo = 0, hi = 0, e, f
    cdef int t, s
    cdef int64_t v
    for t in range(b):
        if exps[t] < 0:
            lo += exps[t]
        else:
            hi += exps[t]
    out.b = b
    out.lo = lo
    out.width = hi - lo + 1
    out.coef = <int64_t *>calloc((b + 1) * out.width, sizeof(int64_t))
    if out.coef == NULL:
        return -1
    out.coef[-lo] = 1
    for t in range(b):
        e = exps[t]
        s = t
        while s >= 0:
            for f in range(out.width):
                v = out.coef[s * out.width + f]
                if v != 0:
                    out.coef[(s + 1) * out.width + f + e] -= v
            s -= 1
    return 0


cdef int rows_equal_shifted(Expansion *x, Expansion *y, int s, long shift) noexcept nogil:
    """Row s of x equals row s of y multiplied by q^shift."""
    cdef long f, g
    cdef int64_t vx, vy
    # every nonzero of x must match y, and vice versa
    for f in range(x.width):
        vx = x.coef[s * x.width + f]
        g = f + x.lo - shift - y.lo
        if 0 <= g < y.width:
            vy = y.coef[s * y.width + g]
        else:
            vy = 0
        if vx != vy:
            return 0
    for g in range(y.width):
        vy = y.coef[s * y.width + g]
        if vy == 0:
            continue
        f = g + y.lo + shift - x.lo
        if f < 0 or f >= x.width:
            return 0
    return 1


cdef long row_top(Expansion *x, int s) noexcept nogil:
    cdef long f = x.width - 1
    while f >= 0 and x.coef[s * x.width + f] == 0:
        f -= 1
    return f + x.lo


cdef int pair_c(long J, long K, long J2, long K2, long *m_out) noexcept nogil:
    """Return status, write the exponent into m_out; -1 means use the fallback."""
    cdef long exps_ab[MAX_FACTORS]
    cdef long exps_ba[MAX_FACTORS]
    cdef long i3_ab, i3_ba, pre_ab, pre_ba, m, d
    cdef int b_ab, b_ba, s, status
    cdef Expansion ab, ba
    if min_abs(K, K2) > MAX_FACTORS or not small(J, K, J2, K2):
        return -1
    b_ab = contraction_c(-K, -K2, &i3_ab, exps_ab)
    b_ba = contraction_c(-K2, -K, &i3_ba, exps_ba)
    if b_ab != b_ba or i3_ab != i3_ba:
        m_out[0] = 0
        return ST_NOT
    pre_ab = -K * J2
    pre_ba = -K2 * J
    if expand_c(exps_ab, b_ab, &ab) != 0:
        return -1
    if expand_c(exps_ba, b_ba, &ba) != 0:
        free(ab.coef)
        return -1
    status = ST_POWER
    m = 0
    for s in range(b_ab + 1):
        # the common factor q^(-2 K3 s) cancels from both sides
        d = (row_top(&ab, s) + pre_ab) - (row_top(&ba, s) + pre_ba)
        if s == 0:
            m = d
            if not rows_equal_shifted(&ab, &ba, s, m - pre_ab + pre_ba):
                status = ST_OTHER
                break
        elif not rows_equal_shifted(&ab, &ba, s, m - pre_ab + pre_ba):
            status = ST_NOT
            break
    free(ab.coef)
    free(ba.coef)
    m_out[0] = m if status == ST_POWER else 0
    return status


cdef inline bint small(long a, long b, long c, long d) noexcept nogil:
    return (-MAX_INPUT <= a <= MAX_INPUT and -MAX_INPUT <= b <= MAX_INPUT
            and -MAX_INPUT <= c <= MAX_INPUT and -MAX_INPUT <= d <= MAX_INPUT)


def _fits(*args):
    return all(-MAX_INPUT <= x <= MAX_INPUT for x in args)


cdef inline long min_abs(long a, long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    return a if a < b else b


def contraction(i, i2):
    cdef long exps[MAX_FACTORS]
    cdef long i3
    cdef int n, t
    if not _fits(i, i2) or min_abs(i, i2) > MAX_FACTORS:
        return _py.contraction(i, i2)
    n = contraction_c(i, i2, &i3, exps)
    return i3, [exps[t] for t in range(n)]


def factor_product(exps):
    cdef int b = len(exps), t, s
    cdef long f
    cdef long *buf
    cdef Expansion ex
    if b > MAX_FACTORS:
        return _py.factor_product(exps)
    buf = <long *>malloc(max(b, 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for t in range(b):
        buf[t] = exps[t]
    if expand_c(buf, b, &ex) != 0:
        free(buf)
        raise MemoryError()
    out = []
    for s in range(b + 1):
        row = {}
        for f in range(ex.width):
            if ex.coef[s * ex.width + f] != 0:
                row[f + ex.lo] = ex.coef[s * ex.width + f]
        out.append(row)
    free(ex.coef)
    free(buf)
    return out


def su_monomial_product(i, j, k, i2, j2, k2):
    pre = -(j + k) * i2
    i3, exps = contraction(i, i2)
    out = []
    for s, p in enumerate(factor_product(exps)):
        out.append(((i3, j + j2 + s, k + k2 + s), {e + pre: c for e, c in p.items()}))
    return out


def disk_monomial_product(J, K, J2, K2):
    pre = -K * J2
    i3, exps = contraction(-K, -K2)
    K3 = -i3
    out = []
    for s, p in enumerate(factor_product(exps)):
        d = pre - 2 * K3 * s
        out.append(((J + J2 + 2 * s, K3), {e + d: c for e, c in p.items()}))
    return out


def disk_pair_exponent(J, K, J2, K2):
    cdef long m = 0
    cdef int st = -1
    if _fits(J, K, J2, K2):
        st = pair_c(J, K, J2, K2, &m)
    if st < 0:
        return _py.disk_pair_exponent(J, K, J2, K2)
    return st, m


def pair_exponents(monos, row_start=0, row_stop=None):
    cdef Py_ssize_t n = len(monos), a, b, idx, r0, r1, rows
    if row_stop is None:
        row_stop = n
    r0 = row_start
    r1 = row_stop
    rows = max(r1 - r0, 0)
    if not all(_fits(J, K) for J, K in monos):
        return _py.pair_exponents(monos, row_start, row_stop)
    cdef long *Js = <long *>malloc(max(n, 1) * sizeof(long))
    cdef long *Ks = <long *>malloc(max(n, 1) * sizeof(long))
    cdef int *st = <int *>malloc(max(rows * n, 1) * sizeof(int))
    cdef long *ms = <long *>malloc(max(rows * n, 1) * sizeof(long))
    if Js == NULL or Ks == NULL or st == NULL or ms == NULL:
        free(Js); free(Ks); free(st); free(ms)
        raise MemoryError()
    for a in range(n):
        Js[a] = monos[a][0]
        Ks[a] = monos[a][1]
    with nogil:
        for a in range(r0, r1):
            for b in range(n):
                idx = (a - r0) * n + b
                st[idx] = pair_c(Js[a], Ks[a], Js[b], Ks[b], &ms[idx])
    status = []
    exps = []
    for idx in range(rows * n):
        if st[idx] < 0:
            a = r0 + idx // n
            b = idx % n
            s2, m2 = _py.disk_pair_exponent(Js[a], Ks[a], Js[b], Ks[b])
            status.append(s2)
            exps.append(m2)
        else:
            status.append(st[idx])
            exps.append(ms[idx])
    free(Js); free(Ks); free(st); free(ms)
    return status, exps

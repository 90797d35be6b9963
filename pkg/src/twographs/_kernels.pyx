# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot loops behind twographs.

Mirrors ``twographs._kernels_py`` exactly -- same Jacobi rotation order,
same chunked Kahan accumulation, same refinement trace hashing -- so the
two backends return identical certificates and numerically identical
spectra.  Subset sweeps shard over fixed-size rank chunks with OpenMP;
the chunk partials combine in rank order, so results do not depend on
the thread count.
"""

import numpy as np

from cpython.bytes cimport PyBytes_FromStringAndSize
from cython.parallel cimport prange
from libc.math cimport INFINITY, fabs, pow, sqrt
from libc.stdlib cimport free, malloc
from libc.string cimport memcmp, memcpy, memset

cdef extern from *:
    """
    #define tg_popcountll __builtin_popcountll
    #define tg_ctzll __builtin_ctzll
    """
    int tg_popcountll(unsigned long long) nogil
    int tg_ctzll(unsigned long long) nogil

BACKEND_NAME = "compiled"

cdef enum:
    MAXN = 64
    MAXBYTES = 256          # packed upper triangle of a MAXN graph
    MAXAUTOS = 128
    SWEEP_CHUNK = 4096

cdef int _MAX_SWEEPS = 64
cdef double _OFF_TARGET = 1e-13
cdef unsigned long long _FNV_OFFSET = 0xCBF29CE484222325ULL
cdef unsigned long long _FNV_PRIME = 0x100000001B3ULL

cdef unsigned long long BINOM[MAXN + 1][MAXN + 1]


cdef void _fill_binom() noexcept nogil:
    cdef int i, j
    for i in range(MAXN + 1):
        BINOM[i][0] = 1
        for j in range(1, MAXN + 1):
            if j > i:
                BINOM[i][j] = 0
            elif j == i:
                BINOM[i][j] = 1
            else:
                BINOM[i][j] = BINOM[i - 1][j - 1] + BINOM[i - 1][j]

_fill_binom()


cdef inline unsigned long long _fnv(unsigned long long h, unsigned long long x) noexcept nogil:
    return (h ^ x) * _FNV_PRIME


# ---------------------------------------------------------------------------
# Jacobi eigensolver
# ---------------------------------------------------------------------------


cdef double _jacobi(double* a, int n, double* v) noexcept nogil:
    """Cyclic Jacobi in place; returns the final off-diagonal residual."""
    cdef double fn = 0.0, eps, off, apq, theta, t, c, s, tau, arp, arq, vrp, vrq
    cdef int i, j, p, q, r, sweep
    for i in range(n):
        for j in range(n):
            fn += a[i * n + j] * a[i * n + j]
    fn = sqrt(fn)
    eps = _OFF_TARGET * (fn if fn > 1.0 else 1.0)

    for sweep in range(_MAX_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i * n + j] * a[i * n + j]
        off = sqrt(2.0 * off)
        if off <= eps:
            return off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if apq == 0.0:
                    continue
                theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p * n + p] -= t * apq
                a[q * n + q] += t * apq
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r * n + p]
                    arq = a[r * n + q]
                    a[r * n + p] = arp - s * (arq + tau * arp)
                    a[p * n + r] = a[r * n + p]
                    a[r * n + q] = arq + s * (arp - tau * arq)
                    a[q * n + r] = a[r * n + q]
                if v != NULL:
                    for r in range(n):
                        vrp = v[r * n + p]
                        vrq = v[r * n + q]
                        v[r * n + p] = vrp - s * (vrq + tau * vrp)
                        v[r * n + q] = vrq + s * (vrp - tau * vrq)
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i * n + j] * a[i * n + j]
    return sqrt(2.0 * off)


def jacobi_eigvals(a):
    """Eigenvalues of a symmetric matrix, descending, plus the residual."""
    m = np.array(a, dtype=np.float64, order="C", copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    cdef double[:, ::1] buf = m
    cdef int n = buf.shape[0]
    cdef double off
    with nogil:
        off = _jacobi(&buf[0, 0], n, NULL)
    vals = np.sort(np.diagonal(m).copy())[::-1].copy()
    return vals, off


def jacobi_eigh(a):
    """Eigenvalues (descending) with matching eigenvector columns."""
    m = np.array(a, dtype=np.float64, order="C", copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    v = np.eye(m.shape[0], dtype=np.float64)
    cdef double[:, ::1] buf = m
    cdef double[:, ::1] vecs = v
    cdef int n = buf.shape[0]
    cdef double off
    with nogil:
        off = _jacobi(&buf[0, 0], n, &vecs[0, 0])
    diag = np.diagonal(m).copy()
    order = sorted(range(n), key=lambda i: (-diag[i], i))
    vals = np.array([diag[i] for i in order], dtype=np.float64)
    return vals, v[:, order].copy(), off


# ---------------------------------------------------------------------------
# Subset-norm sweeps
# ---------------------------------------------------------------------------


cdef void _unrank_combination(unsigned long long r, int n, int m, int* combo) noexcept nogil:
    cdef int i, x = 0
    cdef unsigned long long cnt
    for i in range(m):
        while True:
            cnt = BINOM[n - 1 - x][m - 1 - i]
            if r < cnt:
                break
            r -= cnt
            x += 1
        combo[i] = x
        x += 1


cdef bint _next_combination(int* combo, int n, int m) noexcept nogil:
    cdef int i = m - 1, j
    while i >= 0 and combo[i] == n - m + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, m):
        combo[j] = combo[j - 1] + 1
    return True


cdef double _lambda_max(double* a, int m, double* d, double* e) noexcept nogil:
    """Largest eigenvalue of a symmetric flat m x m matrix (destroys it).

    Householder tridiagonalisation followed by Sturm-count bisection;
    mirrors the pure backend exactly.
    """
    cdef int i, j, k, l, cnt, it
    cdef double h, scale, f, g, hh, lo, hi, r, tol, mid, q
    if m == 1:
        return a[0]
    for i in range(m - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = 0.0
            for k in range(l + 1):
                scale += fabs(a[i * m + k])
            if scale == 0.0:
                e[i] = a[i * m + l]
            else:
                for k in range(l + 1):
                    a[i * m + k] /= scale
                    h += a[i * m + k] * a[i * m + k]
                f = a[i * m + l]
                g = -sqrt(h) if f >= 0.0 else sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i * m + l] = f - g
                f = 0.0
                for j in range(l + 1):
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j * m + k] * a[i * m + k]
                    for k in range(j + 1, l + 1):
                        g += a[k * m + j] * a[i * m + k]
                    e[j] = g / h
                    f += e[j] * a[i * m + j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = a[i * m + j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        a[j * m + k] -= f * e[k] + g * a[i * m + k]
        else:
            e[i] = a[i * m + l]
    for i in range(m):
        d[i] = a[i * m + i]
    e[0] = 0.0

    lo = d[0]
    hi = d[0] + fabs(e[1])
    for i in range(m):
        if d[i] > lo:
            lo = d[i]
        r = d[i] + fabs(e[i]) + (fabs(e[i + 1]) if i + 1 < m else 0.0)
        if r > hi:
            hi = r
    tol = fabs(lo)
    if fabs(hi) > tol:
        tol = fabs(hi)
    if tol < 1.0:
        tol = 1.0
    tol *= 1e-12
    for it in range(100):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        cnt = 0
        q = d[0] - mid
        if q < 0.0:
            cnt += 1
        for i in range(1, m):
            if q == 0.0:
                q = -1e-300
            q = d[i] - mid - e[i] * e[i] / q
            if q < 0.0:
                cnt += 1
        if cnt == m:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


cdef double _block_max_eig(double* s, int n, int* combo, int m, double c,
                           double* buf, double* d, double* e) noexcept nogil:
    cdef int i, j, ci, bi
    for i in range(m):
        ci = combo[i] * n
        bi = i * m
        for j in range(m):
            buf[bi + j] = c * s[ci + combo[j]]
        buf[bi + i] = 1.0
    return _lambda_max(buf, m, d, e)


def sweep_norms(s, int m, double c, double p=0.0, int threads=1):
    """(max, Kahan sum, Kahan sum of p-th powers) of the subset norms."""
    mat = np.array(s, dtype=np.float64, order="C", copy=True)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square")
    cdef int n = mat.shape[0]
    if not 1 <= m <= n:
        raise ValueError("subset size out of range")
    if n > MAXN:
        raise ValueError("matrices beyond %d rows are unsupported" % MAXN)
    cdef double[:, ::1] sv = mat
    cdef unsigned long long total = BINOM[n][m]
    cdef long long nchunks = <long long>((total + SWEEP_CHUNK - 1) // SWEEP_CHUNK)
    cmax_arr = np.empty(nchunks, dtype=np.float64)
    csum_arr = np.empty(nchunks, dtype=np.float64)
    cpsum_arr = np.empty(nchunks, dtype=np.float64)
    cdef double[::1] cmax = cmax_arr
    cdef double[::1] csum = csum_arr
    cdef double[::1] cpsum = cpsum_arr
    cdef long long k
    cdef int nthreads = threads if threads > 0 else 1

    with nogil:
        for k in prange(nchunks, num_threads=nthreads, schedule="dynamic"):
            _sweep_chunk(&sv[0, 0], n, m, c, p, k, total,
                         &cmax[0], &csum[0], &cpsum[0])

    cdef double vmax = -INFINITY, ssum = 0.0, comp = 0.0, psum = 0.0, pcomp = 0.0
    cdef double y, t
    for k in range(nchunks):
        if cmax[k] > vmax:
            vmax = cmax[k]
        y = csum[k] - comp
        t = ssum + y
        comp = (t - ssum) - y
        ssum = t
        y = cpsum[k] - pcomp
        t = psum + y
        pcomp = (t - psum) - y
        psum = t
    return vmax, ssum, psum


cdef void _sweep_chunk(double* s, int n, int m, double c, double p,
                       long long k, unsigned long long total,
                       double* cmax, double* csum, double* cpsum) noexcept nogil:
    cdef unsigned long long lo = <unsigned long long>k * SWEEP_CHUNK
    cdef unsigned long long hi = lo + SWEEP_CHUNK
    if hi > total:
        hi = total
    cdef int* combo = <int*>malloc(m * sizeof(int))
    cdef double* buf = <double*>malloc(m * (m + 2) * sizeof(double))
    cdef double* dd = buf + m * m
    cdef double* ee = dd + m
    cdef double vmax = -INFINITY, ssum = 0.0, comp = 0.0, psum = 0.0, pcomp = 0.0
    cdef double v, y, t, w
    cdef unsigned long long r = lo
    _unrank_combination(lo, n, m, combo)
    while True:
        v = _block_max_eig(s, n, combo, m, c, buf, dd, ee)
        if v > vmax:
            vmax = v
        y = v - comp
        t = ssum + y
        comp = (t - ssum) - y
        ssum = t
        if p != 0.0:
            w = pow(v, p)
            y = w - pcomp
            t = psum + y
            pcomp = (t - psum) - y
            psum = t
        r += 1
        if r >= hi:
            break
        _next_combination(combo, n, m)
    cmax[k] = vmax
    csum[k] = ssum
    cpsum[k] = psum
    free(combo)
    free(buf)


def sweep_values(s, int m, double c):
    """Per-subset norms for all m-subsets, in lexicographic subset order."""
    mat = np.array(s, dtype=np.float64, order="C", copy=True)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix must be square")
    cdef int n = mat.shape[0]
    if not 1 <= m <= n:
        raise ValueError("subset size out of range")
    cdef double[:, ::1] sv = mat
    cdef unsigned long long total = BINOM[n][m]
    out_arr = np.empty(total, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef int* combo = <int*>malloc(m * sizeof(int))
    cdef double* buf = <double*>malloc(m * (m + 2) * sizeof(double))
    cdef double* dd = buf + m * m
    cdef double* ee = dd + m
    cdef unsigned long long r
    cdef int i
    try:
        with nogil:
            for i in range(m):
                combo[i] = i
            for r in range(total):
                out[r] = _block_max_eig(&sv[0, 0], n, combo, m, c, buf, dd, ee)
                _next_combination(combo, n, m)
    finally:
        free(combo)
        free(buf)
    return out_arr


# ---------------------------------------------------------------------------
# Canonical labelling (individualization-refinement search)
# ---------------------------------------------------------------------------


cdef class _Canon:
    cdef int n, nbytes
    cdef unsigned long long masks[MAXN]
    cdef int lab[MAXN + 1][MAXN]
    cdef unsigned char cellend[MAXN + 1][MAXN]
    cdef unsigned char cur_flag[MAXN + 1]
    cdef unsigned long long cur_hash[MAXN + 1]
    cdef unsigned char best_flag[MAXN + 1]
    cdef unsigned long long best_hash[MAXN + 1]
    cdef int best_len
    cdef bint has_best, has_first
    cdef unsigned char best_bytes[MAXBYTES]
    cdef unsigned char first_bytes[MAXBYTES]
    cdef unsigned char scratch[MAXBYTES]
    cdef int best_perm[MAXN]
    cdef int first_perm[MAXN]
    cdef unsigned char autos[MAXAUTOS][MAXN]
    cdef int nauto
    cdef int base[MAXN]
    cdef int ufparent[MAXN]

    cdef unsigned long long refine(self, int depth) noexcept nogil:
        """Equitable refinement of lab/cellend at ``depth`` (in place).

        Full passes over snapshot splitters until stable; fragments are
        ordered by ascending neighbour count.  Returns the trace hash.
        """
        cdef unsigned long long h = _FNV_OFFSET
        cdef unsigned long long w
        cdef unsigned long long splitters[MAXN]
        cdef int counts[MAXN]
        cdef int order[MAXN]
        cdef int nsplit, si, pos, e, i, j, ci, minc, maxc, val, nfrags, outp
        cdef bint changed = True
        cdef int n = self.n
        cdef int* lab = &self.lab[depth][0]
        cdef unsigned char* cellend = &self.cellend[depth][0]

        while changed:
            changed = False
            nsplit = 0
            pos = 0
            for i in range(n):
                if cellend[i]:
                    w = 0
                    for j in range(pos, i + 1):
                        w |= (<unsigned long long>1) << lab[j]
                    splitters[nsplit] = w
                    nsplit += 1
                    pos = i + 1
            for si in range(nsplit):
                w = splitters[si]
                pos = 0
                ci = 0
                while pos < n:
                    e = pos
                    while not cellend[e]:
                        e += 1
                    if e > pos:
                        minc = MAXN + 1
                        maxc = -1
                        for i in range(pos, e + 1):
                            counts[i - pos] = tg_popcountll(self.masks[lab[i]] & w)
                            if counts[i - pos] < minc:
                                minc = counts[i - pos]
                            if counts[i - pos] > maxc:
                                maxc = counts[i - pos]
                        if minc != maxc:
                            changed = True
                            h = _fnv(h, <unsigned long long>ci)
                            nfrags = 0
                            outp = pos
                            for val in range(minc, maxc + 1):
                                j = 0
                                for i in range(pos, e + 1):
                                    if counts[i - pos] == val:
                                        j += 1
                                if j:
                                    nfrags += 1
                            h = _fnv(h, <unsigned long long>nfrags)
                            # counting sort into order[], mark boundaries
                            for val in range(minc, maxc + 1):
                                j = 0
                                for i in range(pos, e + 1):
                                    if counts[i - pos] == val:
                                        order[outp + j - pos] = lab[i]
                                        j += 1
                                if j:
                                    h = _fnv(h, <unsigned long long>val)
                                    h = _fnv(h, <unsigned long long>j)
                                    outp += j
                                    cellend[outp - 1] = 1
                            for i in range(pos, e + 1):
                                lab[i] = order[i - pos]
                            ci += nfrags - 1
                    pos = e + 1
                    ci += 1
        pos = 0
        ci = 0
        for i in range(n):
            if cellend[i]:
                ci += 1
        h = _fnv(h, <unsigned long long>0xFF)
        h = _fnv(h, <unsigned long long>ci)
        return h

    cdef void leaf_bytes(self, int depth, unsigned char* out) noexcept nogil:
        cdef int n = self.n
        cdef int* lab = self.lab[depth]
        cdef int i, j, k = 0
        cdef unsigned long long mi
        memset(out, 0, self.nbytes)
        for i in range(n - 1):
            mi = self.masks[lab[i]]
            for j in range(i + 1, n):
                if (mi >> lab[j]) & 1:
                    out[k >> 3] |= 0x80 >> (k & 7)
                k += 1

    cdef void record_auto(self, int* perm_a, int* perm_b) noexcept nogil:
        """perm_a and perm_b carry the same labelled graph: a->b is an automorphism."""
        cdef unsigned char gamma[MAXN]
        cdef int i
        cdef bint identity = True
        for i in range(self.n):
            gamma[perm_a[i]] = <unsigned char>perm_b[i]
        for i in range(self.n):
            if gamma[i] != i:
                identity = False
                break
        if identity or self.nauto >= MAXAUTOS:
            return
        for i in range(self.nauto):
            if memcmp(self.autos[i], gamma, self.n) == 0:
                return
        memcpy(self.autos[self.nauto], gamma, self.n)
        self.nauto += 1

    cdef int uf_find(self, int x) noexcept nogil:
        while self.ufparent[x] != x:
            self.ufparent[x] = self.ufparent[self.ufparent[x]]
            x = self.ufparent[x]
        return x

    cdef void build_uf(self, int depth) noexcept nogil:
        cdef int i, a, x, rx, ry
        cdef bint fixes
        for i in range(self.n):
            self.ufparent[i] = i
        for a in range(self.nauto):
            fixes = True
            for i in range(depth):
                if self.autos[a][self.base[i]] != self.base[i]:
                    fixes = False
                    break
            if not fixes:
                continue
            for x in range(self.n):
                rx = self.uf_find(x)
                ry = self.uf_find(self.autos[a][x])
                if rx != ry:
                    if rx < ry:
                        self.ufparent[ry] = rx
                    else:
                        self.ufparent[rx] = ry

    cdef void search(self, int depth, int state) noexcept nogil:
        cdef unsigned long long h = self.refine(depth)
        cdef int n = self.n
        cdef int i, ncells = 0
        for i in range(n):
            if self.cellend[depth][i]:
                ncells += 1
        cdef bint discrete = ncells == n
        cdef unsigned char flag = 0 if discrete else 1

        if state == 0 and self.has_best:
            if depth >= self.best_len:
                return  # unreachable by the flag argument; defensive
            if flag != self.best_flag[depth] or h != self.best_hash[depth]:
                if flag > self.best_flag[depth] or (
                    flag == self.best_flag[depth] and h > self.best_hash[depth]
                ):
                    return
                state = -1
        self.cur_flag[depth] = flag
        self.cur_hash[depth] = h

        cdef int cmp
        if discrete:
            self.leaf_bytes(depth, self.scratch)
            if not self.has_first:
                memcpy(self.first_bytes, self.scratch, self.nbytes)
                memcpy(self.first_perm, self.lab[depth], n * sizeof(int))
                self.has_first = True
            elif memcmp(self.scratch, self.first_bytes, self.nbytes) == 0:
                self.record_auto(self.lab[depth], self.first_perm)
            if not self.has_best or state == -1:
                self.best_len = depth + 1
                memcpy(self.best_flag, self.cur_flag, (depth + 1))
                memcpy(self.best_hash, self.cur_hash,
                       (depth + 1) * sizeof(unsigned long long))
                memcpy(self.best_bytes, self.scratch, self.nbytes)
                memcpy(self.best_perm, self.lab[depth], n * sizeof(int))
                self.has_best = True
            elif state == 0:
                cmp = memcmp(self.scratch, self.best_bytes, self.nbytes)
                if cmp < 0:
                    memcpy(self.best_bytes, self.scratch, self.nbytes)
                    memcpy(self.best_perm, self.lab[depth], n * sizeof(int))
                elif cmp == 0:
                    self.record_auto(self.lab[depth], self.best_perm)
            return

        # first smallest non-singleton cell
        cdef int ts = -1, te = -1, tsize = n + 1, pos = 0, e
        while pos < n:
            e = pos
            while not self.cellend[depth][e]:
                e += 1
            if e > pos and e - pos + 1 < tsize:
                ts = pos
                te = e
                tsize = e - pos + 1
            pos = e + 1

        cdef int tried[MAXN]
        cdef int ntried = 0, built_nauto = -1, tpos, v, j, rv
        cdef bint skip
        for tpos in range(ts, te + 1):
            v = self.lab[depth][tpos]
            skip = False
            if ntried and self.nauto:
                if built_nauto != self.nauto:
                    self.build_uf(depth)
                    built_nauto = self.nauto
                rv = self.uf_find(v)
                for j in range(ntried):
                    if self.uf_find(tried[j]) == rv:
                        skip = True
                        break
            if skip:
                continue
            # child partition: v individualized at the front of its cell
            memcpy(&self.lab[depth + 1][0], &self.lab[depth][0], n * sizeof(int))
            memcpy(&self.cellend[depth + 1][0], &self.cellend[depth][0], n)
            self.lab[depth + 1][ts] = v
            j = ts + 1
            for i in range(ts, te + 1):
                if self.lab[depth][i] != v:
                    self.lab[depth + 1][j] = self.lab[depth][i]
                    j += 1
            self.cellend[depth + 1][ts] = 1
            self.base[depth] = v
            self.search(depth + 1, state)
            tried[ntried] = v
            ntried += 1


def canonical_bytes(masks, int n):
    """Canonical row-major upper-triangle bit string of the graph."""
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    if n > MAXN:
        raise ValueError("graphs beyond %d vertices are unsupported" % MAXN)
    if n == 1:
        return b""
    cdef _Canon ctx = _Canon()
    ctx.n = n
    ctx.nbytes = (n * (n - 1) // 2 + 7) // 8
    cdef int i
    for i in range(n):
        ctx.masks[i] = masks[i]
        ctx.lab[0][i] = i
        ctx.cellend[0][i] = 0
    ctx.cellend[0][n - 1] = 1
    ctx.nauto = 0
    ctx.has_best = False
    ctx.has_first = False
    with nogil:
        ctx.search(0, 0)
    return PyBytes_FromStringAndSize(<char*>ctx.best_bytes, ctx.nbytes)


# ---------------------------------------------------------------------------
# Orbits of labelled graphs under vertex permutations
# ---------------------------------------------------------------------------


cdef inline unsigned int _uf_find32(unsigned int* parent, unsigned int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def orbit_reps(int nv):
    """Orbit minima and sizes over all 2^C(nv,2) labelled-graph codes."""
    if not 1 <= nv <= 7:
        raise ValueError("orbit enumeration supported for 1..7 vertices")
    cdef int ne = nv * (nv - 1) // 2
    cdef unsigned long long total = (<unsigned long long>1) << ne
    cdef int gmap[6][21]
    cdef int ngen = nv - 1
    cdef int k, i, j, a, b
    for k in range(ngen):
        p = list(range(nv))
        p[k], p[k + 1] = p[k + 1], p[k]
        for i in range(nv - 1):
            for j in range(i + 1, nv):
                a = min(p[i], p[j])
                b = max(p[i], p[j])
                gmap[k][i * (2 * nv - i - 1) // 2 + (j - i - 1)] = (
                    a * (2 * nv - a - 1) // 2 + (b - a - 1)
                )

    parent_arr = np.empty(total, dtype=np.uint32)
    cdef unsigned int[::1] parent = parent_arr
    cdef unsigned long long code, img, tmp
    cdef unsigned int ra, rb
    cdef int g
    with nogil:
        for code in range(total):
            parent[code] = <unsigned int>code
        for code in range(total):
            for g in range(ngen):
                img = 0
                tmp = code
                while tmp:
                    b = tg_ctzll(tmp)
                    img |= (<unsigned long long>1) << gmap[g][b]
                    tmp &= tmp - 1
                ra = _uf_find32(&parent[0], <unsigned int>code)
                rb = _uf_find32(&parent[0], <unsigned int>img)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
        for code in range(total):
            parent[code] = _uf_find32(&parent[0], <unsigned int>code)
    reps, sizes = np.unique(parent_arr, return_counts=True)
    return reps.astype(np.int64), sizes.astype(np.int64)

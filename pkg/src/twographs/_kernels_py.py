"""Pure-Python kernels: the fallback backend.

The compiled extension ``twographs._kernels`` implements the same four
entry points with identical semantics; ``twographs.backend`` picks one at
import time.  Keep the arithmetic here structurally identical to the C
code (same rotation order, same Kahan chunking) so the two backends agree
to machine precision and produce byte-identical certificates.

Entry points:

* ``jacobi_eigvals(a)``      -- eigenvalues of a symmetric matrix, descending
* ``jacobi_eigh(a)``         -- eigenvalues plus eigenvector columns
* ``sweep_norms(s, m, c, p, threads)``  -- max/sum/p-power-sum of
  lambda_max(I + c*S[T]) over all m-subsets T in lexicographic order
* ``sweep_values(s, m, c)``  -- the same per-subset values as an array
* ``canonical_bytes(masks, n)``  -- canonical upper-triangle bit string
* ``orbit_reps(nv)``         -- orbit minima of all labelled graphs on nv
  vertices under vertex permutations, with orbit sizes
"""

from math import comb, fabs, sqrt

import numpy as np

BACKEND_NAME = "pure"

_MAX_SWEEPS = 64
_OFF_TARGET = 1e-13
_SWEEP_CHUNK = 4096

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_U64 = (1 << 64) - 1


# ---------------------------------------------------------------------------
# Jacobi eigensolver
# ---------------------------------------------------------------------------


def _jacobi(a, n, v=None):
    """Cyclic Jacobi on a flat row-major list ``a`` (modified in place).

    Rotates until the off-diagonal Frobenius norm falls below
    ``_OFF_TARGET * max(1, ||A||_F)`` or 64 sweeps.  Returns the final
    off-diagonal residual.  If ``v`` is given (flat identity), rotations
    are accumulated so its columns become eigenvectors.
    """
    fn = 0.0
    for i in range(n):
        for j in range(n):
            fn += a[i * n + j] * a[i * n + j]
    fn = sqrt(fn)
    eps = _OFF_TARGET * (fn if fn > 1.0 else 1.0)

    off = 0.0
    for sweep in range(_MAX_SWEEPS):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i * n + j] * a[i * n + j]
        off = sqrt(2.0 * off)
        if off <= eps:
            break
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
                if v is not None:
                    for r in range(n):
                        vrp = v[r * n + p]
                        vrq = v[r * n + q]
                        v[r * n + p] = vrp - s * (vrq + tau * vrp)
                        v[r * n + q] = vrq + s * (vrp - tau * vrq)
    else:
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i * n + j] * a[i * n + j]
        off = sqrt(2.0 * off)
    return off


def _as_flat(a):
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    return m.reshape(-1).tolist(), m.shape[0]


def jacobi_eigvals(a):
    """Eigenvalues of a symmetric matrix, descending, plus the residual."""
    flat, n = _as_flat(a)
    off = _jacobi(flat, n)
    vals = sorted((flat[i * n + i] for i in range(n)), reverse=True)
    return np.array(vals, dtype=np.float64), off


def jacobi_eigh(a):
    """Eigenvalues (descending) with matching eigenvector columns."""
    flat, n = _as_flat(a)
    vecs = [0.0] * (n * n)
    for i in range(n):
        vecs[i * n + i] = 1.0
    off = _jacobi(flat, n, vecs)
    order = sorted(range(n), key=lambda i: (-flat[i * n + i], i))
    vals = np.array([flat[i * n + i] for i in order], dtype=np.float64)
    v = np.array(vecs, dtype=np.float64).reshape(n, n)[:, order]
    return vals, v, off


# ---------------------------------------------------------------------------
# Subset-norm sweeps
# ---------------------------------------------------------------------------


def _unrank_combination(r, n, m):
    combo = []
    x = 0
    for i in range(m):
        while True:
            cnt = comb(n - 1 - x, m - 1 - i)
            if r < cnt:
                break
            r -= cnt
            x += 1
        combo.append(x)
        x += 1
    return combo


def _next_combination(combo, n, m):
    i = m - 1
    while i >= 0 and combo[i] == n - m + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, m):
        combo[j] = combo[j - 1] + 1
    return True


def _lambda_max(a, m, d, e):
    """Largest eigenvalue of the symmetric flat m x m matrix ``a``.

    Householder tridiagonalisation (lower triangle, in place) followed by
    Sturm-count bisection on the tridiagonal.  Destroys ``a``; ``d`` and
    ``e`` are scratch of length m.  Roughly 20x cheaper than a full
    Jacobi solve, which matters when sweeps visit ~10^7 subsets.
    """
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
    tol = 1e-12 * max(1.0, fabs(lo), fabs(hi))
    for _ in range(100):
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


def _block_max_eig(s, n, combo, m, c, buf, d, e):
    for i in range(m):
        ci = combo[i] * n
        bi = i * m
        for j in range(m):
            buf[bi + j] = c * s[ci + combo[j]]
        buf[bi + i] = 1.0
    return _lambda_max(buf, m, d, e)


def sweep_norms(s, m, c, p=0.0, threads=1):
    """(max, Kahan sum, Kahan sum of p-th powers) of the subset norms.

    ``s`` is the full symmetric matrix; each m-subset contributes
    lambda_max(I_m + c * S[subset]).  Sums are accumulated per fixed-size
    rank chunk and combined in chunk order, so results do not depend on
    the thread count (this backend is sequential anyway).
    """
    flat, n = _as_flat(s)
    if not 1 <= m <= n:
        raise ValueError("subset size out of range")
    total = comb(n, m)
    nchunks = (total + _SWEEP_CHUNK - 1) // _SWEEP_CHUNK
    cmax = [0.0] * nchunks
    csum = [0.0] * nchunks
    cpsum = [0.0] * nchunks
    buf = [0.0] * (m * m)
    dd = [0.0] * m
    ee = [0.0] * m
    for k in range(nchunks):
        lo = k * _SWEEP_CHUNK
        hi = min(total, lo + _SWEEP_CHUNK)
        combo = _unrank_combination(lo, n, m)
        vmax = -np.inf
        ssum = comp = 0.0
        psum = pcomp = 0.0
        r = lo
        while True:
            v = _block_max_eig(flat, n, combo, m, c, buf, dd, ee)
            if v > vmax:
                vmax = v
            y = v - comp
            t = ssum + y
            comp = (t - ssum) - y
            ssum = t
            if p != 0.0:
                w = v**p
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
    vmax = max(cmax)
    ssum = comp = 0.0
    psum = pcomp = 0.0
    for k in range(nchunks):
        y = csum[k] - comp
        t = ssum + y
        comp = (t - ssum) - y
        ssum = t
        y = cpsum[k] - pcomp
        t = psum + y
        pcomp = (t - psum) - y
        psum = t
    return vmax, ssum, psum


def sweep_values(s, m, c):
    """Per-subset norms for all m-subsets, in lexicographic subset order."""
    flat, n = _as_flat(s)
    if not 1 <= m <= n:
        raise ValueError("subset size out of range")
    total = comb(n, m)
    out = np.empty(total, dtype=np.float64)
    buf = [0.0] * (m * m)
    dd = [0.0] * m
    ee = [0.0] * m
    combo = list(range(m))
    for r in range(total):
        out[r] = _block_max_eig(flat, n, combo, m, c, buf, dd, ee)
        _next_combination(combo, n, m)
    return out


# ---------------------------------------------------------------------------
# Canonical labelling (individualization-refinement search)
# ---------------------------------------------------------------------------


def _fnv(h, x):
    return ((h ^ (x & _U64)) * _FNV_PRIME) & _U64


def _refine(masks, n, cells):
    """Coarsest equitable refinement of the ordered partition ``cells``.

    Repeated full passes: every current cell acts as a splitter; cells are
    split by neighbour counts, fragments ordered by ascending count.
    Returns an order/label-invariant trace hash mixed from the split
    events.  ``cells`` is modified in place.
    """
    h = _FNV_OFFSET
    changed = True
    while changed:
        changed = False
        splitters = [_mask_of_cell(c) for c in cells]
        for w in splitters:
            ci = 0
            while ci < len(cells):
                cell = cells[ci]
                if len(cell) > 1:
                    groups = {}
                    for v in cell:
                        k = (masks[v] & w).bit_count()
                        if k in groups:
                            groups[k].append(v)
                        else:
                            groups[k] = [v]
                    if len(groups) > 1:
                        changed = True
                        keys = sorted(groups)
                        frags = [groups[k] for k in keys]
                        cells[ci : ci + 1] = frags
                        h = _fnv(h, ci)
                        h = _fnv(h, len(frags))
                        for k in keys:
                            h = _fnv(h, k)
                            h = _fnv(h, len(groups[k]))
                        ci += len(frags) - 1
                ci += 1
    h = _fnv(h, 0xFF)
    h = _fnv(h, len(cells))
    return h


def _mask_of_cell(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _leaf_bytes(masks, n, lab):
    nbits = n * (n - 1) // 2
    out = bytearray((nbits + 7) // 8)
    k = 0
    for i in range(n - 1):
        mi = masks[lab[i]]
        for j in range(i + 1, n):
            if mi >> lab[j] & 1:
                out[k >> 3] |= 0x80 >> (k & 7)
            k += 1
    return bytes(out)


class _CanonState:
    __slots__ = (
        "masks",
        "n",
        "best_inv",
        "best_bytes",
        "best_perm",
        "first_bytes",
        "first_perm",
        "autos",
    )

    def __init__(self, masks, n):
        self.masks = masks
        self.n = n
        self.best_inv = None
        self.best_bytes = None
        self.best_perm = None
        self.first_bytes = None
        self.first_perm = None
        self.autos = []


def _perm_from_leaves(n, perm_a, perm_b):
    # both leaves carry the same labelled graph: mapping a->b is an automorphism
    gamma = [0] * n
    for i in range(n):
        gamma[perm_a[i]] = perm_b[i]
    return tuple(gamma)


def _record_auto(state, gamma):
    if gamma != tuple(range(state.n)) and gamma not in state.autos:
        if len(state.autos) < 128:
            state.autos.append(gamma)


def _orbit_skip(state, base, tried, v):
    """True when an automorphism fixing the base maps v onto a tried vertex."""
    if not state.autos or not tried:
        return False
    parent = list(range(state.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in state.autos:
        if all(gamma[b] == b for b in base):
            for x in range(state.n):
                rx, ry = find(x), find(gamma[x])
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    rv = find(v)
    return any(find(u) == rv for u in tried)


def _search(state, cells, depth, cmp_state, invpath, base):
    h = _refine(state.masks, state.n, cells)
    discrete = len(cells) == state.n
    node_inv = (0 if discrete else 1, h)
    if cmp_state == 0 and state.best_inv is not None:
        ref = state.best_inv[depth]
        if node_inv > ref:
            return
        if node_inv < ref:
            cmp_state = -1
    invpath = invpath + [node_inv]

    if discrete:
        lab = [c[0] for c in cells]
        leaf = _leaf_bytes(state.masks, state.n, lab)
        if state.first_bytes is None:
            state.first_bytes = leaf
            state.first_perm = lab
        elif leaf == state.first_bytes:
            _record_auto(state, _perm_from_leaves(state.n, lab, state.first_perm))
        if state.best_inv is None or cmp_state == -1:
            state.best_inv = invpath
            state.best_bytes = leaf
            state.best_perm = lab
        elif cmp_state == 0:
            if leaf < state.best_bytes:
                state.best_bytes = leaf
                state.best_perm = lab
            elif leaf == state.best_bytes:
                _record_auto(state, _perm_from_leaves(state.n, lab, state.best_perm))
        return

    # first smallest non-singleton cell
    ti = -1
    tsize = state.n + 1
    for i, cell in enumerate(cells):
        if 1 < len(cell) < tsize:
            ti = i
            tsize = len(cell)
    target = list(cells[ti])
    tried = []
    for v in target:
        if _orbit_skip(state, base, tried, v):
            continue
        child = [list(c) for c in cells]
        rest = [u for u in target if u != v]
        child[ti : ti + 1] = [[v], rest]
        _search(state, child, depth + 1, cmp_state, invpath, base + [v])
        tried.append(v)


def canonical_bytes(masks, n):
    """Canonical row-major upper-triangle bit string of the graph."""
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    if n == 1:
        return b""
    state = _CanonState(tuple(masks), n)
    _search(state, [list(range(n))], 0, 0, [], [])
    return state.best_bytes


# ---------------------------------------------------------------------------
# Orbits of labelled graphs under vertex permutations
# ---------------------------------------------------------------------------


def orbit_reps(nv):
    """Orbit minima and sizes over all 2^C(nv,2) labelled-graph codes.

    Codes use the same upper-triangle bit layout as ``Graph.bits``.  The
    orbits of the adjacent-transposition generators are exactly the
    isomorphism classes.  Implemented as vectorised minimum-label
    propagation.
    """
    if not 1 <= nv <= 7:
        raise ValueError("orbit enumeration supported for 1..7 vertices")
    ne = nv * (nv - 1) // 2
    total = 1 << ne

    def pidx(i, j):
        if i > j:
            i, j = j, i
        return i * (2 * nv - i - 1) // 2 + (j - i - 1)

    codes = np.arange(total, dtype=np.int64)
    images = []
    for k in range(nv - 1):
        perm = list(range(nv))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        bitmap = [0] * ne
        for i in range(nv - 1):
            for j in range(i + 1, nv):
                bitmap[pidx(i, j)] = pidx(perm[i], perm[j])
        img = np.zeros(total, dtype=np.int64)
        for b in range(ne):
            img |= ((codes >> b) & 1) << bitmap[b]
        images.append(img)

    rep = codes.copy()
    while True:
        changed = False
        for img in images:
            cand = rep[img]
            if np.any(cand < rep):
                np.minimum(rep, cand, out=rep)
                changed = True
        if not changed:
            break
    reps, sizes = np.unique(rep, return_counts=True)
    return reps.astype(np.int64), sizes.astype(np.int64)

"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the library's own computational
routes: eigenvalues come from inertia-count bisection on the dense
matrix (leading-principal-minor sign counts, i.e. a characteristic
polynomial Sturm chain), canonical forms from brute force over all
permutations, and switching classes from explicit orbit closures.
"""

import itertools

import numpy as np

from twographs.graphs import Graph, pair_index


def count_eigs_below(a, x):
    """Number of eigenvalues of symmetric ``a`` strictly below ``x``.

    LDL^T elimination of (a - x I) without pivoting; zero pivots are
    nudged, which only matters on a measure-zero set of shifts that
    bisection never needs exactly.
    """
    m = np.array(a, dtype=float) - x * np.eye(len(a))
    n = m.shape[0]
    count = 0
    for k in range(n):
        piv = m[k, k]
        if abs(piv) < 1e-14:
            piv = -1e-14
        if piv < 0:
            count += 1
        rest = slice(k + 1, n)
        m[rest, rest] -= np.outer(m[rest, k], m[rest, k]) / piv
    return count


def bisect_eigvals(a, tol=1e-11):
    """All eigenvalues of a symmetric matrix, descending, via bisection."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    radius = float(np.max(np.sum(np.abs(a), axis=1))) + 1.0
    vals = []
    for k in range(1, n + 1):  # k-th smallest
        lo, hi = -radius, radius
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if count_eigs_below(a, mid) >= k:
                hi = mid
            else:
                lo = mid
        vals.append(0.5 * (lo + hi))
    return sorted(vals, reverse=True)


def brute_canonical_bits(g):
    """Minimum adjacency code over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = 0
        for i, j in g.edges():
            bits |= 1 << pair_index(g.n, perm[i], perm[j])
        if best is None or bits < best:
            best = bits
    return best


def relabel(g, perm):
    bits = 0
    for i, j in g.edges():
        bits |= 1 << pair_index(g.n, perm[i], perm[j])
    return Graph(g.n, bits)


def switching_class_ids(n):
    """Map labelled-graph code -> switching-equivalence class id (small n).

    Exhaustive orbit closure under single-vertex switches and adjacent
    transpositions over all 2^C(n,2) labelled graphs.
    """
    total = 1 << (n * (n - 1) // 2)
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for code in range(total):
        g = Graph(n, code)
        for v in range(n):
            union(code, g.switch([v]).bits)
        for k in range(n - 1):
            perm = list(range(n))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            union(code, relabel(g, perm).bits)
    return [find(code) for code in range(total)]


def bisect_max_eig(a, tol=1e-12):
    """Largest eigenvalue only, same inertia-count bisection."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    radius = float(np.max(np.sum(np.abs(a), axis=1))) + 1.0
    lo, hi = -radius, radius
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if count_eigs_below(a, mid) >= n:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def brute_subset_norm(g, subset):
    """||D (I + cS) D|| from the full n x n masked matrix, by bisection."""
    n = g.n
    c = 1.0 / (n - 1) if n > 1 else 0.0
    d = np.zeros(n)
    for v in subset:
        d[v] = 1.0
    s = g.seidel().entries.astype(float)
    masked = np.outer(d, d) * (np.eye(n) + c * s)
    return bisect_max_eig(masked)

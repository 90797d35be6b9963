"""Subset norm measures over a graph's Seidel matrix.

For a graph on n vertices with Seidel matrix S and shift constant
c = 1/(n-1), every m-subset T of vertices gets the value

    ||D (I + cS) D||  =  lambda_max(I_m + c * S[T])

(the shifted matrix is PSD, so the operator norm is the top eigenvalue).
The infinity norm at m is the maximum of these C(n, m) values, the one
norm their mean, and the p-norm their l^p average.  All three are
invariant under switching and relabelling, sit in [1, 1 + (m-1)/(n-1)],
and hit the upper bound exactly when some m-subset induces a complete
bipartite or empty subgraph.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from .backend import kernels

__all__ = [
    "NormProfile",
    "NormDistribution",
    "shift_constant",
    "norm_bound",
    "subset_norm",
    "infinity_norm",
    "one_norm",
    "lp_norm",
    "norm_distribution",
    "attains_bound",
    "norm_profile",
]

_BUCKET_GRID = 1e-9


def shift_constant(n):
    """The PSD shift 1/(n-1); 0 for the one-vertex graph (no off-diagonal)."""
    return 1.0 / (n - 1) if n > 1 else 0.0


def norm_bound(n, m):
    """Upper bound 1 + (m-1)/(n-1) on every subset norm."""
    return 1.0 + (m - 1) * shift_constant(n)


@dataclass(frozen=True)
class NormProfile:
    """Values for m = 1..n under one norm family ('inf', 'one', or p)."""

    n: int
    family: object
    values: tuple
    c: float

    def __getitem__(self, m):
        if not 1 <= m <= self.n:
            raise IndexError("profile indexed by m = 1..n")
        return self.values[m - 1]

    def separation(self, other):
        """Largest coordinate-wise gap to another profile of the same shape."""
        if self.n != other.n or len(self.values) != len(other.values):
            raise ValueError("profiles must have matching shape")
        return max(abs(a - b) for a, b in zip(self.values, other.values))


@dataclass(frozen=True)
class NormDistribution:
    """Subset-norm histogram at one m: value -> number of m-subsets."""

    m: int
    buckets: dict

    def total(self):
        return sum(self.buckets.values())

    def mean(self):
        return sum(v * k for v, k in self.buckets.items()) / self.total()


def _seidel_float(g):
    return g.seidel().entries.astype(np.float64)


def _check_m(g, m):
    if not 1 <= m <= g.n:
        raise ValueError("subset size m=%d out of range for n=%d" % (m, g.n))


def subset_norm(g, subset):
    """Norm of one subset: lambda_max of the shifted principal block."""
    vs = sorted(set(subset))
    if not vs:
        raise ValueError("subset must be nonempty")
    if vs[0] < 0 or vs[-1] >= g.n:
        raise ValueError("subset contains out-of-range vertex")
    m = len(vs)
    if m == 1:
        return 1.0
    c = shift_constant(g.n)
    s = _seidel_float(g)
    block = np.eye(m) + c * s[np.ix_(vs, vs)]
    vals, _ = kernels.jacobi_eigvals(block)
    return float(vals[0])


def infinity_norm(g, m, threads=None):
    """Maximum subset norm over all C(n, m) subsets."""
    _check_m(g, m)
    vmax, _, _ = kernels.sweep_norms(
        _seidel_float(g), m, shift_constant(g.n), 0.0, _threads(threads)
    )
    return float(vmax)


def one_norm(g, m, threads=None):
    """Mean subset norm over all C(n, m) subsets."""
    _check_m(g, m)
    _, vsum, _ = kernels.sweep_norms(
        _seidel_float(g), m, shift_constant(g.n), 0.0, _threads(threads)
    )
    return float(vsum) / comb(g.n, m)


def lp_norm(g, m, p, threads=None):
    """l^p average of the subset norms; p = 1 reduces exactly to one_norm."""
    if p < 1:
        raise ValueError("p must be at least 1")
    _check_m(g, m)
    if p == 1:
        return one_norm(g, m, threads)
    _, _, vpsum = kernels.sweep_norms(
        _seidel_float(g), m, shift_constant(g.n), float(p), _threads(threads)
    )
    return float(vpsum / comb(g.n, m)) ** (1.0 / p)


def norm_distribution(g, m):
    """Bucketed histogram of the subset norms at one m.

    Bucket identity comes from a 1e-9 grid, and adjacent buckets closer
    than 2e-9 merge, so solver jitter cannot split a bucket.  Each bucket
    is keyed by the exact mean of its members, which makes the overall
    distribution mean reproduce the one norm to roundoff.
    """
    _check_m(g, m)
    values = kernels.sweep_values(_seidel_float(g), m, shift_constant(g.n))
    keys = np.round(values / _BUCKET_GRID).astype(np.int64)
    order = np.argsort(keys, kind="stable")
    skeys = keys[order]
    svals = values[order]
    starts = np.flatnonzero(np.r_[True, skeys[1:] != skeys[:-1]])
    ends = np.r_[starts[1:], len(skeys)]
    buckets = {}
    run_sum = run_count = 0
    prev_k = None
    for a, b in zip(starts.tolist(), ends.tolist()):
        k = int(skeys[a])
        if prev_k is not None and k - prev_k <= 2:
            run_sum += float(svals[a:b].sum())
            run_count += b - a
        else:
            if run_count:
                buckets[run_sum / run_count] = run_count
            run_sum = float(svals[a:b].sum())
            run_count = b - a
        prev_k = k
    if run_count:
        buckets[run_sum / run_count] = run_count
    return NormDistribution(m, buckets)


def _is_complete_bipartite_or_empty(g):
    if g.num_edges() == 0:
        return True
    # complete bipartite: connected, 2-colourable, and every cross pair joined
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    seen = 1
    while queue:
        v = queue.pop()
        for u in range(g.n):
            if g.masks[v] >> u & 1:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    seen += 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    if seen != g.n:
        return False
    a = color.count(0)
    return g.num_edges() == a * (g.n - a)


def attains_bound(g, m):
    """Does some m-subset induce a complete bipartite or empty subgraph?

    Exactly those subgraphs are switching equivalent to the empty graph,
    and exactly then the subset norm reaches 1 + (m-1)/(n-1).  This is a
    structural search, independent of the eigenvalue route; the two are
    compared in the tests.
    """
    if not 2 <= m <= g.n:
        raise ValueError("bound attainment needs 2 <= m <= n")
    from itertools import combinations

    for subset in combinations(range(g.n), m):
        if _is_complete_bipartite_or_empty(g.induced(subset)):
            return True
    return False


def norm_profile(g, family, threads=None):
    """Profile of values for m = 1..n under one family.

    ``family`` is ``"inf"``, ``"one"``, or a numeric p >= 1.
    """
    if family == "inf":
        vals = [infinity_norm(g, m, threads) for m in range(1, g.n + 1)]
    elif family == "one":
        vals = [one_norm(g, m, threads) for m in range(1, g.n + 1)]
    else:
        p = float(family)
        vals = [lp_norm(g, m, p, threads) for m in range(1, g.n + 1)]
    return NormProfile(g.n, family, tuple(vals), shift_constant(g.n))


def _threads(threads):
    if threads is None:
        import os

        return max(1, os.cpu_count() or 1)
    return max(1, int(threads))

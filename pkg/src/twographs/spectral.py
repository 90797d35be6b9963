"""Dense symmetric eigenvalues and spectrum-level facts for Seidel matrices.

The eigensolver is cyclic Jacobi (see the kernel backends): matrices here
are at most a few dozen rows, and Jacobi is unconditionally stable on
symmetric input with no dependencies.  A Seidel matrix S on n vertices
always satisfies ||S|| <= n-1, so I + S/(n-1) is positive semi-definite;
that shift constant is what the norm measures are built on.
"""

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .graphs import SeidelMatrix

__all__ = [
    "DEFAULT_TOL",
    "Spectrum",
    "eigenvalues_symmetric",
    "seidel_spectrum",
    "least_seidel_eigenvalue",
    "is_seidel_cospectral",
    "check_interlacing",
    "is_psd_shifted",
]

DEFAULT_TOL = 1e-8
_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Descending real eigenvalues with a comparison tolerance."""

    values: tuple
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("spectrum must be sorted descending")

    def __len__(self):
        return len(self.values)

    @property
    def max(self):
        return self.values[0]

    @property
    def min(self):
        return self.values[-1]

    def close_to(self, other, tol=None):
        t = self.tol if tol is None else tol
        if len(self) != len(other):
            return False
        return all(abs(a - b) <= t for a, b in zip(self.values, other.values))

    def multiplicities(self, tol=None):
        """Cluster by gaps of at most ``tol``: list of (value, count)."""
        t = self.tol if tol is None else tol
        out = []
        for v in self.values:
            if out and abs(out[-1][0] - v) <= t:
                out[-1][1] += 1
            else:
                out.append([v, 1])
        return [(v, k) for v, k in out]


def _as_matrix(m):
    if isinstance(m, SeidelMatrix):
        m = m.entries
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    return a


def eigenvalues_symmetric(m, tol=DEFAULT_TOL):
    """All eigenvalues with multiplicity, sorted descending.

    Rejects input that is not symmetric to 1e-12 entrywise; the Jacobi
    residual and the trace identity are checked on the way out.
    """
    a = _as_matrix(m)
    if np.max(np.abs(a - a.T), initial=0.0) > _SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    vals, resid = kernels.jacobi_eigvals(a)
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    if resid > 1e-12 * scale:
        raise ArithmeticError("Jacobi rotation failed to converge")
    if abs(float(np.trace(a)) - float(vals.sum())) > n * max(tol, 1e-10) * scale:
        raise ArithmeticError("eigenvalue sum drifted from the trace")
    return Spectrum(tuple(vals), tol)


def seidel_spectrum(g, tol=DEFAULT_TOL):
    return eigenvalues_symmetric(g.seidel().entries, tol)


def least_seidel_eigenvalue(g):
    return seidel_spectrum(g).min


def is_seidel_cospectral(g, h, tol=DEFAULT_TOL):
    if g.n != h.n:
        return False
    return seidel_spectrum(g, tol).close_to(seidel_spectrum(h, tol))


def check_interlacing(parent, child, tol=None):
    """lambda_i >= mu_i >= lambda_{i+1} for every i, within tolerance."""
    if len(child) != len(parent) - 1:
        raise ValueError("child spectrum must be one shorter than parent")
    t = parent.tol if tol is None else tol
    lam = parent.values
    mu = child.values
    for i in range(len(mu)):
        if mu[i] > lam[i] + t or mu[i] < lam[i + 1] - t:
            return False
    return True


def is_psd_shifted(s, c, tol=DEFAULT_TOL):
    """Is I + c*S positive semi-definite (least eigenvalue >= -tol)?"""
    if c <= 0:
        raise ValueError("shift constant must be positive")
    a = _as_matrix(s)
    shifted = np.eye(a.shape[0]) + c * a
    return eigenvalues_symmetric(shifted).min >= -tol

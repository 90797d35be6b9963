"""Signature matrices, Parseval frames, and erasure error norms.

A Seidel matrix Q with exactly two distinct eigenvalues is the signature
matrix of a real 2-uniform (n, k)-frame, with k the multiplicity of the
larger eigenvalue.  Its autocorrelation matrix

    P = (k/n) I + c_{n,k} Q,      c_{n,k} = sqrt(k(n-k) / (n^2 (n-1)))

is a rank-k orthogonal projection, and any spectral factorisation
P = V V* yields n frame vectors (the rows of V) in dimension k, all of
norm sqrt(k/n), forming a Parseval frame.  Erasing m coordinates of an
encoded vector and decoding with V* incurs the error ||V* D V|| over the
erased set D; the max / l^p averages of those operator norms over all
m-subsets are the frame error norms computed here.
"""

import math
from dataclasses import dataclass
from math import comb

import numpy as np

from .backend import kernels
from .spectral import eigenvalues_symmetric

__all__ = [
    "FrameParams",
    "AutocorrelationError",
    "signature_check",
    "frame_constant",
    "autocorrelation",
    "frame_vectors",
    "frame_error_norm",
    "least_eigenvalue_identity",
]

_CLUSTER_REL_GAP = 1e-6
_PROJECTION_TOL = 1e-10


@dataclass(frozen=True)
class FrameParams:
    """Parameters of the 2-uniform frame behind a signature matrix."""

    n: int
    k: int
    c: float
    lambda1: float


class AutocorrelationError(ValueError):
    """Raised when a Seidel matrix is not a signature matrix."""

    def __init__(self, message, spectrum):
        super().__init__(message)
        self.spectrum = spectrum


def frame_constant(n, k):
    """The off-diagonal scale c_{n,k}; symmetric in k <-> n-k."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    return math.sqrt(k * (n - k) / (n * n * (n - 1)))


def signature_check(s):
    """FrameParams if the Seidel spectrum has exactly two distinct values.

    Eigenvalues are clustered at a relative gap of 1e-6; a positive
    result certifies the switching class as a regular two-graph.  Returns
    None otherwise.
    """
    spec = eigenvalues_symmetric(s.entries)
    scale = max(1.0, abs(spec.max), abs(spec.min))
    clusters = spec.multiplicities(_CLUSTER_REL_GAP * scale)
    if len(clusters) != 2:
        return None
    n = s.n
    k = clusters[0][1]
    lam1 = -math.sqrt(k * (n - 1) / (n - k))
    return FrameParams(n, k, frame_constant(n, k), lam1)


def autocorrelation(s):
    """The projection P = (k/n) I + c_{n,k} S; rejects non-signature input."""
    params = signature_check(s)
    if params is None:
        spec = eigenvalues_symmetric(s.entries)
        raise AutocorrelationError(
            "matrix has more than two distinct eigenvalues: %s"
            % (spec.multiplicities(1e-6),),
            spec,
        )
    n, k = params.n, params.k
    p = (k / n) * np.eye(n) + params.c * s.entries.astype(np.float64)
    resid = float(np.linalg.norm(p @ p - p))
    if resid > _PROJECTION_TOL:
        raise AutocorrelationError(
            "autocorrelation failed the projection check (residual %g)" % resid,
            eigenvalues_symmetric(s.entries),
        )
    return p


def frame_vectors(s):
    """Rows of a spectral factorisation P = V V*: n vectors in R^k.

    The factor is unique only up to a global orthogonal transform of
    R^k, so the contract is Gram-side: V V* equals the autocorrelation
    matrix, every row has norm sqrt(k/n), and V* V = I_k.
    """
    p = autocorrelation(s)
    params = signature_check(s)
    vals, vecs, _ = kernels.jacobi_eigh(p)
    v = vecs[:, : params.k]
    return v * np.sqrt(np.maximum(vals[: params.k], 0.0))


def frame_error_norm(s, m, family="inf", threads=None):
    """Erasure error norm over all m-subsets of a signature matrix.

    ``family`` is ``"inf"`` for the maximum or a numeric p >= 1 for the
    l^p average.  Computed from ||V* D V|| = ||D P D|| as
    (k/n) * lambda_max(I_m + Q_m / |lambda_1|) on every subset.
    """
    params = signature_check(s)
    if params is None:
        raise AutocorrelationError(
            "erasure norms need a signature matrix",
            eigenvalues_symmetric(s.entries),
        )
    if not 1 <= m <= s.n:
        raise ValueError("subset size out of range")
    scale = params.k / params.n
    shift = 1.0 / abs(params.lambda1)
    q = s.entries.astype(np.float64)
    if family == "inf":
        vmax, _, _ = kernels.sweep_norms(q, m, shift, 0.0, _threads(threads))
        return scale * float(vmax)
    p = float(family)
    if p < 1:
        raise ValueError("p must be at least 1")
    if p == 1:
        _, vsum, _ = kernels.sweep_norms(q, m, shift, 0.0, _threads(threads))
        return scale * float(vsum) / comb(s.n, m)
    _, _, vpsum = kernels.sweep_norms(q, m, shift, p, _threads(threads))
    return scale * float(vpsum / comb(s.n, m)) ** (1.0 / p)


def least_eigenvalue_identity(params, spectrum, tol=1e-8):
    """Is the spectrum's minimum the predicted -sqrt(k(n-1)/(n-k))?"""
    return abs(spectrum.min - params.lambda1) <= tol


def _threads(threads):
    if threads is None:
        import os

        return max(1, os.cpu_count() or 1)
    return max(1, int(threads))

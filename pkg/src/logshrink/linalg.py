"""Dense symmetric linear algebra: eigendecomposition, matrix log/exp, shape
matrix, geodesic paths and matrix norms.

All functions operate on real symmetric matrices given as square ndarrays and
are pure; eigenvalues are always returned in descending order.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, NotPositiveDefiniteError, NumericalError

# An eigenvalue is treated as zero when <= PD_RTOL * max(1, largest eigenvalue);
# singular inputs must be detected reliably.
PD_RTOL = 1e-12

# exp() overflows IEEE doubles slightly above this exponent.
_EXP_OVERFLOW = 709.0

NORM_KINDS = ("frobenius", "l1", "operator")


def ensure_symmetric(M, rtol=1e-8, name="matrix"):
    """Validate ``M`` as a finite square symmetric matrix.

    Returns an exactly symmetric float copy, ``(M + M.T) / 2``.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise InvalidInputError(f"{name} must be a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidInputError(f"{name} has non-finite entries")
    scale = max(1.0, float(np.abs(M).max()))
    if float(np.abs(M - M.T).max()) > rtol * scale:
        raise InvalidInputError(f"{name} is not symmetric within tolerance {rtol}")
    return 0.5 * (M + M.T)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Orthonormal eigenvectors (columns) with eigenvalues sorted descending."""

    vectors: np.ndarray
    values: np.ndarray

    @property
    def dim(self):
        return self.values.shape[0]

    def reconstruct(self):
        """Rebuild the decomposed matrix, exactly symmetric."""
        M = (self.vectors * self.values) @ self.vectors.T
        return 0.5 * (M + M.T)

    def apply(self, fn):
        """Rebuild with ``fn`` applied to the eigenvalues."""
        M = (self.vectors * fn(self.values)) @ self.vectors.T
        return 0.5 * (M + M.T)


def sym_eig(M):
    """Eigendecomposition of a symmetric matrix.

    Parameters
    ----------
    M : ndarray, shape (q, q)
        Symmetric matrix with finite entries.

    Returns
    -------
    SpectralDecomposition
        Eigenvalues sorted descending; each eigenvector's largest-magnitude
        component is made positive so the output is deterministic.
    """
    M = ensure_symmetric(M)
    try:
        values, vectors = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - hard to trigger
        raise NumericalError(f"symmetric eigensolver failed: {exc}") from exc
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    # deterministic sign convention
    lead = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[lead, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    vectors *= signs
    return SpectralDecomposition(vectors=vectors, values=values)


def pd_tolerance(values):
    """Zero threshold for the eigenvalues of a PSD matrix."""
    top = float(values[0]) if values.size else 0.0
    return PD_RTOL * max(1.0, top)


def _require_pd(dec, name="matrix"):
    tol = pd_tolerance(dec.values)
    smallest = float(dec.values[-1])
    if smallest <= tol:
        raise NotPositiveDefiniteError(
            f"{name} is not positive definite: smallest eigenvalue {smallest:.3e} "
            f"<= tolerance {tol:.3e}"
        )


def matrix_exp(A):
    """Matrix exponential of a symmetric matrix via its eigendecomposition."""
    dec = sym_eig(A)
    top = float(dec.values[0])
    if top > _EXP_OVERFLOW:
        raise NumericalError(
            f"matrix_exp overflow: eigenvalue {top:.6g} exceeds exp() range"
        )
    return dec.apply(np.exp)


def matrix_log(S):
    """Matrix logarithm of a symmetric positive definite matrix."""
    dec = sym_eig(S)
    _require_pd(dec, name="matrix_log input")
    return dec.apply(np.log)


def shape_matrix(S):
    """Determinant-one representative ``S / det(S)**(1/q)`` of a PD matrix."""
    S = ensure_symmetric(S)
    dec = sym_eig(S)
    _require_pd(dec, name="shape_matrix input")
    # det^(1/q) through the mean log-eigenvalue, robust against det overflow
    scale = np.exp(np.mean(np.log(dec.values)))
    return S / scale


def geodesic_point(S0, S1, t):
    """Point at position ``t`` on the affine-invariant geodesic from S0 to S1.

    Parameters
    ----------
    S0, S1 : ndarray, shape (q, q)
        Symmetric positive definite endpoints.
    t : float
        Position in [0, 1]; 0 returns ``S0`` and 1 returns ``S1``.

    Returns
    -------
    ndarray, shape (q, q)
        ``S0^(1/2) (S0^(-1/2) S1 S0^(-1/2))^t S0^(1/2)``, symmetric PD.
    """
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise InvalidInputError(f"geodesic position t={t} outside [0, 1]")
    dec0 = sym_eig(S0)
    _require_pd(dec0, name="geodesic endpoint S0")
    S1 = ensure_symmetric(S1, name="S1")
    dec1 = sym_eig(S1)
    _require_pd(dec1, name="geodesic endpoint S1")
    root = dec0.apply(np.sqrt)
    inv_root = dec0.apply(lambda w: 1.0 / np.sqrt(w))
    inner = sym_eig(inv_root @ S1 @ inv_root)
    powered = inner.apply(lambda w: np.exp(t * np.log(w)))
    out = root @ powered @ root
    return 0.5 * (out + out.T)


def matrix_norm(M, kind="frobenius"):
    """Matrix norm of a symmetric matrix.

    ``frobenius`` is the root of the sum of squared entries, ``l1`` the maximum
    absolute column sum, and ``operator`` the largest absolute eigenvalue
    (the largest singular value for symmetric input).
    """
    M = ensure_symmetric(M)
    if kind == "frobenius":
        return float(np.sqrt(np.sum(M * M)))
    if kind == "l1":
        return float(np.abs(M).sum(axis=0).max())
    if kind == "operator":
        return float(np.abs(sym_eig(M).values).max())
    raise InvalidInputError(f"unknown norm kind {kind!r}; expected one of {NORM_KINDS}")

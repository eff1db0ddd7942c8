"""Dense complex matrix calculus: eigendecompositions, absolute values,
PSD square roots, and the Loewner (positive semidefinite) order.

All matrices are square ``numpy`` arrays of complex128. Every function is
pure; nothing mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian, NotPSD

HERMITIAN_RTOL = 1e-12


def as_matrix(A) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {M.shape}")
    if not (np.all(np.isfinite(M.real)) and np.all(np.isfinite(M.imag))):
        raise ValueError("matrix entries must be finite")
    return M


def frobenius(A) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(A, "fro"))


def hermitian_part(A: np.ndarray) -> np.ndarray:
    """(A + A*) / 2."""
    return (A + A.conj().T) / 2.0


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def require_hermitian(H: np.ndarray, rtol: float = HERMITIAN_RTOL) -> np.ndarray:
    """Raise NotHermitian unless ||H - H*||_F <= rtol * (1 + ||H||_F)."""
    drift = frobenius(H - H.conj().T)
    if drift > rtol * (1.0 + frobenius(H)):
        raise NotHermitian(f"Hermitian drift {drift:.3e} exceeds tolerance")
    return hermitian_part(H)


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral factorization H = basis @ diag(eigenvalues) @ basis*.

    Eigenvalues are real and ascending; basis columns are orthonormal.
    """

    eigenvalues: np.ndarray
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.basis * self.eigenvalues) @ self.basis.conj().T


def hermitian_eigen(H) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    H = as_matrix(H)
    Hs = require_hermitian(H)
    try:
        w, V = np.linalg.eigh(Hs)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenDecomposition(eigenvalues=w, basis=V)


def operator_norm(A) -> float:
    """Largest singular value of A."""
    A = as_matrix(A)
    return float(np.linalg.norm(A, 2))


def abs_operator(A) -> np.ndarray:
    """|A| = (A*A)^{1/2}, the PSD factor in the polar decomposition."""
    A = as_matrix(A)
    return psd_sqrt(A.conj().T @ A)


PSD_NEG_RTOL = 1e-10
PSD_CLAMP_RTOL = 1e-12


def psd_sqrt(P) -> np.ndarray:
    """PSD square root via the spectral calculus.

    Eigenvalues below ``PSD_CLAMP_RTOL * lambda_max`` are treated as exact
    zeros so that |A| of a rank-deficient A stays rank-deficient.
    """
    P = as_matrix(P)
    eig = hermitian_eigen(P)
    w = eig.eigenvalues.copy()
    top = max(float(w[-1]), 0.0)
    if float(w[0]) < -PSD_NEG_RTOL * (1.0 + top):
        raise NotPSD(f"lambda_min = {w[0]:.3e} is too negative for a PSD sqrt")
    w[w < PSD_CLAMP_RTOL * top] = 0.0
    w[w < 0.0] = 0.0
    S = (eig.basis * np.sqrt(w)) @ eig.basis.conj().T
    return hermitian_part(S)


class Order(Enum):
    """Three-valued outcome of a Loewner comparison."""

    LESS_OR_EQUAL = "leq"
    NOT_LESS_OR_EQUAL = "nleq"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of ``A <= B`` in the Loewner order.

    ``min_gap`` is the smallest eigenvalue of B - A. A unit ``witness``
    vector with <(B-A)x, x> = min_gap is attached when the relation
    fails decisively.
    """

    relation: Order
    min_gap: float
    tolerance: float
    witness: np.ndarray | None = None

    @property
    def holds(self) -> bool:
        """Non-strict verdict: boundary cases count as <=."""
        return self.relation is not Order.NOT_LESS_OR_EQUAL


def default_loewner_tol(A: np.ndarray, B: np.ndarray) -> float:
    return 1e-9 * (1.0 + operator_norm(A) + operator_norm(B))


def loewner_leq(A, B, tol: float | None = None) -> LoewnerVerdict:
    """Decide A <= B for Hermitian A, B via lambda_min(B - A).

    Verdicts within ``tol`` of zero are reported as Boundary rather than
    as violations, so exact equality cases are never misclassified.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {B.shape}")
    if tol is None:
        tol = default_loewner_tol(A, B)
    if tol <= 0:
        raise ValueError("tol must be positive")
    D = hermitian_part(require_hermitian(B) - require_hermitian(A))
    eig = hermitian_eigen(D)
    gap = float(eig.eigenvalues[0])
    if gap >= tol:
        return LoewnerVerdict(Order.LESS_OR_EQUAL, gap, tol)
    if gap <= -tol:
        return LoewnerVerdict(Order.NOT_LESS_OR_EQUAL, gap, tol, witness=eig.basis[:, 0].copy())
    return LoewnerVerdict(Order.BOUNDARY, gap, tol)


def commutator_norm(A, B) -> float:
    """||AB - BA||_F."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {B.shape}")
    return frobenius(A @ B - B @ A)


def is_normal(A, tol: float = 1e-12) -> bool:
    """True iff ||A*A - AA*||_F <= tol * (1 + ||A||_F^2)."""
    A = as_matrix(A)
    Ah = A.conj().T
    return frobenius(Ah @ A - A @ Ah) <= tol * (1.0 + frobenius(A) ** 2)


def random_unitary(dim: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary, deterministic in ``seed``.

    QR of a complex Ginibre matrix with the diagonal phases of R absorbed
    into Q, which makes the factor unique.
    """
    if dim < 1:
        raise DimensionMismatch("dim must be >= 1")
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R).copy()
    d[d == 0] = 1.0
    return Q * (d / np.abs(d))


def random_hermitian(dim: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """Hermitian matrix with Gaussian entries, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitian_part(Z) * scale

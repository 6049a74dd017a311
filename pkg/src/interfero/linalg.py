"""Dense complex linear algebra and validated quantum-state carriers.

States and operators are plain ``numpy`` arrays of ``complex128``: state
vectors are 1-D, operators and density matrices 2-D.  The helpers here
validate the physical invariants (normalisation, hermiticity, unit trace,
positivity) that the rest of the package relies on.

Tolerance convention: 1e-12 for closed-form identities, 1e-10 for drift
accumulated by unitary evolution, 1e-8 for eigendecomposition residuals.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

ATOL_IDENTITY = 1e-12
ATOL_EVOLUTION = 1e-10
ATOL_EIG = 1e-8

#: Largest supported Hilbert-space dimension (4 qubits).
MAX_DIM = 16


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two operators; dimensions multiply."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def outer(v: np.ndarray) -> np.ndarray:
    """Density matrix |v><v| of a normalised state vector.

    Parameters
    ----------
    v:
        1-D complex vector with unit norm (within 1e-8).

    Returns
    -------
    Rank-1 Hermitian matrix with unit trace.
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValidationError(f"state vector must be 1-D, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > 1e-8:
        raise ValidationError(f"state vector is not normalised: |v| = {norm!r}")
    return np.outer(v, v.conj())


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2); equals 1 for pure states and 1/d for the maximally mixed one."""
    rho = check_density_matrix(rho)
    return float(np.real(np.trace(rho @ rho)))


def eig_hermitian(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix with a reproducible ordering.

    Eigenvalues come back ascending; within numerically degenerate groups the
    eigenvector columns are phase-fixed (first significant component real and
    positive) and ordered lexicographically, so repeated calls on identical
    input produce identical output.

    Parameters
    ----------
    m:
        Square matrix, Hermitian within 1e-8.

    Returns
    -------
    ``(eigenvalues, eigenvectors)`` with ``eigenvectors[:, k]`` the unit
    eigenvector for ``eigenvalues[k]``.
    """
    m = np.asarray(m, dtype=complex)
    _require_square(m)
    if float(np.max(np.abs(m - m.conj().T))) > ATOL_EIG:
        raise ValidationError("matrix is not Hermitian within 1e-8")
    lam, vecs = np.linalg.eigh(m)
    vecs = _fix_phases(vecs)
    order = _tie_broken_order(lam, vecs)
    return lam[order], vecs[:, order]


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary via QR of a complex Gaussian matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def check_state_vector(v: np.ndarray, n_qubits: int | None = None) -> np.ndarray:
    """Validate a circuit-facing state vector (power-of-2 length, unit norm)."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise ValidationError(f"state vector must be 1-D, got shape {v.shape}")
    dim = v.shape[0]
    if dim < 1 or dim > MAX_DIM or dim & (dim - 1):
        raise ValidationError(f"state dimension {dim} is not a power of 2 <= {MAX_DIM}")
    if n_qubits is not None and dim != 1 << n_qubits:
        raise ValidationError(f"state has dim {dim}, expected {1 << n_qubits} for {n_qubits} qubit(s)")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > ATOL_EVOLUTION:
        raise ValidationError(f"state vector is not normalised: |v| = {norm!r}")
    return v


def check_density_matrix(rho: np.ndarray, require_psd: bool = True) -> np.ndarray:
    """Validate hermiticity, unit trace and (optionally) positivity.

    Raw tomography output may carry negative eigenvalues; pass
    ``require_psd=False`` for matrices that have not been projected yet.
    """
    rho = np.asarray(rho, dtype=complex)
    _require_square(rho)
    if float(np.max(np.abs(rho - rho.conj().T))) > ATOL_EVOLUTION:
        raise ValidationError("density matrix is not Hermitian within 1e-10")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > ATOL_EVOLUTION:
        raise ValidationError(f"density matrix trace is {tr!r}, expected 1")
    if require_psd:
        lam = np.linalg.eigvalsh(rho)
        if float(lam[0]) < -ATOL_EIG:
            raise ValidationError(f"density matrix has negative eigenvalue {float(lam[0])!r}")
    return rho


def _require_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DIM:
        raise ValidationError(f"dimension {m.shape[0]} exceeds the supported maximum {MAX_DIM}")


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    out = vecs.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        idx = int(np.argmax(np.abs(col) > 1e-10))
        pivot = col[idx]
        if abs(pivot) > 0:
            out[:, j] = col * (abs(pivot) / pivot)
    return out


def _tie_broken_order(lam: np.ndarray, vecs: np.ndarray) -> list[int]:
    # eigh is already ascending; only reorder inside degenerate groups
    def key(j: int):
        col = np.round(vecs[:, j], 10)
        return tuple(x for c in col for x in (c.real, c.imag))

    order: list[int] = []
    start = 0
    n = lam.shape[0]
    scale = max(1.0, float(np.max(np.abs(lam))))
    while start < n:
        stop = start + 1
        while stop < n and lam[stop] - lam[start] <= 1e-10 * scale:
            stop += 1
        order.extend(sorted(range(start, stop), key=key))
        start = stop
    return order

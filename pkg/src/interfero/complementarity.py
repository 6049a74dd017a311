"""Wave/particle complementarity functionals and closed-form references.

``coherence_l1`` measures the wave aspect as the summed magnitude of the
off-diagonal density-matrix elements; ``predictability_l1`` measures the
which-way aspect from the diagonal.  For any valid d-dimensional state
their sum stays at or below d-1, with equality exactly on pure states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .linalg import outer

# Populations this close to zero are numerical residue of inversion and
# projection; the square root in the predictability would otherwise blow
# 1e-16-level noise up to 1e-8-level metric error at vanishing populations.
POPULATION_FLOOR = 1e-12


@dataclass(frozen=True)
class ComplementarityPoint:
    coherence: float
    predictability: float
    dim: int

    @property
    def total(self) -> float:
        return self.coherence + self.predictability


def coherence_l1(rho: np.ndarray) -> float:
    """Sum of |rho_jk| over all off-diagonal entries."""
    rho = _light_check(rho)
    mags = np.abs(rho)
    return float(mags.sum() - np.trace(mags))


def predictability_l1(rho: np.ndarray) -> float:
    """d - 1 minus the sum of sqrt(rho_jj rho_kk) over off-diagonal pairs.

    Diagonal entries within :data:`POPULATION_FLOOR` of zero (negative
    residue or float dust from reconstruction) count as exactly zero before
    the square roots.
    """
    rho = _light_check(rho)
    d = rho.shape[0]
    pops = np.real(np.diag(rho)).copy()
    pops[pops <= POPULATION_FLOOR] = 0.0
    root = np.sqrt(pops)
    cross = np.outer(root, root)
    return float(d - 1 - (cross.sum() - np.trace(cross)))


def is_incoherent(rho: np.ndarray, tol: float) -> bool:
    """True when every off-diagonal magnitude is at most ``tol``."""
    rho = _light_check(rho)
    off = np.abs(rho - np.diag(np.diag(rho)))
    return bool(np.max(off) <= tol) if off.size else True


def point_from_density(rho: np.ndarray) -> ComplementarityPoint:
    return ComplementarityPoint(coherence_l1(rho), predictability_l1(rho), rho.shape[0])


def bmzi_state(alpha: float) -> np.ndarray:
    """Closed-form final state of the biased Mach-Zehnder interferometer.

    First beam splitter angle ``alpha``; the phase shift and second beam
    splitter are fixed at their reference values (0 and a balanced flip),
    leaving amplitudes (cos(alpha/2), i sin(alpha/2)).
    """
    _finite(alpha, "alpha")
    return np.array([np.cos(alpha / 2), 1j * np.sin(alpha / 2)])


def pqe_state(phi: float) -> np.ndarray:
    """Closed-form final state of the partial quantum eraser at phase ``phi``.

    Basis order |q1 q0> with q1 the spatial mode and q0 the polarization.
    """
    _finite(phi, "phi")
    e = np.exp(1j * phi)
    return -np.array([e + 1, -np.sqrt(2), -1j * np.sqrt(2) * e, -(e - 1)]) / (2 * np.sqrt(2))


def theory_bmzi(alpha: float) -> ComplementarityPoint:
    """Noise-free complementarity point of the interferometer at ``alpha``.

    Evaluated numerically through the same metric code path used on
    reconstructed states; equals (|sin alpha|, 1 - |sin alpha|).
    """
    return point_from_density(outer(bmzi_state(alpha)))


def theory_pqe(phi: float) -> ComplementarityPoint:
    """Noise-free complementarity point of the quantum eraser at ``phi``."""
    return point_from_density(outer(pqe_state(phi)))


def _light_check(rho: np.ndarray) -> np.ndarray:
    # hermiticity and shape only: raw (possibly non-PSD) inputs are allowed
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValidationError(f"expected a square density matrix, got shape {rho.shape}")
    if float(np.max(np.abs(rho - rho.conj().T))) > 1e-8:
        raise ValidationError("density matrix is not Hermitian within 1e-8")
    return rho


def _finite(value: float, name: str) -> None:
    if not np.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")

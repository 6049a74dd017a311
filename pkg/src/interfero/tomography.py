"""State reconstruction from measurement counts.

One measurement circuit per non-identity Pauli string (3 settings for one
qubit, 15 for two), parity estimation of each expectation value, linear
inversion over the Pauli basis and an eigenvalue-clipping projection back to
the physical (PSD, trace-1) set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, unitary
from .errors import ReconstructionError, ValidationError
from .linalg import eig_hermitian, kron

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Rotations mapping each Pauli eigenbasis onto the computational basis.
BASIS_ROTATION = {
    "X": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "Y": np.array([[1, -1j], [1, 1j]], dtype=complex) / np.sqrt(2),
}


@dataclass(frozen=True)
class TomographyResult:
    """Expectations, raw inversion output and its physical projection."""

    expectations: dict[str, float]
    rho_raw: np.ndarray
    rho: np.ndarray
    psd_violation: float


def measurement_settings(n_qubits: int) -> list[str]:
    """All non-identity Pauli strings for ``n_qubits``, in lexicographic order.

    Letters are ordered I < X < Y < Z per qubit; the all-identity string is
    excluded, leaving ``4**n - 1`` settings.  The first character addresses
    the highest qubit, matching bitstring order.
    """
    if n_qubits not in (1, 2):
        raise ValidationError(f"tomography supports 1 or 2 qubits, got {n_qubits}")
    return ["".join(t) for t in itertools.product("IXYZ", repeat=n_qubits) if set(t) != {"I"}]


def basis_change(setting: str) -> Circuit:
    """Pre-measurement rotation circuit for one Pauli string.

    After this circuit, computational-basis outcome parity over the
    non-identity positions estimates the setting's expectation value.
    """
    n = _setting_qubits(setting)
    gates = []
    for pos, letter in enumerate(setting):
        qubit = n - 1 - pos
        if letter in BASIS_ROTATION:
            gates.append(unitary(BASIS_ROTATION[letter], (qubit,)))
    return Circuit(n, tuple(gates))


def expectation_from_counts(counts: dict[str, float], setting: str) -> float:
    """Parity-weighted average of counts taken in the setting's basis."""
    if not counts:
        raise ValidationError("counts table is empty")
    n = _setting_qubits(setting)
    total = 0.0
    acc = 0.0
    for bits, count in counts.items():
        if len(bits) != n:
            raise ValidationError(f"bitstring {bits!r} does not match {n} qubit(s)")
        if count < 0:
            raise ValidationError(f"negative count for outcome {bits!r}")
        parity = sum(int(b) for b, letter in zip(bits, setting) if letter != "I") & 1
        acc += -count if parity else count
        total += count
    if total <= 0:
        raise ValidationError("counts table has no shots")
    return acc / total


def linear_inversion(expectations: dict[str, float], n_qubits: int) -> np.ndarray:
    """rho = 2^-n * sum_P <P> P over the full Pauli basis, <I..I> = 1.

    Exact expectations reconstruct the state exactly; finite-shot estimates
    may produce negative eigenvalues, so the result is not validated as PSD.
    """
    required = measurement_settings(n_qubits)
    for setting in required:
        if setting not in expectations:
            raise ValidationError(f"missing expectation value for setting {setting!r}")
    for setting in expectations:
        if setting not in required:
            raise ValidationError(f"unexpected setting {setting!r} for {n_qubits} qubit(s)")
    dim = 1 << n_qubits
    rho = np.eye(dim, dtype=complex)
    for setting, value in expectations.items():
        if not -1.0 - 1e-9 <= value <= 1.0 + 1e-9:
            raise ValidationError(f"expectation for {setting!r} is {value!r}, outside [-1, 1]")
        rho = rho + value * _pauli_matrix(setting)
    return rho / dim


def project_psd(m: np.ndarray) -> tuple[np.ndarray, float]:
    """Clip negative eigenvalues and renormalise the trace to 1.

    Returns the projected state together with the clipped negative mass
    (0 when the input was already physical, in which case the input comes
    back unchanged).
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if float(np.max(np.abs(m - m.conj().T))) > 1e-6:
        raise ValidationError("matrix to project is not Hermitian within 1e-6")
    if abs(complex(np.trace(m)) - 1.0) > 1e-6:
        raise ValidationError(f"matrix to project has trace {complex(np.trace(m))!r}, expected 1")
    lam, vecs = eig_hermitian(m)
    if float(lam[0]) >= 0.0:
        return m, 0.0
    violation = float(-np.sum(lam[lam < 0]))
    clipped = np.clip(lam, 0.0, None)
    total = float(clipped.sum())
    if total <= 0.0:
        raise ReconstructionError("all eigenvalues clipped to zero; no physical state remains")
    clipped /= total
    return (vecs * clipped) @ vecs.conj().T, violation


def reconstruct(expectations: dict[str, float], n_qubits: int) -> TomographyResult:
    """Full pipeline: linear inversion followed by the PSD projection."""
    rho_raw = linear_inversion(expectations, n_qubits)
    rho, violation = project_psd(rho_raw)
    return TomographyResult(dict(expectations), rho_raw, rho, violation)


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Half the trace norm of a - b."""
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(a - b))))


def _pauli_matrix(setting: str) -> np.ndarray:
    m = PAULI[setting[0]]
    for letter in setting[1:]:
        m = kron(m, PAULI[letter])
    return m


def _setting_qubits(setting: str) -> int:
    if not setting or any(letter not in PAULI for letter in setting):
        raise ValidationError(f"invalid Pauli string {setting!r}")
    if set(setting) == {"I"}:
        raise ValidationError("measurement setting needs at least one non-identity letter")
    return len(setting)

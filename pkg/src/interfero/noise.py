"""Kraus noise channels and readout confusion.

A :class:`NoiseModel` bundles single-qubit Kraus channels that fire after
every gate (on each qubit the gate touched) and an optional per-qubit
readout confusion matrix applied to the outcome distribution before shots
are drawn.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

_ID2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)

KrausChannel = tuple[np.ndarray, ...]


def depolarizing(p: float) -> KrausChannel:
    """Channel rho -> (1-p) rho + p I/2.  Fully mixing at p=1."""
    _check_prob(p, "depolarizing")
    return (
        np.sqrt(1 - 3 * p / 4) * _ID2,
        np.sqrt(p / 4) * _X,
        np.sqrt(p / 4) * _Y,
        np.sqrt(p / 4) * _Z,
    )


def amplitude_damping(gamma: float) -> KrausChannel:
    """Energy relaxation: |1> decays to |0> with probability gamma."""
    _check_prob(gamma, "amplitude damping")
    k0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    k1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return (k0, k1)


def phase_damping(lmbda: float) -> KrausChannel:
    """Pure dephasing: off-diagonals shrink, populations untouched."""
    _check_prob(lmbda, "phase damping")
    k0 = np.sqrt(1 - lmbda) * _ID2
    k1 = np.sqrt(lmbda) * np.array([[1, 0], [0, 0]], dtype=complex)
    k2 = np.sqrt(lmbda) * np.array([[0, 0], [0, 1]], dtype=complex)
    return (k0, k1, k2)


def check_channel(kraus: KrausChannel) -> KrausChannel:
    """Require trace preservation: sum_k K^dag K = I within 1e-10."""
    kraus = tuple(np.asarray(k, dtype=complex) for k in kraus)
    if not kraus:
        raise ValidationError("a Kraus channel needs at least one operator")
    dim = kraus[0].shape[0]
    total = sum(k.conj().T @ k for k in kraus)
    if float(np.max(np.abs(total - np.eye(dim)))) > 1e-10:
        raise ValidationError("Kraus channel is not trace preserving")
    return kraus


def readout_confusion(flip0: float, flip1: float) -> np.ndarray:
    """Column-stochastic 2x2 matrix M[observed, true] for one qubit.

    ``flip0`` is the probability a true 0 reads as 1; ``flip1`` the reverse.
    """
    _check_prob(flip0, "readout flip0")
    _check_prob(flip1, "readout flip1")
    return np.array([[1 - flip0, flip1], [flip0, 1 - flip1]])


@dataclass(frozen=True)
class NoiseModel:
    """Per-gate Kraus channels plus an optional readout confusion matrix."""

    channels: tuple[KrausChannel, ...] = field(default_factory=tuple)
    readout: np.ndarray | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "channels", tuple(check_channel(c) for c in self.channels))
        if self.readout is not None:
            m = np.asarray(self.readout, dtype=float)
            if m.shape != (2, 2) or np.any(m < -1e-12) or np.max(np.abs(m.sum(axis=0) - 1.0)) > 1e-10:
                raise ValidationError("readout confusion must be a column-stochastic 2x2 matrix")
            object.__setattr__(self, "readout", m)

    @classmethod
    def build(
        cls,
        depolarizing_p: float = 0.0,
        amplitude_damping_gamma: float = 0.0,
        phase_damping_lambda: float = 0.0,
        readout_flip0: float = 0.0,
        readout_flip1: float = 0.0,
    ) -> "NoiseModel":
        """Assemble a model from scalar strengths; zero strengths are dropped."""
        channels = []
        if depolarizing_p > 0.0:
            channels.append(depolarizing(depolarizing_p))
        if amplitude_damping_gamma > 0.0:
            channels.append(amplitude_damping(amplitude_damping_gamma))
        if phase_damping_lambda > 0.0:
            channels.append(phase_damping(phase_damping_lambda))
        readout = None
        if readout_flip0 > 0.0 or readout_flip1 > 0.0:
            readout = readout_confusion(readout_flip0, readout_flip1)
        return cls(channels=tuple(channels), readout=readout)

    @property
    def is_noiseless(self) -> bool:
        return not self.channels and self.readout is None

    def apply_readout(self, probs: np.ndarray, n_qubits: int) -> np.ndarray:
        """Confuse an outcome distribution; identity when no readout noise."""
        if self.readout is None:
            return probs
        full = self.readout
        for _ in range(n_qubits - 1):
            full = np.kron(full, self.readout)
        return full @ probs


def _check_prob(value: float, name: str) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} strength must lie in [0, 1], got {value}")

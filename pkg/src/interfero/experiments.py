"""Interferometer circuit builders and sweep orchestration.

A sweep walks an angle grid, repeats each angle ``repetitions`` times, runs
every tomography setting with ``shots`` samples (or exact frequencies in
analytic mode), reconstructs the state and evaluates the complementarity
metrics.  Sampling streams are derived per (master_seed, angle, repetition,
setting) with a counter-based generator, so results do not depend on
execution order or thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .circuits import (
    Circuit,
    counts_from_probabilities,
    cx,
    ctrl_h_open,
    ctrl_ix,
    ix,
    outcome_probabilities,
    phase,
    rx_neg,
    simulate_density,
)
from .complementarity import coherence_l1, predictability_l1, theory_bmzi, theory_pqe
from .errors import ReconstructionError, ValidationError
from .mse import MetricSeries, MseReport, decompose, summarize
from .noise import NoiseModel
from .tomography import TomographyResult, basis_change, expectation_from_counts, measurement_settings, reconstruct

KINDS = ("bmzi", "pqe")
DEFAULT_REPETITIONS = {"bmzi": 128, "pqe": 32}
DEFAULT_LABEL = {"bmzi": "0", "pqe": "0-1"}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to rerun a sweep byte-for-byte.

    Noise is configured through scalar strengths so the whole config
    serialises to a flat key=value snapshot; :attr:`noise` assembles the
    matching :class:`NoiseModel`.
    """

    kind: str
    angle_points: int = 60
    shots: int = 1000
    repetitions: int | None = None
    master_seed: int = 12345
    analytic: bool = False
    label: str | None = None
    depolarizing: float = 0.0
    amplitude_damping: float = 0.0
    phase_damping: float = 0.0
    readout_flip0: float = 0.0
    readout_flip1: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.angle_points < 2:
            raise ValidationError(f"angle_points must be at least 2, got {self.angle_points}")
        if not self.analytic and self.shots < 1:
            raise ValidationError(f"shots must be a positive integer, got {self.shots}")
        if self.repetitions is not None and self.repetitions < 1:
            raise ValidationError(f"repetitions must be at least 1, got {self.repetitions}")
        if not 0 <= self.master_seed < 2**64:
            raise ValidationError(f"master_seed must fit in 64 bits, got {self.master_seed}")
        for name in ("depolarizing", "amplitude_damping", "phase_damping", "readout_flip0", "readout_flip1"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"{name} must lie in [0, 1], got {value}")

    @cached_property
    def noise(self) -> NoiseModel:
        return NoiseModel.build(
            depolarizing_p=self.depolarizing,
            amplitude_damping_gamma=self.amplitude_damping,
            phase_damping_lambda=self.phase_damping,
            readout_flip0=self.readout_flip0,
            readout_flip1=self.readout_flip1,
        )

    @property
    def n_qubits(self) -> int:
        return 1 if self.kind == "bmzi" else 2

    @property
    def m(self) -> int:
        return self.repetitions if self.repetitions is not None else DEFAULT_REPETITIONS[self.kind]

    @property
    def run_label(self) -> str:
        return self.label if self.label is not None else DEFAULT_LABEL[self.kind]

    def angles(self) -> np.ndarray:
        """Uniform endpoint-exclusive grid: [-pi, pi) for the interferometer
        sweep, [0, 2*pi) for the eraser, so the quarter-turn extremes land
        exactly on grid points."""
        if self.kind == "bmzi":
            return -np.pi + 2 * np.pi * np.arange(self.angle_points) / self.angle_points
        return 2 * np.pi * np.arange(self.angle_points) / self.angle_points


@dataclass(frozen=True)
class CellRecord:
    """Reconstruction and metrics for one (angle, repetition) cell."""

    angle_index: int
    angle: float
    repetition: int
    rho: np.ndarray
    coherence: float
    predictability: float
    total: float
    total_raw: float
    psd_violation: float


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    angles: np.ndarray
    theory_c: np.ndarray
    theory_p: np.ndarray
    records: tuple[CellRecord, ...]
    series: tuple[MetricSeries, ...]
    decompositions: tuple[MseReport, ...]
    report: MseReport


def build_bmzi(alpha: float) -> Circuit:
    """Biased Mach-Zehnder interferometer on one qubit.

    Biased beam splitter at ``alpha``, mirror pair, zero phase shift, and a
    balanced second beam splitter fixed at its reference angle.
    """
    _finite(alpha, "alpha")
    return Circuit(1, (rx_neg(alpha, 0), ix(0), phase(0.0, 0), rx_neg(-np.pi, 0)))


def build_pqe(phi: float) -> Circuit:
    """Partial quantum eraser on two qubits (q1 spatial mode, q0 polarization).

    Balanced splitter, half-wave plate marking the path on the polarization,
    mirrors and phase shift, recombining splitter, then quarter-wave plate
    and polarizing splitters that partially erase the marker.
    """
    _finite(phi, "phi")
    return Circuit(
        2,
        (
            rx_neg(np.pi / 2, 1),
            cx(1, 0),
            ix(1),
            phase(phi, 1),
            rx_neg(np.pi / 2, 1),
            ctrl_h_open(1, 0),
            ctrl_ix(0, 1),
        ),
    )


def build_circuit(kind: str, angle: float) -> Circuit:
    return build_bmzi(angle) if kind == "bmzi" else build_pqe(angle)


def theory_series(config: ExperimentConfig) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form coherence and predictability arrays over the angle grid."""
    oracle = theory_bmzi if config.kind == "bmzi" else theory_pqe
    points = [oracle(a) for a in config.angles()]
    return np.array([p.coherence for p in points]), np.array([p.predictability for p in points])


def cell_rng(master_seed: int, angle_index: int, repetition: int, setting_index: int) -> np.random.Generator:
    """Independent counter-based stream for one sampling cell."""
    seq = np.random.SeedSequence((master_seed, angle_index, repetition, setting_index))
    return np.random.Generator(np.random.Philox(seq))


def run_sweep(config: ExperimentConfig, threads: int = 1) -> ExperimentResult:
    """Execute the full sweep and aggregate the deconstructed MSE report.

    Work cells are independent; with ``threads > 1`` they run on a thread
    pool, and the output is identical to the single-threaded run.
    """
    angles = config.angles()
    settings = measurement_settings(config.n_qubits)
    theory_c, theory_p = theory_series(config)

    # The measured distribution per (angle, setting) is deterministic, so
    # simulate each combination once up front.
    probabilities: list[list[np.ndarray]] = []
    for angle in angles:
        base = build_circuit(config.kind, float(angle))
        per_setting = []
        for setting in settings:
            rho = simulate_density(base.extended(basis_change(setting)), config.noise)
            probs = outcome_probabilities(rho)
            per_setting.append(config.noise.apply_readout(probs, config.n_qubits))
        probabilities.append(per_setting)

    cells = [(i, r) for i in range(len(angles)) for r in range(config.m)]

    def run_cell(cell: tuple[int, int]) -> CellRecord:
        i, r = cell
        try:
            expectations = {}
            for s, setting in enumerate(settings):
                probs = probabilities[i][s]
                if config.analytic:
                    freqs = counts_from_probabilities(probs, None)
                else:
                    rng = cell_rng(config.master_seed, i, r, s)
                    freqs = counts_from_probabilities(probs, config.shots, rng)
                expectations[setting] = expectation_from_counts(freqs, setting)
            tomo = reconstruct(expectations, config.n_qubits)
        except ReconstructionError as exc:
            raise ReconstructionError(f"angle index {i}, repetition {r}: {exc}") from exc
        return _record(i, float(angles[i]), r, tomo)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records_by_cell = dict(zip(cells, pool.map(run_cell, cells)))
    else:
        records_by_cell = {cell: run_cell(cell) for cell in cells}

    records = tuple(records_by_cell[cell] for cell in cells)
    series = []
    decompositions = []
    for r in range(config.m):
        per_rep = [records_by_cell[(i, r)] for i in range(len(angles))]
        s = MetricSeries(
            angles=angles,
            experimental_c=np.array([rec.coherence for rec in per_rep]),
            experimental_p=np.array([rec.predictability for rec in per_rep]),
            theory_c=theory_c,
            theory_p=theory_p,
        )
        series.append(s)
        decompositions.append(decompose(s))
    report = summarize([d.mse_sum for d in decompositions], tuple(decompositions))
    return ExperimentResult(
        config=config,
        angles=angles,
        theory_c=theory_c,
        theory_p=theory_p,
        records=records,
        series=tuple(series),
        decompositions=tuple(decompositions),
        report=report,
    )


def _record(angle_index: int, angle: float, repetition: int, tomo: TomographyResult) -> CellRecord:
    c = coherence_l1(tomo.rho)
    p = predictability_l1(tomo.rho)
    c_raw = coherence_l1(tomo.rho_raw)
    p_raw = predictability_l1(tomo.rho_raw)
    return CellRecord(
        angle_index=angle_index,
        angle=angle,
        repetition=repetition,
        rho=tomo.rho,
        coherence=c,
        predictability=p,
        total=c + p,
        total_raw=c_raw + p_raw,
        psd_violation=tomo.psd_violation,
    )


def _finite(value: float, name: str) -> None:
    if not np.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")

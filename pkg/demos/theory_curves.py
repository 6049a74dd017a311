"""
Closed-form complementarity curves
==================================

The two interferometers trade wave behaviour (coherence) against which-way
knowledge (predictability) as their tunable angle moves.  For pure final
states the two quantities saturate the bound C + P = d - 1 exactly, so the
curves mirror each other.
"""

import numpy as np

from interfero import theory_bmzi, theory_pqe

# one-qubit interferometer: C(alpha) = |sin alpha|, bound d - 1 = 1
print("biased interferometer (1 qubit)")
print(f"{'alpha':>10} {'C':>10} {'P':>10} {'C+P':>10}")
for alpha in np.linspace(-np.pi, np.pi, 9):
    point = theory_bmzi(alpha)
    print(f"{alpha:10.4f} {point.coherence:10.6f} {point.predictability:10.6f} {point.total:10.6f}")

# two-qubit eraser: the marker qubit raises the bound to d - 1 = 3
print()
print("partial quantum eraser (2 qubits)")
print(f"{'phi':>10} {'C':>10} {'P':>10} {'C+P':>10}")
for phi in np.linspace(0, 2 * np.pi, 9):
    point = theory_pqe(phi)
    print(f"{phi:10.4f} {point.coherence:10.6f} {point.predictability:10.6f} {point.total:10.6f}")

# the quarter-turn extremes of the one-qubit device
extreme = theory_bmzi(-np.pi / 2)
print()
print(f"at alpha = -pi/2 the wave aspect is maximal: C = {extreme.coherence:.1f}, P = {extreme.predictability:.1f}")

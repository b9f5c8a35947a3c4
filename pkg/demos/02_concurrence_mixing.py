"""When is the concurrence of a mixture fixed by its pure components?

For two pure states with vanishing spin-flip overlap, C(w_m m + w_n n) equals
|w_m C_m - w_n C_n|. This script checks the rule on Bell states, on the
Ising eigenstates, and shows a four-level case where it breaks.
"""
import math

import numpy as np

from isingtangle import (
    PureStatePair,
    RingConfig,
    four_level_counterexample,
    spin_flip_overlap,
    verify_theorem,
)
from isingtangle.mixing import level_mixing_report

s = 1 / math.sqrt(2)
phi_plus = np.array([s, 0, 0, s], dtype=complex)
psi_minus = np.array([0, s, -s, 0], dtype=complex)
phi_phase = np.array([s, 0, 0, 1j * s])

print("overlap(phi+, psi-) =", spin_flip_overlap(phi_plus, psi_minus))
r = verify_theorem(PureStatePair(phi_plus, psi_minus, 0.7, 0.3))
print(f"0.7 phi+ + 0.3 psi-: predicted {r.predicted:.6f}, exact {r.exact:.6f}")

# a pair violating the condition, where the rule gives the wrong answer
r = verify_theorem(PureStatePair(phi_plus, phi_phase, 0.5, 0.5))
print(f"phi+ with (|00> + i|11>)/sqrt2: overlap {r.overlap:.3f}, "
      f"predicted {r.predicted:.3f}, exact {r.exact:.3f}")

# Ising eigenstates: the two lowest and three lowest levels satisfy the condition
for levels in (2, 3):
    r = level_mixing_report(RingConfig(2, 1.0, 0.6, 0.0), 0.3, levels)
    print(f"{levels} levels at Bx = 0.6, T = 0.3: discrepancy {r.discrepancy:.1e}")

# all four levels: the ground state and the top state have nonzero overlap
for bx, bz in ((1.0, 0.0), (0.2, 2.0)):
    print(f"\nfour levels, Bx = {bx}, Bz = {bz}")
    for T in (1.0, 0.3, 0.1, 0.05):
        r = four_level_counterexample(RingConfig(2, 1.0, bx, bz), T)
        print(f"  T = {T:4.2f}  |overlap| {abs(r.overlap):.3f}  "
              f"predicted {r.predicted:.5f}  exact {r.exact:.5f}  diff {r.discrepancy:.1e}")
# at Bz = 0 the top state has the same concurrence as the ground state and the
# rule survives by accident; near the pole at Bz = 2J it visibly fails

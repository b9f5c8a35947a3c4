"""Two coupled qubits in a transverse field.

Builds the Hamiltonian, prints its spectrum next to the closed form, and shows
how the ground-state tangle falls off as the field grows.
"""
import math

import numpy as np

from isingtangle import RingConfig, build_hamiltonian, diagonalize, pure_concurrence

J = 1.0

# the spectrum is -2 sqrt(J^2 + B^2), -2J, 2J, 2 sqrt(J^2 + B^2)
for B in (0.1, 0.5, 1.0, 2.0):
    spec = diagonalize(build_hamiltonian(RingConfig(2, J, B, 0.0)))
    r = 2 * math.sqrt(J * J + B * B)
    print(f"B = {B:3.1f}  numeric {np.round(spec.energies, 6)}  closed form {[-r, -2 * J, 2 * J, r]}")

# ground-state tangle against J^2 / (J^2 + B^2)
print("\n   B    tangle   J^2/(J^2+B^2)")
for B in np.linspace(0.25, 3.0, 12):
    ground = diagonalize(build_hamiltonian(RingConfig(2, J, B, 0.0))).vectors[:, 0]
    tau = pure_concurrence(ground) ** 2
    print(f"{B:5.2f}  {tau:.6f}  {J * J / (J * J + B * B):.6f}")

# with no transverse field the ground level is degenerate, and the
# zero-temperature state is an equal mixture carrying no entanglement
spec = diagonalize(build_hamiltonian(RingConfig(2, J, 0.0, 0.0)))
print("\nzero field energies:", spec.energies)

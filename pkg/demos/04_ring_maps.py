"""Tangle maps for longer rings.

Sweeps the field plane for rings of three to six qubits, compares odd and
even sizes, and writes one map to CSV through the command-line front end.
Pass a directory as the first argument to choose where the CSV goes.
"""
import sys
import tempfile
from pathlib import Path

import numpy as np

from isingtangle import SweepSpec, run_sweep
from isingtangle.cli import main as cli
from isingtangle.sweep import complementarity_report, even_odd_distance

T = 0.1
grids = {}
for n in (3, 4, 5, 6):
    grids[n] = run_sweep(SweepSpec.default("Bx_Bz", steps=21, n_qubits=n, temperature=T))
    v = grids[n].values
    i, j = np.unravel_index(np.argmax(v), v.shape)
    print(f"N = {n}: max tangle {v.max():.4f} at Bx = {grids[n].axis1[i]:+.2f}, Bz = {grids[n].axis2[j]:+.2f}")

print(f"\nmean |difference| N=3 vs N=4: {even_odd_distance(grids[3], grids[4]):.5f}")
print(f"mean |difference| N=5 vs N=6: {even_odd_distance(grids[5], grids[6]):.5f}")

# next-nearest neighbours on the five-ring
nnn = run_sweep(SweepSpec.default("Bx_Bz", steps=21, n_qubits=5, separation=2, temperature=T))
rep = complementarity_report(grids[5], nnn)
print("\nfive-ring, a = 1 vs a = 2:", {k: rep[k] for k in ("correlation", "correlation_note", "mean_b")})

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
out = out_dir / "two_qubit_bx_bz.csv"
cli(["sweep", "--kind", "bx-bz", "--n", "2", "--t", "0", "--steps", "31", "--out", str(out)])
print(f"\nwrote {out} ({len(out.read_text().splitlines()) - 1} grid points)")

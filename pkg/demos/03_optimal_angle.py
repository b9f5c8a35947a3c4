"""The field angle that maximises two-qubit entanglement at fixed amplitude.

At zero temperature the best field points almost along z; heating the system
pushes the optimum towards the transverse direction. The closed form from the
low-temperature gap condition is compared with direct maximisation.
"""
import math

from isingtangle.approx import (
    max_condition_approx,
    max_condition_exact,
    theta_star_analytic,
    theta_star_numeric,
    two_level_optimal_gap,
)

B = 1.0
print("   T    theta* numeric   tangle")
for T in (0.0, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0):
    r = theta_star_numeric(B, T)
    print(f"{T:5.2f}   {r.theta:8.4f}       {r.tangle:.5f}")
print(f"pi/2 = {math.pi / 2:.4f}")

# gap conditions at low temperature
print("\n   T    T ln(4/T)   condition root   direct optimum")
for T in (0.02, 0.05, 0.1, 0.2):
    print(f"{T:5.2f}   {max_condition_approx(T):.5f}     {max_condition_exact(T):.5f}"
          f"          {two_level_optimal_gap(T):.5f}")

T = 0.1
a, n = theta_star_analytic(B, T).theta, theta_star_numeric(B, T).theta
print(f"\nB = {B}, T = {T}: closed form {a:.4f}, numeric {n:.4f}, difference {abs(a - n):.4f}")

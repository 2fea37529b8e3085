#!/usr/bin/env python3
# Enumerate the translation-invariant fixed points of the wand model and
# show how the solution count changes at the critical coupling.
import numpy as np

from hcsos import (
    compatibility_residual,
    enumerate_solutions,
    eta,
    solve_k2_closed_form,
    theta_cr,
)

for k in (2, 3, 5):
    print(f"k = {k}: theta_cr = {theta_cr(k):.6f} "
          f"(peak of the level function: eta(1) = {eta(1.0, k):.4f})")
print()

k = 3
tc = theta_cr(k)
print(f"solution counts across the transition at k = {k}:")
for theta in np.linspace(0.4, 2.0 * tc, 9):
    sset = enumerate_solutions(k, float(theta))
    tags = ", ".join(
        f"{s.branch.value}(x={s.x:.4f}, y={s.y:.4f})" for s in sset.solutions
    )
    print(f"  theta = {theta:6.3f}  ->  {len(sset)} solution(s): {tags}")
print()

# below the threshold the asymmetric pair is exactly reciprocal and both
# members satisfy the fixed-point system to solver accuracy
theta = 0.9
sset = enumerate_solutions(k, theta)
_, upper, lower = sset.solutions
print(f"reciprocity at k={k}, theta={theta}: x_upper * x_lower - 1 = "
      f"{upper.x * lower.x - 1.0:.2e}")
for s in sset.solutions:
    res = compatibility_residual(k, theta, s.x, s.y)
    print(f"  {s.branch.value:<10} residual = {res:.2e}")
print()

# for k = 2 the pair has a closed form through rho = x + 1/x; it matches
# the bracketed root finder to ~1e-12
theta = 0.7
closed_upper = solve_k2_closed_form(theta)[0]
bracketed_upper = enumerate_solutions(2, theta).solutions[1]
print(f"k=2 closed form vs bracketed solver at theta={theta}:")
print(f"  x: {closed_upper.x!r} vs {bracketed_upper.x!r} "
      f"(gap {abs(closed_upper.x - bracketed_upper.x):.2e})")

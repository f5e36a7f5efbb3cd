"""
Debt dynamics: budget recursion and the per-capita growth model
===============================================================

Two views of debt accumulation. The exact budget identity compounds
interest on the stock and adds the primary deficit. The per-capita model
d' = d (c d^(gamma-1) - r_pop) ties the borrowing rate to the GDP-debt
scaling law; gamma < 1 gives it a stable equilibrium.
"""

import numpy as np

from debtkit import dynamics

# --- 1. the budget identity ---------------------------------------------
# D(t) = (1 + I) D(t-1) + primary deficit
scenarios = {
    "balanced budget":    dynamics.BudgetParams(100.0, 0.05, 0.0, 30),
    "persistent deficit": dynamics.BudgetParams(100.0, 0.05, 5.0, 30),
    "primary surplus":    dynamics.BudgetParams(100.0, 0.05, -5.0, 30),
}
print("total debt after 30 years from 100 at 5% interest:")
for label, params in scenarios.items():
    path = dynamics.step_debt(params)
    print(f"  {label:20s} D(30) = {path[-1]:8.1f}")

# zero deficit compounds geometrically: D(t) = 100 * 1.05^t
path = dynamics.step_debt(scenarios["balanced budget"])
assert np.allclose(path, 100.0 * 1.05 ** np.arange(31), rtol=1e-12)

# --- 2. the per-capita model: gamma = 1 is a pure exponential ------------
p = dynamics.ModelParams(c=0.05, gamma=1.0, r_pop=0.01, d0=1.0,
                         dt_step=1e-3, horizon=50.0)
path = dynamics.simulate_model(p)
print(f"\ngamma=1: d(50) = {path.d_values[-1]:.4f} "
      f"(closed form {np.exp(0.04 * 50.0):.4f}), {path.terminal_flag.value}")

# --- 3. gamma < 1 bends the path toward an equilibrium -------------------
# growth slows as debt rises because c d^(gamma-1) falls; the fixed point
# is d* = (c / r_pop)^(1/(1-gamma))
p = dynamics.ModelParams(c=0.05, gamma=0.9, r_pop=0.01, d0=1.0,
                         dt_step=1e-3, horizon=400.0)
path = dynamics.simulate_model(p)
d_star = (0.05 / 0.01) ** (1.0 / 0.1)
print(f"\ngamma=0.9: d(400) = {path.d_values[-1]:.1f}, "
      f"equilibrium d* = (c/r_pop)^10 = {d_star:.1f}")
for t in (0.0, 50.0, 100.0, 200.0, 400.0):
    i = np.searchsorted(path.times, t)
    print(f"  t = {t:5.0f}  d = {path.d_values[i]:12.2f}")

# --- 4. the local slope quantifies the self-stabilizing pull --------------
# d r_d / d d = -c (1-gamma) / d^(2-gamma) < 0 whenever gamma < 1
print("\nlocal slope of the growth rate (gamma = 0.9):")
for d in (0.5, 1.0, 5.0, 50.0):
    slope = dynamics.local_slope(p, d)
    rate = dynamics.model_growth_rate(p, d)
    print(f"  d = {d:5.1f}  r_d = {rate:+.4f}  d(r_d)/d(d) = {slope:+.6f}")

# --- 5. runaway and vanishing paths are flagged, not crashed --------------
blow = dynamics.simulate_model(dynamics.ModelParams(
    c=1.0, gamma=1.2, r_pop=0.0, d0=100.0, dt_step=0.01, horizon=200.0))
fade = dynamics.simulate_model(dynamics.ModelParams(
    c=0.0, gamma=1.0, r_pop=0.5, d0=1e-6, dt_step=0.01, horizon=200.0))
print(f"\nc=1, gamma=1.2 from d0=100: {blow.terminal_flag.value} "
      f"after {blow.times[-1]:.2f} years")
print(f"c=0, r_pop=0.5 from d0=1e-6: {fade.terminal_flag.value} "
      f"after {fade.times[-1]:.2f} years")

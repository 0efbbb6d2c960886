#!/usr/bin/env python3
"""Expected numbers of real roots for the Gaussian polynomial families.

The closed-form predictions come from the expected-count integral of the
root density; Monte Carlo with the exact solver corroborates them.
"""

import math

import realroots as rr
from realroots.experiments import ExperimentConfig, run_ek_mc

# --- closed forms ----------------------------------------------------------
print("SO(2) family: expected real roots = sqrt(d) exactly")
for d in (25, 100, 400):
    val = rr.ek_expected_count(rr.variance_vector("so2", d))
    print(f"  d={d:4d}: integral={val:.8f}  sqrt(d)={math.sqrt(d):.8f}")

print("\nWeyl family: ~ (2/pi) sqrt(d) inside the disc |t| <= sqrt(d)")
for d in (100, 400):
    disc = rr.weyl_expected_count(d, disc_only=True)
    whole = rr.weyl_expected_count(d)
    print(f"  d={d:4d}: disc={disc:.4f}  whole line={whole:.4f}  "
          f"(2/pi)sqrt(d)={2/math.pi*math.sqrt(d):.4f}")

print("\nEven-binomial model: expected positive roots ~ sqrt(2d)/2")
for d in (50, 200, 1000):
    val = rr.bernstein_root_integral(d)
    print(f"  d={d:4d}: I={val:.4f}  sqrt(2d)/2={math.sqrt(2*d)/2:.4f}")

# --- densities at a glance ---------------------------------------------------
print("\nroot densities at t=0: so2 sqrt(d)/pi, weyl 1/pi")
for d in (25, 100):
    print(f"  d={d}: so2 {rr.ek_density(rr.variance_vector('so2', d), 0.0):.5f}"
          f"  weyl {rr.weyl_density(0.0, d):.5f}")

# --- Monte Carlo corroboration ----------------------------------------------
print("\nMonte Carlo (exact Sturm counts) vs the integral:")
cfg = ExperimentConfig(model="so2", degrees=(64,), trials=60, seed=11, jobs=1)
rows, _ = run_ek_mc(cfg, models=("so2", "kac"))
for model, d, pred, mean, se, z, n in rows:
    print(f"  {model:4s} d={d}: prediction={pred:.3f}  MC mean={mean:.3f} "
          f"(se {se:.3f}, z={z:+.2f}, {n} trials)")

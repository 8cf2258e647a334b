"""Build the synthetic expert and look at its kinetics.

The expert is the only "motion capture" this package has: a planar biped
driven along a Fourier gait template by stiff impedance control, with a
small assistive wrench on the root.  Here we generate it, then treat its
recorded population walk the way a gait lab treats a subject: filter,
cut into heel-strike cycles, time-normalize, and recover joint moments by
inverse dynamics.

Run:  python3 demos/01_expert_gait.py   (about a minute)
"""
import warnings

import numpy as np

from kail.evaluation import expert_ensemble
from kail.expert import generate_expert
from kail.invdyn import inverse_dynamics
from kail.model import JOINT_NAMES

clip = generate_expert()
spec = clip.spec
meta = clip.meta
print(f"expert: {clip.n_cycles} cycles of {clip.cycle_len} frames at {clip.rate:.0f} Hz, "
      f"{meta['speed']:.3f} m/s (template {meta['speed_template']} m/s)")

# Vertical GRF over one cycle, as a fraction of body weight.  A walking
# gait should show stance-phase loading near 1 BW on each foot with a
# double-support overlap where both feet share the load.
fv = clip.grf_ref[: clip.cycle_len, :, 1] / spec.body_weight
both = (fv > 0.05).all(axis=1)
print(f"peak vertical GRF: right {fv[:, 0].max():.2f} BW, left {fv[:, 1].max():.2f} BW; "
      f"double support {100 * both.mean():.0f}% of the cycle")

# Inverse dynamics on the physics-rate population record.  The simulator
# knows the torques it applied, so the reconstruction error is a direct
# check on both the dynamics and its inverse.
pop = clip.population
res = inverse_dynamics(spec, pop)
err = np.sqrt(np.mean((res.moments - pop.tau - pop.tau_passive) ** 2, axis=0))
print("inverse dynamics RMS error per joint (N m):",
      ", ".join(f"{j} {e:.1e}" for j, e in zip(JOINT_NAMES, err)))

with warnings.catch_warnings():
    warnings.simplefilter("ignore")  # CoP clamping near toe-off is reported, not an error here
    ens = expert_ensemble(clip)
mean = ens.mean()
print(f"\n{ens.n_cycles} cycles segmented at right heel strike; ensemble means at 0/25/50/75/100 % of the cycle:")
idx = [0, 25, 50, 75, 100]
for j, name in enumerate(JOINT_NAMES):
    angles = " ".join(f"{mean.angles[0, i, j]:7.1f}" for i in idx)
    moments = " ".join(f"{mean.moments[0, i, j]:7.1f}" for i in idx)
    print(f"  {name:8s} angle (deg) {angles}   moment (N m) {moments}")

"""Summarize a finished ablation the way a results table would.

Reads ``report_seed*.json`` from an ablation run directory (default
``runs/ablate_desk``, produced by ``python3 -m kail ablate --clip ...``)
and prints, per condition, the across-seed mean of each headline metric
plus the pooled paired t-test against the baseline arm.

Run:  python3 demos/03_ablation_summary.py [run_dir]
"""
import sys
from pathlib import Path

import numpy as np

from kail.evaluation import load_report, paired_ttest

run_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/ablate_desk")
paths = sorted(run_dir.glob("report_seed*.json"))
if not paths:
    sys.exit(f"no reports in {run_dir}; run `python3 -m kail ablate --clip <clip.npz> --scale desk --seeds 3` first")
reports = [load_report(p) for p in paths]
conditions = [c for c in ("baseline", "grf", "cop", "all") if all(c in r.conditions for r in reports)]


def pooled(cond, metric):
    return np.concatenate([np.ravel(getattr(r.conditions[cond], metric).per_cycle) for r in reports])


print(f"{len(reports)} seeds from {run_dir}\n")
print(f"{'condition':10s} {'CoP RMSE %FL':>13s} {'CPCC |r|':>9s} {'phase rad':>10s} {'joint RMSE deg':>15s}")
for c in conditions:
    print(f"{c:10s} {np.nanmean(pooled(c, 'cop_rmse_pct_fl')):13.2f} {np.nanmean(pooled(c, 'cpcc_magnitude')):9.4f} "
          f"{np.nanmean(np.abs(pooled(c, 'cpcc_phase'))):10.4f} {np.nanmean(pooled(c, 'joint_angle_rmse')):15.2f}")

print("\npaired t-tests on CoP RMSE, cycles pooled over seeds (negative t: lower than baseline)")
base = pooled("baseline", "cop_rmse_pct_fl")
for c in conditions[1:]:
    t, p, n = paired_ttest(pooled(c, "cop_rmse_pct_fl"), base)
    change = 100 * (np.nanmean(pooled(c, "cop_rmse_pct_fl")) / np.nanmean(base) - 1)
    print(f"  {c:5s} vs baseline: {change:+6.1f}%  t={t:7.2f}  p={p:.2e}  n={n}")

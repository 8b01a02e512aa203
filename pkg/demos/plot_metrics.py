"""
Evaluation metrics
==================

Predictions are grey-level masks. mIoU is reported at the single global
threshold that maximises it, AP pools all pixels of the split, and the
boundary F-score counts boundary pixels that lie within two pixels of the
other mask's boundary.
"""

import numpy as np

from flowseg.metrics import average_precision, best_threshold_miou, boundary_f_score, iou, iou_table
from flowseg.data import generate_scene

rng = np.random.default_rng(0)
recs = [generate_scene(s, "easy") for s in range(20)]
truth = [r.mask_clean for r in recs]

# %%
# A blurred, slightly dimmed copy of the truth stands in for a model output.
from scipy.ndimage import gaussian_filter

pred = [np.clip(0.8 * gaussian_filter(t.astype(float), 1.5) + 0.05 * rng.random(t.shape), 0, 1) for t in truth]
miou, thr = best_threshold_miou(pred, truth)
print(f"best-threshold mIoU {miou:.4f} at {thr:.2f}")
print(f"mIoU at 0.5: {np.mean([iou(p >= 0.5, t) for p, t in zip(pred, truth)]):.4f}")
print(f"AP {average_precision(pred, truth):.4f}")
print(f"boundary F at best threshold {np.mean([boundary_f_score(p >= thr, t) for p, t in zip(pred, truth)]):.4f}")

# %%
# The whole threshold sweep: one row per image, one column per threshold.
table = iou_table(pred, truth)
for g, m in zip(np.arange(0, 1.0001, 0.05), table.mean(axis=0)):
    print(f"{g:.2f} {'#' * int(40 * m)}")

"""
Training a small flow model
===========================

The network learns a velocity field that carries the image latent to the
mask latent along a straight line. With both a polygon label and a refined
label available, each sample is trained on whichever of the two the model
currently fits better.

This demo uses a narrow network and a few hundred scenes so it finishes in a
couple of minutes on a CPU; the full benchmark lives in
``python -m flowseg.benchmark``.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from flowseg.data import generate_split
from flowseg.net import FlowNetConfig, count_params, init_params
from flowseg.refinement import refine_mask_iterative
from flowseg.training import TrainArrays, TrainConfig, read_metrics, train_loop

out = Path("demo_output")
run = out / "small_run"

train = generate_split("train", 400)
for rec in train:
    rec.mask_refined = refine_mask_iterative(rec.mask_poly, rec.image).mask
arrays = TrainArrays.from_records(train, label="poly", with_refined=True)

net_cfg = FlowNetConfig(widths=(32, 64))
print("parameters:", count_params(init_params(0, net_cfg)))
cfg = TrainConfig(steps=600, batch_size=16, lr=1e-3, ckpt_every=300)
final = train_loop(arrays, cfg, run, net_cfg)
print("final checkpoint:", final)

# %%
# ``metrics.csv`` holds one row per step; ``chose_original_rate`` is the
# share of samples for which the polygon label gave the lower loss.
rows = read_metrics(run / "metrics.csv")
steps = np.array([r["step"] for r in rows])
loss = np.array([r["loss"] for r in rows])
rate = np.array([r["chose_original_rate"] for r in rows])
smooth = np.convolve(loss, np.ones(25) / 25, mode="valid")

fig, (a, b) = plt.subplots(1, 2, figsize=(8, 3))
a.plot(steps, loss, color="0.8")
a.plot(steps[24:], smooth)
a.set_xlabel("step")
a.set_ylabel("flow loss")
b.plot(steps, rate, ".", ms=2)
b.set_xlabel("step")
b.set_ylabel("chose original")
fig.tight_layout()
fig.savefig(out / "training.png", dpi=100)
print(f"mean chose_original_rate: {rate.mean():.3f}")

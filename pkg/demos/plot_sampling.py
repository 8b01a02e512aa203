"""
One-step, adaptive one-step and multi-step sampling
===================================================

A trained model maps an image latent to a mask latent with a single
velocity evaluation. Adaptive one-step sampling stretches that step by
``1 + gamma``, where gamma measures how far the prediction stops short of
pure black on confidently-background positions. Multi-step Euler
integration is included for comparison, together with a check of how the
velocity direction changes along the path.

Uses the benchmark checkpoint when it exists, otherwise the one written by
``plot_train_small.py``.
"""

import os
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

from flowseg import codec
from flowseg.data import generate_split
from flowseg.net import load_checkpoint
from flowseg.pipeline import evaluate_predictions, predict
from flowseg.prompts import pack_prompts, token_ids, tokenize_prompt
from flowseg.sampling import path_crossing_diagnostic

out = Path("demo_output")
bench = Path(os.environ.get("FLOWSEG_BENCH_ROOT", "runs/benchmark")) / "train_rds" / "final.npz"
ckpt = bench if bench.exists() else out / "small_run" / "final.npz"
net, meta = load_checkpoint(ckpt)
print(f"checkpoint {ckpt} (step {meta['step']})")

test = generate_split("test", 200)
results = {}
for name, sampler, k in [("one-step", "one_step", 1), ("AOS", "aos", 1), ("Euler 5", "euler", 5), ("Euler 15", "euler", 15)]:
    pred = predict(net, test, sampler, k)
    rep = evaluate_predictions(pred, test)
    results[name] = pred
    print(f"{name:9s} mIoU {rep.miou:.4f} @ {rep.best_threshold:.2f}  AP {rep.ap:.4f}  boundary F {rep.boundary_f:.4f}")

gamma = results["AOS"].gamma
print(f"gamma > 0 on {np.mean(gamma > 0):.0%} of scenes, max {gamma.max():.3f}")

# %%
# Predictions for a few scenes, grey levels before thresholding.
fig, axes = plt.subplots(4, 5, figsize=(9, 7))
for row, i in enumerate(range(4)):
    axes[row, 0].imshow(test[i].image.transpose(1, 2, 0))
    axes[row, 0].set_title(test[i].prompt, fontsize=6)
    for col, name in enumerate(results, start=1):
        axes[row, col].imshow(results[name].gray[i], cmap="gray", vmin=0, vmax=1)
        if row == 0:
            axes[row, col].set_title(name, fontsize=8)
for ax in axes.ravel():
    ax.set_axis_off()
fig.tight_layout()
fig.savefig(out / "sampling.png", dpi=100)

# %%
# Path crossing: cosine between the velocity at each t and the one at t = 1.
# A straight, uncrossed path keeps it at 1.
ts = [1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1]
fig, ax = plt.subplots(figsize=(4, 3))
for rec in test[:8]:
    z1 = torch.from_numpy(codec.encode_image(rec.image)).float()
    with torch.no_grad():
        c = net.embed(*pack_prompts([token_ids(tokenize_prompt(rec.prompt))]))[0]
    rows = path_crossing_diagnostic(net, z1, c, ts)
    ax.plot([r["t"] for r in rows], [r["cosine_vs_t1"] for r in rows], lw=0.8)
ax.invert_xaxis()
ax.set_xlabel("t")
ax.set_ylabel("cos(v_t, v_1)")
fig.tight_layout()
fig.savefig(out / "path_crossing.png", dpi=100)

#!/usr/bin/env python3
"""Tour of the training losses and their gradients.

Walks the margin triplet loss, the masked-anchor MSE constraint, and
their combination through a few hand-checkable configurations, then
verifies every analytic gradient against central finite differences.
"""

import numpy as np

from maskverify.gradcheck import run_gradcheck
from maskverify.losses import (
    LossConfig,
    QuadEmbeddings,
    combined_loss,
    combined_loss_grad,
    cross_entropy,
    mse,
    triplet_loss,
)

cfg = LossConfig()  # margin 0.2, MSE weight 1.0

print("=== triplet loss on squared distances ===")
a, p, n = np.zeros(2), np.array([2.0, 0.0]), np.array([1.0, 0.0])
print(f"degenerate (a=p=n):        {triplet_loss(a, a, a, cfg):.4f}  (= margin)")
print(f"well separated:            {triplet_loss(a, a, n, cfg):.4f}  (hinge clamps)")
print(f"positive farther than neg: {triplet_loss(a, p, n, cfg):.4f}  (0.2 - 1 + 4)")

print("\n=== masked-anchor MSE constraint ===")
am = np.array([2.0, 0.0])
print(f"mse((2,0), (0,0)) = {mse(am, a):.4f}  (mean of 4 and 0)")

print("\n=== combined objective ===")
quad = QuadEmbeddings(a, am, p, n)
print(f"triplet + mse = {combined_loss(quad, cfg):.4f}  (3.2 + 2.0)")
grads = combined_loss_grad(quad, cfg)
for name, g in zip(("d_anchor", "d_masked", "d_pos", "d_neg"), grads):
    print(f"  {name:9s} = {g}")

print("\n=== classification stage: cross-entropy ===")
loss, d_logits = cross_entropy(np.zeros(10), 3)
print(f"uniform logits over 10 classes: loss = {loss:.6f} (ln 10)")
print(f"logit gradient sums to {d_logits.sum():+.2e} (softmax leaves the simplex)")

print("\n=== finite-difference verification of every gradient site ===")
for site, err in run_gradcheck(seed=7, instances=50):
    print(f"  {site:<14} max relative error {err:.3e}")
print("all sites agree with central differences.")

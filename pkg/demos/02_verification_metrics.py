#!/usr/bin/env python3
"""The biometric verification metric suite on synthetic score data.

Builds two overlapping score distributions (genuine pairs score higher
on average), sweeps the ROC, and reports EER, FMR100, FMR10, AUC and
the class means.  Writes the ROC as CSV and SVG under demos/output/.
"""

import os

from maskverify.metrics import ScoreSet, eer, roc, summary, write_roc_csv, write_roc_svg
from maskverify.numkit import Prng

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

prng = Prng(22)
scores = ScoreSet(
    genuine=[prng.normal(0.55, 0.18) for _ in range(400)],
    impostor=[prng.normal(0.10, 0.18) for _ in range(400)],
)

print("=== metric suite on overlapping score distributions ===")
m = summary(scores)
print(f"GMean  {m['gmean']:.4f}   (mean genuine similarity)")
print(f"IMean  {m['imean']:.4f}   (mean impostor similarity)")
print(f"AUC    {m['auc']:.4f}")
print(f"EER    {100 * m['eer']:.2f}%")
print(f"FMR100 {100 * m['fmr100']:.2f}%  (lowest FNMR with FMR < 1%)")
print(f"FMR10  {100 * m['fmr10']:.2f}%  (lowest FNMR with FMR < 10%)")
print(f"interpolated EER {100 * eer(scores, interpolate=True):.2f}%")

curve = roc(scores)
print(f"\nROC swept {len(curve.thresholds)} thresholds "
      f"(fmr {curve.fmr[0]:.0f} -> {curve.fmr[-1]:.0f} as the threshold rises)")

csv_path = os.path.join(OUT, "roc_demo.csv")
svg_path = os.path.join(OUT, "roc_demo.svg")
write_roc_csv(csv_path, curve)
write_roc_svg(svg_path, {"synthetic scores": curve}, title="ROC (demo)")
print(f"wrote {csv_path}")
print(f"wrote {svg_path}")

print("\n=== separation sanity checks ===")
perfect = ScoreSet(genuine=[0.9, 0.8, 0.7], impostor=[0.2, 0.1, 0.0])
print(f"perfectly separated sets: EER {eer(perfect):.1f}, AUC {summary(perfect)['auc']:.1f}")
coin = ScoreSet(genuine=[0.5, 0.1], impostor=[0.5, 0.1])
print(f"identical distributions:  EER {eer(coin):.1f}, AUC {summary(coin)['auc']:.1f}")

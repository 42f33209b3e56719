#!/usr/bin/env python3
"""Synthetic mask compositing from 68-point landmarks.

Renders a simple face raster from the landmark fixture, builds all six
mask variants (wide/round x high/medium/low coverage), and runs the
randomized per-image pipeline.  Outputs land in demos/output/ as PPM.
"""

import os

import numpy as np

from maskverify import masksynth as ms
from maskverify.numkit import Prng

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

SIZE = 224
lm = ms.synthetic_face_landmarks(SIZE, SIZE)


def draw_face(landmarks):
    """Flat-shaded portrait: skin oval from the jawline, painted eyes,
    brows, nose and lips, all through the package's own rasterizer."""
    img = ms.new_image(SIZE, SIZE, (120, 144, 170))  # backdrop

    jaw = landmarks[0:17]
    forehead = jaw[::-1].copy()
    forehead[:, 1] = 2 * landmarks[27, 1] - 0.8 * (forehead[:, 1] - landmarks[27, 1]) - landmarks[27, 1]
    skin = np.vstack([jaw, forehead])
    img[ms.rasterize(skin, SIZE, SIZE)] = (224, 188, 158)

    for sl, color in (
        (slice(17, 22), (96, 64, 40)),   # brows
        (slice(22, 27), (96, 64, 40)),
        (slice(36, 42), (255, 255, 255)),  # eye whites
        (slice(42, 48), (255, 255, 255)),
        (slice(48, 60), (176, 92, 84)),  # lips
    ):
        img[ms.rasterize(landmarks[sl], SIZE, SIZE)] = color
    nose = landmarks[[27, 31, 35]]
    img[ms.rasterize(nose, SIZE, SIZE)] = (208, 164, 134)
    return img


face = draw_face(lm)
ms.write_ppm(os.path.join(OUT, "face_unmasked.ppm"), face)
print("rendered fixture face -> face_unmasked.ppm")

print("\n=== the six mask variants ===")
for shape in ms.SHAPES:
    for coverage in ms.COVERAGES:
        spec = ms.MaskSpec(shape, coverage, ms.PALETTE["light_blue"])
        poly = ms.mask_polygon(lm, spec)
        out = face.copy()
        out[ms.rasterize(poly, SIZE, SIZE)] = spec.color
        name = f"face_{shape}_{coverage}.ppm"
        ms.write_ppm(os.path.join(OUT, name), out)
        print(f"{shape:5s}/{coverage:6s}: area {ms.polygon_area(poly):7.0f} px^2 -> {name}")

print("\n=== randomized pipeline (per-image seeded streams) ===")
manifest = os.path.join(OUT, "manifest_in.jsonl")
with open(manifest, "w") as fh:
    import json

    for i in range(4):
        img_path = os.path.join(OUT, f"subject_{i}.ppm")
        lm_path = os.path.join(OUT, f"subject_{i}.json")
        ms.write_ppm(img_path, face)
        ms.save_landmarks(lm_path, lm)
        fh.write(json.dumps({"identity": i, "image_path": img_path, "landmark_path": lm_path}) + "\n")

rows, errors = ms.synth_dataset(manifest, os.path.join(OUT, "masked"), global_seed=99)
for row in rows:
    print(f"identity {row['identity']}: {row['shape']}/{row['coverage']} "
          f"color {tuple(row['color'])} (stream seed {row['seed']})")
print(f"{len(rows)} masked images written, {len(errors)} failures")

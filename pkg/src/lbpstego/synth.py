"""Deterministic synthetic grayscale covers for experiments and tests.

Real photographic test sets cannot ship with the repository, so the
experiment harness renders stand-ins: ``smooth_cover`` gives cloud-like
images with broad plateaus (like portraits or sky), ``textured_cover``
layers strong fine grain on the same base (like fur or foliage).
"""

from __future__ import annotations

import numpy as np

from .image import GrayImage


def _wave_field(shape, rng, n_waves, freq_lo, freq_hi):
    """Sum of randomly oriented cosine waves, roughly unit amplitude."""
    h, w = shape
    rr, cc = np.meshgrid(np.arange(h), np.arange(w), indexing="ij")
    scale = max(h, w)
    out = np.zeros(shape)
    for _ in range(n_waves):
        freq = rng.uniform(freq_lo, freq_hi)
        theta = rng.uniform(0.0, 2.0 * np.pi)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        axis = np.cos(theta) * rr + np.sin(theta) * cc
        out += rng.uniform(0.4, 1.0) * np.cos(2.0 * np.pi * freq * axis / scale + phase)
    return out / np.abs(out).max()


def _blobs(shape, rng, count):
    h, w = shape
    rr, cc = np.meshgrid(np.arange(h), np.arange(w), indexing="ij")
    out = np.zeros(shape)
    for _ in range(count):
        cy, cx = rng.uniform(0, h), rng.uniform(0, w)
        sigma = rng.uniform(0.06, 0.2) * max(h, w)
        amp = rng.uniform(-1.0, 1.0)
        out += amp * np.exp(-((rr - cy) ** 2 + (cc - cx) ** 2) / (2.0 * sigma**2))
    return out


def smooth_cover(shape=(512, 512), seed: int = 0) -> GrayImage:
    """Cloud-like cover: low-frequency waves, a few blobs, faint grain."""
    rng = np.random.default_rng(seed)
    field = 0.7 * _wave_field(shape, rng, n_waves=10, freq_lo=0.8, freq_hi=5.0)
    field += 0.5 * _blobs(shape, rng, count=5)
    field += rng.normal(0.0, 0.012, shape)
    lo, hi = field.min(), field.max()
    scaled = 14.0 + (field - lo) / (hi - lo) * (242.0 - 14.0)
    return GrayImage(np.clip(np.rint(scaled), 0, 255).astype(np.uint8))


def textured_cover(shape=(512, 512), seed: int = 0) -> GrayImage:
    """High-variance cover: a smooth base plus strong fine-grained texture."""
    rng = np.random.default_rng(seed)
    base = 128.0 + 22.0 * _wave_field(shape, rng, n_waves=8, freq_lo=0.8, freq_hi=4.0)
    grain = rng.normal(0.0, 58.0, shape)
    return GrayImage(np.clip(np.rint(base + grain), 0, 255).astype(np.uint8))


def corpus(count: int = 10, shape=(512, 512), seed: int = 0) -> list[GrayImage]:
    """Deterministic mixed corpus: every third image textured, the rest smooth."""
    images = []
    for i in range(count):
        if i % 3 == 2:
            images.append(textured_cover(shape, seed=seed * 1000 + i))
        else:
            images.append(smooth_cover(shape, seed=seed * 1000 + i))
    return images

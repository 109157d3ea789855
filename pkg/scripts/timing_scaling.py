#!/usr/bin/env python3
"""Measure how embedding time scales with cover size.

Full-capacity embeds over square covers, best-of-N timing per size, and a
least-squares fit of time against pixel count:

    python scripts/timing_scaling.py --sizes 256,512,1024 --reps 7
"""

import argparse
import time

import numpy as np

from lbpstego import synth
from lbpstego.codec import StegoParams, embed, max_payload_shape
from lbpstego.image import GrayImage


def best_time(size: int, params: StegoParams, reps: int, rng) -> float:
    cover = synth.smooth_cover((size, size), seed=size)
    rows, cols = max_payload_shape(cover, params)
    payload = GrayImage(rng.integers(0, 256, (rows, cols), dtype=np.uint8))
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        embed(cover, payload, params)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,512,1024")
    parser.add_argument("--reps", type=int, default=7)
    parser.add_argument("--mu", type=int, default=1, choices=(1, 2, 3, 4))
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    params = StegoParams(args.mu)
    rng = np.random.default_rng(0)

    best_time(128, params, 3, rng)  # warmup
    times = [best_time(s, params, args.reps, rng) for s in sizes]

    pixels = np.array([s * s for s in sizes], dtype=float)
    t = np.array(times)
    design = np.vstack([pixels, np.ones_like(pixels)]).T
    coef, *_ = np.linalg.lstsq(design, t, rcond=None)
    predicted = design @ coef
    ss_res = float(((t - predicted) ** 2).sum())
    ss_tot = float(((t - t.mean()) ** 2).sum())
    r2 = 1.0 - ss_res / ss_tot if ss_tot else float("nan")

    print(f"{'size':>6} {'pixels':>9} {'best time':>11} {'ns/pixel':>9}")
    for s, tt in zip(sizes, times):
        print(f"{s:>6} {s * s:>9} {tt * 1000:>9.2f}ms {tt / (s * s) * 1e9:>9.1f}")
    print(f"\nlinear fit: time = {coef[0]:.3e}*pixels + {coef[1]:.3e}, R^2 = {r2:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

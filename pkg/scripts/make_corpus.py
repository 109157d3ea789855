#!/usr/bin/env python3
"""Render a deterministic synthetic cover corpus as PGM files.

The compare CLI wants a directory of covers; this produces one without
shipping photographs in the repo:

    python scripts/make_corpus.py --out-dir corpus --count 10 --size 512
"""

import argparse
from pathlib import Path

from lbpstego import synth
from lbpstego.image import save_pgm


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", required=True, help="directory to fill with .pgm covers")
    parser.add_argument("--count", type=int, default=10)
    parser.add_argument("--size", type=int, default=512)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--kind",
        choices=("mixed", "smooth", "textured"),
        default="mixed",
        help="mixed alternates smooth covers with textured ones",
    )
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    shape = (args.size, args.size)
    for i in range(args.count):
        seed = args.seed * 1000 + i
        if args.kind == "smooth" or (args.kind == "mixed" and i % 3 != 2):
            img = synth.smooth_cover(shape, seed=seed)
            stem = f"smooth{i:02d}"
        else:
            img = synth.textured_cover(shape, seed=seed)
            stem = f"textured{i:02d}"
        save_pgm(out_dir / f"{stem}.pgm", img)
        print(f"wrote {out_dir / f'{stem}.pgm'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

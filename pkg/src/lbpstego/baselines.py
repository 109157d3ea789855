"""Classic LSB-family embedders used as comparison baselines.

Three methods, all traversing pixels row-major:

* ``lsb``   - plain k-bit LSB replacement (k in 1..4), k bits per pixel,
              the first consumed bit landing in the highest replaced position.
* ``lsbm``  - LSB matching: a pixel whose LSB already equals the message bit
              is left alone, otherwise it is nudged +-1 (seeded random
              direction, forced inward at 0 and 255).
* ``lsbmr`` - LSB matching revisited: two message bits per pixel pair
              (b1 = LSB(p1), b2 = LSB(p1 // 2 + p2)); at most one unit of
              change per pixel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage

KINDS = ("lsb", "lsbm", "lsbmr")


@dataclass(frozen=True)
class BaselineMethod:
    """Baseline selector: ``kind`` plus replacement depth ``k`` and RNG ``seed``."""

    kind: str
    k: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown baseline kind {self.kind!r}, expected one of {KINDS}")
        if self.kind == "lsb" and not 1 <= self.k <= 4:
            raise ValueError(f"replacement depth must be in [1, 4], got {self.k}")

    @classmethod
    def lsb_replace(cls, k: int, seed: int = 0) -> "BaselineMethod":
        return cls("lsb", k=k, seed=seed)

    @classmethod
    def lsb_match(cls, seed: int = 0) -> "BaselineMethod":
        return cls("lsbm", seed=seed)

    @classmethod
    def lsbmr(cls, seed: int = 0) -> "BaselineMethod":
        return cls("lsbmr", seed=seed)

    def capacity_bits(self, cover: GrayImage) -> int:
        n = cover.width * cover.height
        if self.kind == "lsb":
            return self.k * n
        if self.kind == "lsbm":
            return n
        return 2 * (n // 2)  # pairs only; a trailing odd pixel stays unused


def baseline_embed(cover: GrayImage, bits, method: BaselineMethod) -> GrayImage:
    """Embed a 0/1 bit sequence; deterministic for a fixed method seed."""
    bits = np.asarray(bits, dtype=np.uint8).reshape(-1)
    if bits.size and bits.max() > 1:
        raise ValueError("bits must be 0 or 1")
    cap = method.capacity_bits(cover)
    if bits.size > cap:
        raise ValueError(f"{bits.size} bits exceed the {cap}-bit capacity")
    flat = cover.pixels.reshape(-1).astype(np.int32)
    if method.kind == "lsb":
        out = _embed_replace(flat, bits, method.k)
    elif method.kind == "lsbm":
        out = _embed_match(flat, bits, method.seed)
    else:
        out = _embed_pairs(flat, bits, method.seed)
    return GrayImage(out.astype(np.uint8).reshape(cover.pixels.shape))


def baseline_extract(stego: GrayImage, bit_count: int, method: BaselineMethod) -> np.ndarray:
    """Read back ``bit_count`` bits as a uint8 0/1 array."""
    if bit_count < 0 or bit_count > method.capacity_bits(stego):
        raise ValueError(f"bit_count {bit_count} exceeds capacity")
    flat = stego.pixels.reshape(-1).astype(np.int32)
    if method.kind == "lsb":
        return _extract_replace(flat, bit_count, method.k)
    if method.kind == "lsbm":
        return (flat[:bit_count] & 1).astype(np.uint8)
    return _extract_pairs(flat, bit_count)


def _embed_replace(flat: np.ndarray, bits: np.ndarray, k: int) -> np.ndarray:
    out = flat.copy()
    full, rem = divmod(bits.size, k)
    if full:
        chunks = bits[: full * k].reshape(full, k).astype(np.int32)
        weights = 1 << (k - 1 - np.arange(k))
        out[:full] = (out[:full] & ~((1 << k) - 1)) | (chunks * weights).sum(axis=1)
    for j in range(rem):  # a partial chunk takes the highest replaced positions
        pos = k - 1 - j
        out[full] = (out[full] & ~(1 << pos)) | (int(bits[full * k + j]) << pos)
    return out


def _extract_replace(flat: np.ndarray, count: int, k: int) -> np.ndarray:
    if count == 0:
        return np.empty(0, dtype=np.uint8)
    n_pixels = -(-count // k)
    shifts = k - 1 - np.arange(k)
    bits = ((flat[:n_pixels, None] >> shifts) & 1).reshape(-1)
    return bits[:count].astype(np.uint8)


def _embed_match(flat: np.ndarray, bits: np.ndarray, seed: int) -> np.ndarray:
    out = flat.copy()
    n = bits.size
    if n == 0:
        return out
    cur = out[:n]
    rng = np.random.default_rng(seed)
    delta = np.where(rng.integers(0, 2, size=n) == 1, 1, -1)
    delta = np.where(cur == 0, 1, np.where(cur == 255, -1, delta))
    out[:n] = np.where((cur & 1) != bits, cur + delta, cur)
    return out


def _inward_step(value: int, rng: np.random.Generator) -> int:
    if value == 0:
        return 1
    if value == 255:
        return -1
    return 1 if rng.integers(0, 2) == 1 else -1


def _embed_pairs(flat: np.ndarray, bits: np.ndarray, seed: int) -> np.ndarray:
    out = flat.copy()
    if bits.size == 0:
        return out
    rng = np.random.default_rng(seed)
    padded = bits if bits.size % 2 == 0 else np.append(bits, np.uint8(0))
    for i in range(padded.size // 2):
        b1, b2 = int(padded[2 * i]), int(padded[2 * i + 1])
        p = 2 * i
        x1, x2 = int(out[p]), int(out[p + 1])
        if b1 == (x1 & 1):
            if b2 != ((x1 // 2 + x2) & 1):
                x2 += _inward_step(x2, rng)
        else:
            x1n = x1 - 1 if b2 == (((x1 - 1) // 2 + x2) & 1) else x1 + 1
            if not 0 <= x1n <= 255:
                # Forced inward; repair the pair bit through x2 if that broke it.
                x1n = 1 if x1n < 0 else 254
                if b2 != ((x1n // 2 + x2) & 1):
                    x2 += _inward_step(x2, rng)
            x1 = x1n
        out[p], out[p + 1] = x1, x2
    return out


def _extract_pairs(flat: np.ndarray, count: int) -> np.ndarray:
    bits = np.empty(count, dtype=np.uint8)
    for i in range(0, count, 2):
        x1, x2 = int(flat[i]), int(flat[i + 1])
        bits[i] = x1 & 1
        if i + 1 < count:
            bits[i + 1] = (x1 // 2 + x2) & 1
    return bits

"""Blind image-in-image steganography that preserves local binary patterns.

The cover is tiled into non-overlapping 3x3 blocks. Each block's center
(reference pixel) is never modified; the block's 8-bit pattern of
center-vs-neighbor comparisons is XORed into the payload bytes, the result
is pair-shuffled, and the bits are spread over the 8 ring neighbors' low
bits. A final +-2**mu correction restores any comparison the substitution
flipped, so the extractor can recompute the exact same pattern from the
stego image alone and undo the masking without ever seeing the cover.

A 4-byte size header (payload rows then cols, big-endian 16-bit each) is
framed in front of the payload so arbitrary payload dimensions survive
blind extraction; ``mu`` acts as the shared stego key.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .image import GrayImage
from .lbp import lbp_codes

HEADER_BYTES = 4
MAX_PAYLOAD_SIDE = 0xFFFF

# Positions of the ring neighbors inside a 3x3 block, in NEIGHBOR_OFFSETS
# order (right, then counterclockwise).
_RING_ROWS = np.array([1, 0, 0, 0, 1, 2, 2, 2])
_RING_COLS = np.array([2, 2, 1, 0, 0, 0, 1, 2])

_PAIR_LO = 0b01010101
_PAIR_HI = 0b10101010


class CapacityError(ValueError):
    """Payload (plus header) does not fit in the cover."""


class CoverTooSmallError(ValueError):
    """Cover has no complete 3x3 block."""


class CorruptStreamError(ValueError):
    """Stego stream does not parse as header + payload (wrong mu, or not a stego)."""


@dataclass(frozen=True)
class StegoParams:
    """Embedding strength: ``mu`` payload bits per carrier neighbor, 1..4."""

    mu: int = 1

    def __post_init__(self):
        if not isinstance(self.mu, int) or not 1 <= self.mu <= 4:
            raise ValueError(f"mu must be an integer in [1, 4], got {self.mu!r}")

    @property
    def lsb_mask(self) -> int:
        return (1 << self.mu) - 1

    @property
    def step(self) -> int:
        return 1 << self.mu

    @property
    def clamp_lo(self) -> int:
        return 1 << self.mu

    @property
    def clamp_hi(self) -> int:
        return 255 - (1 << self.mu)


@dataclass(frozen=True)
class BlockGrid:
    """Row-major tiling into complete 3x3 blocks; leftover strips stay unused."""

    block_rows: int
    block_cols: int

    @classmethod
    def for_image(cls, image: GrayImage) -> "BlockGrid":
        return cls(image.height // 3, image.width // 3)

    @property
    def n_blocks(self) -> int:
        return self.block_rows * self.block_cols

    def reference(self, k: int, l: int) -> tuple[int, int]:
        """Image coordinates of block (k, l)'s reference (center) pixel."""
        return 3 * k + 1, 3 * l + 1


def mask_byte(lbp: int, value: int) -> int:
    """XOR a stream byte with a block pattern; self-inverse."""
    return lbp ^ value


def shuffle_byte(value):
    """Swap the two bits inside each of the four adjacent bit pairs.

    Works on ints and uint8 arrays; applying it twice is the identity.
    """
    return ((value & _PAIR_LO) << 1) | ((value & _PAIR_HI) >> 1)


def unshuffle_byte(value):
    """Inverse pair swap (the permutation is its own inverse)."""
    return shuffle_byte(value)


def sync_neighbor(center, cover_value, stego_value, mu: int):
    """Restore the cover's >=/< order between center and a substituted neighbor.

    If writing the low bits flipped the comparison, step the stego value by
    +-2**mu (which cannot disturb its ``mu`` low bits); otherwise return it
    unchanged. Works elementwise on arrays.
    """
    step = 1 << mu
    was_ge = np.greater_equal(center, cover_value)
    now_ge = np.greater_equal(center, stego_value)
    adjusted = np.where(
        was_ge & ~now_ge,
        stego_value - step,
        np.where(~was_ge & now_ge, stego_value + step, stego_value),
    )
    if np.ndim(adjusted) == 0:
        return int(adjusted)
    return adjusted


def _block_stack(pixels: np.ndarray, grid: BlockGrid) -> np.ndarray:
    """Copy the complete 3x3 tiles into a (n_blocks, 3, 3) row-major stack."""
    h, w = 3 * grid.block_rows, 3 * grid.block_cols
    tiles = pixels[:h, :w].reshape(grid.block_rows, 3, grid.block_cols, 3)
    return tiles.swapaxes(1, 2).reshape(grid.n_blocks, 3, 3).copy()


def _write_blocks(pixels: np.ndarray, grid: BlockGrid, blocks: np.ndarray) -> None:
    """Scatter a (n_blocks, 3, 3) stack back over the tiled region in place."""
    h, w = 3 * grid.block_rows, 3 * grid.block_cols
    tiles = blocks.reshape(grid.block_rows, grid.block_cols, 3, 3).swapaxes(1, 2)
    pixels[:h, :w] = tiles.reshape(h, w)


def capacity(cover: GrayImage, params: StegoParams) -> int:
    """Total stream bytes the cover can carry (the 4-byte header included)."""
    return BlockGrid.for_image(cover).n_blocks * params.mu


def max_payload_bytes(cover: GrayImage, params: StegoParams) -> int:
    """Usable payload bytes once the size header is paid for."""
    return max(0, capacity(cover, params) - HEADER_BYTES)


def max_payload_shape(cover: GrayImage, params: StegoParams) -> tuple[int, int]:
    """Largest (rows, cols) payload shape that fits, cols capped at 65535.

    Within rows - 1 bytes of the true byte capacity (exact when divisible).
    """
    budget = max_payload_bytes(cover, params)
    if budget == 0:
        raise CapacityError("cover cannot carry any payload")
    rows = -(-budget // MAX_PAYLOAD_SIDE)
    return rows, budget // rows


def clamp_cover(
    cover: GrayImage, grid: BlockGrid, used_blocks: int, params: StegoParams
) -> GrayImage:
    """Pull carrier neighbors of the first ``used_blocks`` blocks into
    ``[2**mu, 255 - 2**mu]``.

    This guarantees the later order-restoring step can never leave byte
    range. Reference pixels and unused blocks are untouched.
    """
    if used_blocks > grid.n_blocks:
        raise ValueError(f"{used_blocks} blocks requested, grid holds {grid.n_blocks}")
    if used_blocks <= 0:
        return cover
    out = cover.pixels.copy()
    blocks = _block_stack(out, grid)
    used = blocks[:used_blocks]
    centers = used[:, 1, 1].copy()
    np.clip(used, params.clamp_lo, params.clamp_hi, out=used)
    used[:, 1, 1] = centers
    _write_blocks(out, grid, blocks)
    return GrayImage(out)


def embed_block(block, payload_bytes, params: StegoParams) -> np.ndarray:
    """Embed ``mu`` stream bytes into one pre-clamped 3x3 block.

    Reference implementation for a single block: the center is copied
    through; each byte is XOR-masked with the block's pattern and
    pair-shuffled, then ring neighbor ``q`` receives bit ``7 - q`` of every
    shuffled byte in its low bits (first byte highest) and is order-synced
    against the center. Returns the 3x3 stego block as uint8.
    """
    mu = params.mu
    b = np.asarray(block, dtype=np.int64)
    if b.shape != (3, 3):
        raise ValueError(f"block must be 3x3, got shape {b.shape}")
    data = [int(v) for v in payload_bytes]
    if len(data) != mu:
        raise ValueError(f"mu={mu} blocks carry exactly {mu} bytes, got {len(data)}")
    if any(not 0 <= v <= 255 for v in data):
        raise ValueError("payload bytes must lie in [0, 255]")
    ring = b[_RING_ROWS, _RING_COLS]
    if ring.min() < params.clamp_lo or ring.max() > params.clamp_hi:
        raise ValueError("block neighbors must be clamped before embedding")
    center = int(b[1, 1])
    code = int(lbp_codes(np.array([center]), ring[None, :])[0])
    shuffled = [shuffle_byte(mask_byte(code, v)) for v in data]
    out = b.copy()
    for q in range(8):
        inserted = 0
        for t, y in enumerate(shuffled):
            inserted |= ((y >> (7 - q)) & 1) << (mu - 1 - t)
        candidate = (int(ring[q]) & ~params.lsb_mask) | inserted
        out[_RING_ROWS[q], _RING_COLS[q]] = sync_neighbor(center, int(ring[q]), candidate, mu)
    return out.astype(np.uint8)


def _frame(payload: GrayImage) -> bytes:
    return (
        payload.height.to_bytes(2, "big")
        + payload.width.to_bytes(2, "big")
        + payload.pixels.tobytes()
    )


def embed(cover: GrayImage, payload: GrayImage, params: StegoParams) -> GrayImage:
    """Hide ``payload`` inside ``cover``, returning the stego image.

    Blocks beyond the consumed stream are byte-identical to the cover;
    :func:`extract` with the same ``params`` recovers the payload exactly.
    """
    grid = BlockGrid.for_image(cover)
    if grid.n_blocks == 0:
        raise CoverTooSmallError(
            f"{cover.height}x{cover.width} cover has no complete 3x3 block"
        )
    if payload.height > MAX_PAYLOAD_SIDE or payload.width > MAX_PAYLOAD_SIDE:
        raise CapacityError(f"payload dimensions exceed {MAX_PAYLOAD_SIDE}")
    stream = _frame(payload)
    cap = capacity(cover, params)
    if len(stream) > cap:
        raise CapacityError(
            f"stream needs {len(stream)} bytes, cover holds {cap} at mu={params.mu}"
        )
    mu = params.mu
    used_blocks = -(-len(stream) // mu)
    padded = stream + b"\x00" * (used_blocks * mu - len(stream))

    clamped = clamp_cover(cover, grid, used_blocks, params)
    out = clamped.pixels.copy()
    stack = _block_stack(out, grid)
    used = stack[:used_blocks].astype(np.int32)

    centers = used[:, 1, 1]
    ring = used[:, _RING_ROWS, _RING_COLS]
    codes = lbp_codes(centers, ring)
    data = np.frombuffer(padded, dtype=np.uint8).reshape(used_blocks, mu)
    shuffled = shuffle_byte(codes[:, None] ^ data)
    weights = (1 << (mu - 1 - np.arange(mu))).astype(np.int32)

    stego_ring = ring.copy()
    for q in range(8):
        bits = ((shuffled >> (7 - q)) & 1).astype(np.int32)
        inserted = (bits * weights).sum(axis=1)
        candidate = (ring[:, q] & ~params.lsb_mask) | inserted
        stego_ring[:, q] = sync_neighbor(centers, ring[:, q], candidate, mu)

    used[:, _RING_ROWS, _RING_COLS] = stego_ring
    stack[:used_blocks] = used.astype(np.uint8)
    _write_blocks(out, grid, stack)
    return GrayImage(out)


def _decode_stream(stack: np.ndarray, mu: int) -> np.ndarray:
    """Recover stream bytes from an int (n, 3, 3) block stack."""
    centers = stack[:, 1, 1]
    ring = stack[:, _RING_ROWS, _RING_COLS]
    codes = lbp_codes(centers, ring)
    low = (ring & ((1 << mu) - 1)).astype(np.uint8)
    out = np.empty((len(stack), mu), dtype=np.uint8)
    ring_weights = 1 << (7 - np.arange(8))
    for t in range(mu):
        bit_t = (low >> (mu - 1 - t)) & 1
        y = (bit_t * ring_weights).sum(axis=1).astype(np.uint8)
        out[:, t] = unshuffle_byte(y) ^ codes
    return out.reshape(-1)


def extract(stego: GrayImage, params: StegoParams) -> GrayImage:
    """Blindly recover the embedded payload; needs only the stego and ``mu``."""
    grid = BlockGrid.for_image(stego)
    mu = params.mu
    cap = grid.n_blocks * mu
    if cap < HEADER_BYTES:
        raise CorruptStreamError(
            f"image holds only {cap} stream bytes, no room for a size header"
        )
    stack = _block_stack(stego.pixels, grid).astype(np.int32)
    header_blocks = -(-HEADER_BYTES // mu)
    head = _decode_stream(stack[:header_blocks], mu)[:HEADER_BYTES]
    rows = int(head[0]) << 8 | int(head[1])
    cols = int(head[2]) << 8 | int(head[3])
    if rows == 0 or cols == 0:
        raise CorruptStreamError(f"header announces a {rows}x{cols} payload")
    needed = HEADER_BYTES + rows * cols
    if needed > cap:
        raise CorruptStreamError(f"header announces {needed} stream bytes, image holds {cap}")
    used_blocks = -(-needed // mu)
    stream = _decode_stream(stack[:used_blocks], mu)
    return GrayImage(stream[HEADER_BYTES:needed].reshape(rows, cols))

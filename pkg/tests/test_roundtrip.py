"""Property tests for the codec's central contracts: exact round trips,
pattern preservation, center fixity, bounded distortion, untouched tails."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from lbpstego.codec import (
    HEADER_BYTES,
    BlockGrid,
    StegoParams,
    capacity,
    clamp_cover,
    embed,
    embed_block,
    extract,
    _frame,
)
from lbpstego.image import GrayImage
from lbpstego.lbp import lbp_code


@st.composite
def embed_cases(draw):
    mu = draw(st.integers(1, 4))
    height = draw(st.integers(3, 21))
    width = draw(st.integers(3, 21))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    cover = GrayImage(rng.integers(0, 256, (height, width), dtype=np.uint8))
    cap = capacity(cover, StegoParams(mu))
    if cap <= HEADER_BYTES:
        payload_len = 0
    else:
        payload_len = draw(st.integers(1, cap - HEADER_BYTES))
    payload = (
        GrayImage(rng.integers(0, 256, (1, payload_len), dtype=np.uint8))
        if payload_len
        else None
    )
    return cover, payload, mu


@settings(max_examples=50, deadline=None)
@given(embed_cases())
def test_round_trip_is_exact(case):
    cover, payload, mu = case
    if payload is None:
        return
    params = StegoParams(mu)
    assert extract(embed(cover, payload, params), params) == payload


@settings(max_examples=50, deadline=None)
@given(embed_cases())
def test_structure_preservation(case):
    cover, payload, mu = case
    if payload is None:
        return
    params = StegoParams(mu)
    stego = embed(cover, payload, params)
    grid = BlockGrid.for_image(cover)
    used = -(-(HEADER_BYTES + payload.width * payload.height) // mu)
    clamped = clamp_cover(cover, grid, used, params)

    diff = np.abs(stego.pixels.astype(int) - clamped.pixels.astype(int))
    assert diff.max() <= 2 ** (mu + 1) - 1

    for b in range(used):
        k, l = divmod(b, grid.block_cols)
        r, c = grid.reference(k, l)
        assert stego.pixels[r, c] == clamped.pixels[r, c]
        assert lbp_code(stego, r, c) == lbp_code(clamped, r, c)

    # everything past the consumed stream is byte-identical to the cover
    touched = np.zeros(cover.pixels.shape, dtype=bool)
    for b in range(used):
        k, l = divmod(b, grid.block_cols)
        touched[3 * k : 3 * k + 3, 3 * l : 3 * l + 3] = True
    assert np.array_equal(stego.pixels[~touched], cover.pixels[~touched])


@settings(max_examples=25, deadline=None)
@given(embed_cases())
def test_vectorized_embed_matches_block_reference(case):
    """The fast path must agree with the per-block reference implementation."""
    cover, payload, mu = case
    if payload is None:
        return
    params = StegoParams(mu)
    stego = embed(cover, payload, params)
    grid = BlockGrid.for_image(cover)
    stream = _frame(payload)
    used = -(-len(stream) // mu)
    stream += b"\x00" * (used * mu - len(stream))
    clamped = clamp_cover(cover, grid, used, params)
    for b in range(used):
        k, l = divmod(b, grid.block_cols)
        r, c = grid.reference(k, l)
        block = clamped.pixels[r - 1 : r + 2, c - 1 : c + 2]
        expect = embed_block(block, stream[b * mu : (b + 1) * mu], params)
        assert np.array_equal(expect, stego.pixels[r - 1 : r + 2, c - 1 : c + 2])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_overall_distortion_bound(seed, mu):
    """|stego - original cover| <= (2**(mu+1) - 1) + 2**mu (clamp shift included)."""
    rng = np.random.default_rng(seed)
    cover = GrayImage(rng.integers(0, 256, (18, 18), dtype=np.uint8))
    params = StegoParams(mu)
    budget = capacity(cover, params) - HEADER_BYTES
    payload = GrayImage(rng.integers(0, 256, (1, budget), dtype=np.uint8))
    stego = embed(cover, payload, params)
    diff = np.abs(stego.pixels.astype(int) - cover.pixels.astype(int))
    assert diff.max() <= (2 ** (mu + 1) - 1) + 2**mu

import numpy as np
import pytest

from lbpstego import synth
from lbpstego.image import GrayImage

CORPUS_SIZE = (512, 512)


@pytest.fixture(scope="session")
def corpus10():
    """10 named synthetic covers, mixed smooth/textured, 512x512."""
    return [(f"cover{i:02d}", img) for i, img in enumerate(synth.corpus(10, CORPUS_SIZE, seed=0))]


@pytest.fixture(scope="session")
def textured512():
    return synth.textured_cover(CORPUS_SIZE, seed=2002)


@pytest.fixture(scope="session")
def smooth512():
    return synth.smooth_cover(CORPUS_SIZE, seed=2001)


def rand_image(rng, height, width):
    return GrayImage(rng.integers(0, 256, (height, width), dtype=np.uint8))

import numpy as np
import pytest


def smooth_noise_image(height: int, width: int, seed: int, octaves: int = 3) -> np.ndarray:
    """Deterministic structured RGB test image in [0, 1], float32.

    Sum of upsampled random grids: enough large-scale variation that
    different template patches are actually distinguishable.
    """
    rng = np.random.default_rng(seed)
    img = np.zeros((height, width, 3), dtype=np.float64)
    for o in range(octaves):
        cells = 2 ** (o + 2)
        coarse = rng.random((cells, cells, 3))
        reps_y = -(-height // cells)
        reps_x = -(-width // cells)
        up = np.repeat(np.repeat(coarse, reps_y, axis=0), reps_x, axis=1)
        img += up[:height, :width] / (o + 1)
    img -= img.min()
    img /= img.max()
    return img.astype(np.float32)


@pytest.fixture(scope="session")
def exemplar_128() -> np.ndarray:
    return smooth_noise_image(128, 128, seed=711)


@pytest.fixture(scope="session")
def exemplar_192() -> np.ndarray:
    return smooth_noise_image(192, 192, seed=2024)

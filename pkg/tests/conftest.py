import numpy as np
import pytest

from jensen_sharp.cli import reference_sample


@pytest.fixture(scope="session")
def pinned_sample() -> np.ndarray:
    """The checked-in 100-point uniform(10, 100) reference sample."""
    return reference_sample()

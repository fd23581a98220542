import numpy as np
import pytest

from lcms import dmp
from lcms.simulator.arm import default_arm


@pytest.fixture(scope="session")
def arm():
    return default_arm()


@pytest.fixture(scope="session")
def dmp_config():
    return dmp.DmpConfig()


@pytest.fixture(scope="session")
def basis(dmp_config):
    return dmp.build_basis(dmp_config)


def min_jerk_demo(y0: np.ndarray, g: np.ndarray, config: dmp.DmpConfig) -> dmp.Trajectory:
    """Minimum-jerk interpolation demo, the planner's trajectory family."""
    y0 = np.atleast_1d(np.asarray(y0, dtype=float))
    g = np.atleast_1d(np.asarray(g, dtype=float))
    s = np.linspace(0.0, 1.0, config.n_frames)
    blend = 10 * s**3 - 15 * s**4 + 6 * s**5
    frames = y0[None, :] + blend[:, None] * (g - y0)[None, :]
    return dmp.Trajectory(frames=frames, dt=config.dt_out)

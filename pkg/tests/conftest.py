import mpmath as mp
import numpy as np
import pytest

mp.mp.dps = 30


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260809)


def mp_loggamma(z: complex) -> complex:
    return complex(mp.loggamma(mp.mpc(z)))


def mp_log_barnes_g(z: complex) -> complex:
    """Holomorphic branch of log G (Barnes) for Re z > 0 via mpmath.barnesg on
    the real axis and the functional equation; test usage keeps arguments real."""
    return complex(mp.log(mp.barnesg(mp.mpf(z))))


@pytest.fixture(scope="session")
def cut_plane_sample(rng):
    out = []
    while len(out) < 300:
        z = complex(rng.uniform(-18, 18), rng.uniform(-18, 18))
        if abs(z) > 20 or (abs(z.imag) < 1e-2 and z.real < 0.5):
            continue
        if abs(z.imag) < 1e-2 and abs(z.real - round(z.real)) < 1e-2:
            continue
        out.append(z)
    return np.array(out)

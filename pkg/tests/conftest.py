import math

import numpy as np
import pytest

from diskjet import BlaschkeSpec, Jet3


def rng(seed=0):
    return np.random.default_rng(seed)


def random_complex(gen, scale=1.0):
    return complex(gen.normal(scale=scale), gen.normal(scale=scale))


def random_disk_point(gen, cap=0.95):
    # radius^2 uniform -> area uniform
    rad = cap * math.sqrt(gen.uniform())
    ang = gen.uniform(0.0, 2.0 * math.pi)
    return complex(rad * math.cos(ang), rad * math.sin(ang))


def random_jet(gen, scale=1.0):
    return Jet3(*(random_complex(gen, scale) for _ in range(4)))


def random_blaschke(gen, degree):
    zeros = tuple(random_disk_point(gen) for _ in range(degree))
    return BlaschkeSpec(phase=float(gen.uniform(0.0, 2.0 * math.pi)), zeros=zeros)


@pytest.fixture
def gen():
    return rng(7)

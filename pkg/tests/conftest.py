import random

import pytest

from ctcsidh import _backend
from ctcsidh.fp import Fp
from ctcsidh.montgomery import curve_from_affine
from ctcsidh.params import load_parameter_set


@pytest.fixture(scope="session")
def toy():
    return load_parameter_set("toy-419")


@pytest.fixture(scope="session")
def csidh512():
    return load_parameter_set("csidh-512")


@pytest.fixture
def toy_ctx(toy):
    return Fp(toy.p)


@pytest.fixture
def rnd():
    return random.Random(20191014)


@pytest.fixture(params=_backend.available())
def backend(request):
    with _backend.using(request.param):
        yield request.param


# Supersingular toy curves reachable from A = 0; the oracle tests confirm each
# has 420 points.
TOY_CURVES = (0, 158, 199, 75, 261, 220, 344, 410, 390, 15)


@pytest.fixture(params=TOY_CURVES)
def toy_curve(request, toy):
    ctx = Fp(toy.p)
    return request.param, curve_from_affine(request.param, ctx)

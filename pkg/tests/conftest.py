import random

import pytest

from fkit import composition as comp
from fkit.fields import QQ, PrimeField

ALL_TAGS = (
    ("unarion", ()),
    ("binarion-split", ()),
    ("binarion-quadratic", (2,)),
    ("quaternion", (1, 1)),
    ("matrix2x2", ()),
    ("octonion", (1, 1, 1)),
    ("octonion-split", ()),
)


@pytest.fixture(scope="session")
def f5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture
def rng():
    return random.Random(0)


def algebras(field, dims=None):
    out = []
    for tag, params in ALL_TAGS:
        A = comp.construct(tag, params, field)
        if dims is None or A.dim in dims:
            out.append(A)
    return out


@pytest.fixture(params=[t for t, _ in ALL_TAGS])
def algebra_q(request):
    params = dict(ALL_TAGS)[request.param]
    return comp.construct(request.param, params, QQ)


@pytest.fixture(params=[t for t, _ in ALL_TAGS])
def algebra_f5(request, f5):
    params = dict(ALL_TAGS)[request.param]
    return comp.construct(request.param, params, f5)

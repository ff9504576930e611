import numpy as np
import pytest

from s4bell import OrbitPair, standard_context, tables


@pytest.fixture(scope="session")
def ctx():
    return standard_context()


@pytest.fixture(scope="session")
def group(ctx):
    return ctx.group


@pytest.fixture(scope="session")
def rep(ctx):
    return ctx.rep


@pytest.fixture(scope="session")
def product(ctx):
    return ctx.product


@pytest.fixture(scope="session")
def decomposition(ctx):
    return ctx.decomposition


@pytest.fixture(scope="session")
def orbit(ctx):
    return ctx.orbit


@pytest.fixture(scope="session")
def case_pairs():
    return {
        name: tuple(OrbitPair(*p) for p in tables.CASE_PAIRS[name])
        for name in tables.CASE_NAMES
    }


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


def random_unit(rng, dim=3):
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)

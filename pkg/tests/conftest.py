# -*- coding: utf-8 -*-
"""
    Shared fixtures for the aluffi_kit test suite.
"""
import random

import pytest

from aluffi_kit.polynomials import PolynomialRing
from aluffi_kit.settings import settings


@pytest.fixture(autouse=True)
def restore_settings(monkeypatch):
    # commands and workers write limits into the shared settings object
    for name in ("limit_pairs", "limit_terms", "jobs"):
        monkeypatch.setattr(settings, name, getattr(settings, name))
    yield


@pytest.fixture
def plane():
    return PolynomialRing.from_names("x,y")


@pytest.fixture
def projective_plane():
    return PolynomialRing.from_names("x,y,z")


@pytest.fixture
def space():
    return PolynomialRing.from_names("x,y,z,w")


@pytest.fixture
def rng():
    return random.Random(20261018)


def random_polynomial(ring, rng, terms=4, degree=4, bound=5):
    """Sparse random polynomial with integer coefficients."""
    coefficients = {}
    for _ in range(terms):
        exponents = [0] * ring.nvars
        for _ in range(rng.randint(0, degree)):
            exponents[rng.randrange(ring.nvars)] += 1
        coefficients[tuple(exponents)] = rng.randint(-bound, bound)
    return ring.from_terms({m: c for m, c in coefficients.items() if c})

"""Shared fixtures: the built-in diagrams, their projector systems and the catalogs"""

import pytest

from ksforge import fixtures
from ksforge.bases import derive_system
from ksforge.catalog import build_catalog


@pytest.fixture(scope='session')
def pentagram():
    return fixtures.load('pentagram')


@pytest.fixture(scope='session')
def square2():
    return fixtures.load('square2')


@pytest.fixture(scope='session')
def square3():
    return fixtures.load('square3')


@pytest.fixture(scope='session')
def kite():
    return fixtures.load('kite')


@pytest.fixture(scope='session')
def pentagram_system(pentagram):
    return derive_system(pentagram)


@pytest.fixture(scope='session')
def square2_system(square2):
    return derive_system(square2)


@pytest.fixture(scope='session')
def square3_system(square3):
    return derive_system(square3)


@pytest.fixture(scope='session')
def kite_system(kite):
    return derive_system(kite)


@pytest.fixture(scope='session')
def catalog2():
    return build_catalog(2)


@pytest.fixture(scope='session')
def catalog3():
    return build_catalog(3)

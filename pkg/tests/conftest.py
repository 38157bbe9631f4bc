import pytest

from quadlie import catalog


@pytest.fixture(scope="session")
def nilpotent_entries():
    return {name: catalog.nilpotent(name) for name in catalog.NILPOTENT_NAMES}


@pytest.fixture(scope="session")
def ideal_entries():
    return {name: catalog.classification_ideal(name) for name in catalog.IDEAL_NAMES}


@pytest.fixture(scope="session")
def extensions():
    names = list(catalog.EXTENSION_NAMES) + ["L1(2)"]
    return {name: catalog.extended(name) for name in names}

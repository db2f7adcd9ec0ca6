import pytest

from lattice_forge import catalog, corpus


def acceptance_random_sizes():
    """The 500 seeded random lattices: seeds 1..500, sizes cycling 9..24."""
    return [(9 + (seed - 1) % 16, seed) for seed in range(1, 501)]


@pytest.fixture(scope="session")
def enumerated_to_8():
    return list(corpus.enumerate_small(8))


@pytest.fixture(scope="session")
def random_corpus():
    return [corpus.random_lattice(size, seed) for size, seed in acceptance_random_sizes()]


@pytest.fixture(scope="session")
def catalog_lattices():
    return catalog.all_lattices()


@pytest.fixture(scope="session")
def full_corpus(enumerated_to_8, random_corpus, catalog_lattices):
    return enumerated_to_8 + random_corpus + list(catalog_lattices.values())


@pytest.fixture(scope="session")
def catalog_semigroups():
    return catalog.all_semigroups()

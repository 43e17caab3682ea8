from pathlib import Path

import pytest

from posetrank.core.poset import Poset, build_poset
from posetrank.core.ranks import RankTable, standard_interval_rank
from posetrank.generators import boolean_lattice_edges, chain_edges, ex9_edges, n5_edges, two_element_edges

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def ex9() -> Poset:
    return build_poset(ex9_edges())


@pytest.fixture
def ex9_ranks(ex9: Poset) -> RankTable:
    return standard_interval_rank(ex9)


@pytest.fixture
def n5() -> Poset:
    return build_poset(n5_edges())


@pytest.fixture
def b3() -> Poset:
    return build_poset(boolean_lattice_edges(3))


@pytest.fixture
def chain5() -> Poset:
    return build_poset(chain_edges(5))


@pytest.fixture
def two_element() -> Poset:
    return build_poset(two_element_edges())

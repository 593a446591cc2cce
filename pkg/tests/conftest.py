from pathlib import Path

import pytest

from nmv_workbench.services.algebra_file import load_algebra_file, load_structure
from nmv_workbench.services.catalog import boolean_algebra, bowtie_algebra, lukasiewicz_chain, lukasiewicz_poset

ALGEBRAS_DIR = Path(__file__).resolve().parent.parent / "algebras"


@pytest.fixture
def algebras_dir() -> Path:
    return ALGEBRAS_DIR


@pytest.fixture
def fixture_path():
    def path(name: str) -> str:
        return str(ALGEBRAS_DIR / name)
    return path


@pytest.fixture
def load_fixture():
    def load(name: str):
        return load_structure(load_algebra_file(str(ALGEBRAS_DIR / name)))
    return load


@pytest.fixture(scope="session")
def bowtie():
    return bowtie_algebra()


@pytest.fixture(scope="session")
def boolean():
    return boolean_algebra()


@pytest.fixture(scope="session")
def chain3():
    return lukasiewicz_chain(3)


@pytest.fixture(scope="session")
def poset3():
    return lukasiewicz_poset(3)

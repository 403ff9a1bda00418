from pathlib import Path

import pytest

from configs.settings import DATA_DIR
from src.permgrp.gens_format import load_gens
from src.permgrp.stabilizer_chain import build_chain
from src.tables.ct_format import load_fusion, load_table


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


def _chain(name: str):
    degree, gens = load_gens(DATA_DIR / name)
    return build_chain(gens, degree)


# -------------------------
# Tables
# -------------------------
@pytest.fixture(scope="session")
def s3_table():
    return load_table(DATA_DIR / "s3.ct")


@pytest.fixture(scope="session")
def a5_table():
    return load_table(DATA_DIR / "a5.ct")


@pytest.fixture(scope="session")
def c3_table():
    return load_table(DATA_DIR / "c3.ct")


@pytest.fixture(scope="session")
def c9_table():
    return load_table(DATA_DIR / "c9.ct")


@pytest.fixture(scope="session")
def d18_table():
    return load_table(DATA_DIR / "d18.ct")


@pytest.fixture(scope="session")
def psl28_table():
    return load_table(DATA_DIR / "psl28.ct")


@pytest.fixture(scope="session")
def th_partial():
    return load_table(DATA_DIR / "th_partial.ct")


@pytest.fixture(scope="session")
def th_full():
    return load_table(DATA_DIR / "th.ct")


@pytest.fixture(scope="session")
def c9_d18_fusion(c9_table, d18_table):
    return load_fusion(DATA_DIR / "c9_d18.fus", c9_table, d18_table)


# -------------------------
# Permutation groups
# -------------------------
@pytest.fixture(scope="session")
def s3_chain():
    return _chain("s3.gens")


@pytest.fixture(scope="session")
def a5_chain():
    return _chain("a5.gens")


@pytest.fixture(scope="session")
def d18_chain():
    return _chain("d18.gens")


@pytest.fixture(scope="session")
def c9xc3_chain():
    return _chain("c9xc3.gens")


@pytest.fixture(scope="session")
def psl28_chain():
    return _chain("psl28.gens")


@pytest.fixture(scope="session")
def psu38_chain():
    return _chain("psu38.gens")

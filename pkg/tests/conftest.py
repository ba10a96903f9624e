import pytest

from holonet.catalogs import catalog, inclusion_table
from holonet.level_one import level_one_datum
from holonet.modular import sun_datum

WZW_CASES = [(2, 10), (10, 2), (9, 3), (8, 4), (4, 8), (3, 9)]
LEVEL_ONE_KINDS = ["su2_1", "su3_1", "su5_1", "spin5_1", "spin7_1", "spin20_1", "e6_1"]


@pytest.fixture(scope="session")
def wzw_data():
    return {pair: sun_datum(*pair) for pair in WZW_CASES}


@pytest.fixture(scope="session")
def level_one_data():
    return {kind: level_one_datum(kind) for kind in LEVEL_ONE_KINDS}


@pytest.fixture(scope="session")
def catalogs():
    return {name: catalog(name) for name in ("su10_2", "su9_3", "su8_4")}


@pytest.fixture(scope="session")
def inclusions():
    keys = ["su2_10-spin5_1", "su3_9-e6_1", "su4_8-spin20_1"]
    return {key: inclusion_table(key) for key in keys}

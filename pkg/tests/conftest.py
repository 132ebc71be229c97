from __future__ import annotations

import pytest

from oracles import TOWER_PARAMS, make_towers


@pytest.fixture(scope="session")
def towers():
    return make_towers()


@pytest.fixture(scope="session")
def tower_params():
    return TOWER_PARAMS

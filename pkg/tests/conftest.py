from __future__ import annotations

import pytest

from dedekind_ore.fields import make_order


@pytest.fixture
def Z():
    return make_order(0)


@pytest.fixture
def O5():
    return make_order(-5)


@pytest.fixture
def O1():
    return make_order(-1)

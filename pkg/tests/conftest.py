# tests/conftest.py
from __future__ import annotations

import json

import pytest

from hommodels import config
from hommodels.complex import SimplicialComplex
from hommodels.config import Budgets
from hommodels.graph import build_named

# 6-vertex real projective plane
RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
]


@pytest.fixture
def c5():
    return build_named("cycle", 5)


@pytest.fixture
def k2():
    return build_named("complete", 2)


@pytest.fixture
def k3():
    return build_named("complete", 3)


@pytest.fixture
def rp2():
    return SimplicialComplex.from_facets(RP2_FACETS)


@pytest.fixture
def hexagon():
    return SimplicialComplex.from_facets([(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def tiny_budgets():
    return Budgets(max_poset_size=10, max_order_faces=10, max_matrix_columns=10)


@pytest.fixture
def report_schema():
    with open(config.REPORT_SCHEMA, "r", encoding="utf-8") as f:
        return json.load(f)

"""Root conftest: shared rings, spaces and description files."""

import json

import pytest

from compactlab.rings.atoms import LocalAtom
from compactlab.rings.product import ProductRing, product
from compactlab.rings.table import TableRing, cyclic
from compactlab.topspace.space import FiniteSpace


@pytest.fixture
def z6_table() -> TableRing:
    """Z/6 with element index = residue."""
    return cyclic(6)


@pytest.fixture
def z4() -> ProductRing:
    return product([LocalAtom(2, 2)], ["a"])


@pytest.fixture
def z6() -> ProductRing:
    return product([LocalAtom(2), LocalAtom(3)], ["a", "b"])


@pytest.fixture
def z4_z9() -> ProductRing:
    return product([LocalAtom(2, 2), LocalAtom(3, 2)], ["a", "b"])


@pytest.fixture
def z4_z4() -> ProductRing:
    return product([LocalAtom(2, 2), LocalAtom(2, 2)], ["a", "b"])


@pytest.fixture
def fields_2357() -> ProductRing:
    return product([LocalAtom(2), LocalAtom(3), LocalAtom(5), LocalAtom(7)], list("abcd"))


@pytest.fixture
def sierpinski() -> FiniteSpace:
    return FiniteSpace.sierpinski()


@pytest.fixture
def ring_file(tmp_path):
    """Write a ring description and return its path."""

    def write(description: dict, name: str = "ring.json"):
        path = tmp_path / name
        path.write_text(json.dumps(description), encoding="utf-8")
        return path

    return write


@pytest.fixture
def space_file(tmp_path):
    """Write a space description and return its path."""

    def write(description: dict, name: str = "space.json"):
        path = tmp_path / name
        path.write_text(json.dumps(description), encoding="utf-8")
        return path

    return write

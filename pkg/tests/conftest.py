import json
from pathlib import Path

import pytest

from ledc.cli import code_from_dict, structure_from_dict
from ledc.locality import blocks_for_sizes, make_structure

FIXTURES = Path(__file__).parent / "fixtures"


def random_structure(rng, max_k=12, max_m=4, max_extra=3):
    """Random valid structure: every data index covered, n_i >= k_i."""
    k = rng.randint(1, max_k)
    m = rng.randint(1, max_m)
    while True:
        K = [sorted(rng.sample(range(1, k + 1), rng.randint(1, k))) for _ in range(m)]
        if set().union(*K) == set(range(1, k + 1)):
            break
    sizes = [len(Kg) + rng.randint(0, max_extra) for Kg in K]
    return make_structure(K, blocks_for_sizes(sizes))


def load_json(name):
    with open(FIXTURES / name, encoding="utf-8") as fh:
        return json.load(fh)


def load_structure(name):
    return structure_from_dict(load_json(name))


def load_code(name):
    return code_from_dict(load_json(name))


@pytest.fixture(scope="session")
def unequal_r():
    return load_structure("unequal_r_structure.json")


@pytest.fixture(scope="session")
def equal_r():
    return load_structure("equal_r_structure.json")


@pytest.fixture(scope="session")
def suboptimal_codefile():
    return load_code("suboptimal_code.json")


@pytest.fixture(scope="session")
def cyclic_descending():
    return load_code("cyclic_code_descending.json")


@pytest.fixture(scope="session")
def cyclic_codefile():
    return load_code("cyclic_code.json")

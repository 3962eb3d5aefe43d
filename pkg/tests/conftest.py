from functools import lru_cache

import pytest

from wreathrep.group_core import load_group


@lru_cache(maxsize=None)
def group(spec: str):
    return load_group(spec)


@pytest.fixture(scope="session")
def trivial():
    return group("trivial")


@pytest.fixture(scope="session")
def z2():
    return group("cyclic:2")


@pytest.fixture(scope="session")
def z3():
    return group("cyclic:3")


@pytest.fixture(scope="session")
def s3():
    return group("sym:3")

"""Shared instance builders, cached per session."""

import itertools

import pytest

from hopfcyc.coefficients import group_set_module_coalgebra
from hopfcyc.instances import (
    GroupData,
    GroupSetData,
    build_bicrossed,
    build_h1cop,
    build_matched_pair,
    cyclic_group,
    swap_instance,
)


@pytest.fixture(scope="session")
def h1cop():
    return build_h1cop()


@pytest.fixture(scope="session")
def matched_pair():
    return build_matched_pair()


@pytest.fixture(scope="session")
def bicrossed(matched_pair):
    return build_bicrossed(matched_pair)


@pytest.fixture(scope="session")
def swap_cmod():
    return group_set_module_coalgebra(swap_instance())


@pytest.fixture(scope="session")
def point_cmod():
    gs = GroupSetData(cyclic_group(1), ["p"], {("1", "p"): "p"})
    return group_set_module_coalgebra(gs)


def s3_group() -> GroupData:
    perms = list(itertools.permutations((0, 1, 2)))

    def label(p):
        return "e" if p == (0, 1, 2) else "p" + "".join(map(str, p))

    mult = {
        (label(a), label(b)): label(tuple(a[b[i]] for i in range(3)))
        for a in perms
        for b in perms
    }
    return GroupData([label(p) for p in perms], "e", mult)


@pytest.fixture(scope="session")
def s3():
    return s3_group()

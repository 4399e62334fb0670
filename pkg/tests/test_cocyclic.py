"""Cocyclic structure on finite instances and the two cohomology routes."""

import pytest

from hopfcyc.cocyclic import (
    AlgebraCochainInstance,
    build_coalgebra_instance,
    check_cocyclic,
    cyclic_cohomology,
)
from hopfcyc.coefficients import mc_graded_group, mc_trivial
from hopfcyc.cup import build_group_cup_instance
from hopfcyc.errors import PreconditionError
from hopfcyc.instances import build_group_algebra, cyclic_group
from hopfcyc.linalg import identity, mat_mul


@pytest.fixture(scope="module")
def swap_trivial(swap_cmod):
    inst = build_coalgebra_instance(mc_trivial(swap_cmod.hopf), swap_cmod, 5)
    assert check_cocyclic(inst)["ok"]
    return inst


@pytest.fixture(scope="module")
def swap_graded(swap_cmod):
    mc = mc_graded_group(
        swap_cmod.hopf, build_group_algebra(cyclic_group(2), name="kG_g")
    )
    inst = build_coalgebra_instance(mc, swap_cmod, 5)
    assert check_cocyclic(inst)["ok"]
    return inst


@pytest.fixture(scope="module")
def point(point_cmod):
    inst = build_coalgebra_instance(mc_trivial(point_cmod.hopf), point_cmod, 5)
    assert check_cocyclic(inst)["ok"]
    return inst


def test_point_dims(point):
    # one point, trivial group: every relative cochain space is a line
    assert point.dims[:4] == [1, 1, 1, 1]


def test_swap_dims(swap_trivial):
    # dim C^n = 2^(n+1) / |Z/2|
    assert swap_trivial.dims[:4] == [1, 2, 4, 8]


def test_no_welldefinedness_failures(swap_trivial, swap_graded, point):
    for inst in (swap_trivial, swap_graded, point):
        assert inst.welldef_failures == []


def test_cyclicity_matrix(swap_trivial):
    for n in range(4):
        power = identity(swap_trivial.dims[n])
        for _ in range(n + 1):
            power = mat_mul(swap_trivial.tau[n], power)
        assert power == identity(swap_trivial.dims[n])


def test_simplicial_interchange(swap_trivial):
    inst = swap_trivial
    # codegeneracies are sections of the neighbouring cofaces
    for n in range(3):
        for j in range(n + 1):
            for i in (j, j + 1):
                assert mat_mul(inst.codeg[(n, j)], inst.coface[(n + 1, i)]) == identity(
                    inst.dims[n]
                )


def test_last_coface_is_tau_after_first(swap_graded):
    inst = swap_graded
    for n in range(1, 4):
        assert inst.coface[(n, n)] == mat_mul(inst.tau[n], inst.coface[(n, 0)])


def test_point_cohomology(point):
    report = cyclic_cohomology(point, 3)
    assert report["lambda_complex"] == [1, 0, 1, 0]
    assert report["bicomplex"] == [1, 0, 1, 0]
    assert report["agree"]


def test_swap_cohomology_routes_agree(swap_trivial, swap_graded):
    for inst in (swap_trivial, swap_graded):
        report = cyclic_cohomology(inst, 3)
        assert report["agree"], report
        assert report["lambda_complex"] == [1, 0, 1, 0]


def test_unverified_instance_refused(swap_cmod):
    inst = build_coalgebra_instance(mc_trivial(swap_cmod.hopf), swap_cmod, 3)
    with pytest.raises(PreconditionError):
        cyclic_cohomology(inst, 1)


def test_algebra_side_instance():
    ci = build_group_cup_instance(graded=False)
    ai = AlgebraCochainInstance(ci.mc, ci.a_mod, 5)
    assert ai.welldef_failures == []
    inst = ai.cocyclic_instance()
    assert check_cocyclic(inst)["ok"]
    report = cyclic_cohomology(inst, 3)
    assert report["agree"]
    assert report["lambda_complex"] == [1, 0, 1, 0]

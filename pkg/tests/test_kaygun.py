"""The bridge between the relative cocyclic module and the quotient complex
of the ambient one."""

import pytest

from hopfcyc.coefficients import (
    group_set_module_coalgebra,
    mc_conjugation_group,
    mc_graded_group,
    mc_trivial,
)
from hopfcyc.instances import GroupSetData, build_group_algebra, cyclic_group
from hopfcyc.kaygun import (
    KaygunBridge,
    check_iso,
    check_w_in_ker_pi,
    commutator_identities,
    kaygun_cohomology,
)


@pytest.fixture(scope="module")
def swap_bridge(swap_cmod):
    return KaygunBridge(mc_trivial(swap_cmod.hopf), swap_cmod, top=4)


def test_commutator_identities(swap_bridge):
    assert commutator_identities(swap_bridge, upto=2)["ok"]


def test_w_vanishes_on_sayd_instance(swap_bridge):
    # commutators with the group translations die in the quotient already
    for n in range(3):
        assert swap_bridge.w_rows(n) == []
    assert check_w_in_ker_pi(swap_bridge, upto=2)["ok"]


def test_iso(swap_bridge):
    report = check_iso(swap_bridge)
    assert report["ok"], report
    assert report["cm_dims"][:4] == [1, 2, 4, 8]
    assert report["cm_dims"] == report["relative_dims"]


def test_cohomology_matches_relative_route(swap_bridge):
    report = kaygun_cohomology(swap_bridge, upto=2)
    assert report["ok"]
    assert report["dims"] == [1, 0, 1]
    assert report["hc"]["agree"]


def test_graded_coefficients(swap_cmod):
    mc = mc_graded_group(
        swap_cmod.hopf, build_group_algebra(cyclic_group(2), name="kG_g")
    )
    bridge = KaygunBridge(mc, swap_cmod, top=4)
    assert check_w_in_ker_pi(bridge, upto=2)["ok"]
    report = check_iso(bridge)
    assert report["ok"]
    assert report["cm_dims"][:4] == [2, 4, 8, 16]


def s3_regular_cmod(s3):
    gs = GroupSetData(
        s3,
        list(s3.elements),
        {(a, x): s3.mult[(a, x)] for a in s3.elements for x in s3.elements},
    )
    return group_set_module_coalgebra(gs)


def test_s3_conjugation_positive(s3):
    cmod = s3_regular_cmod(s3)
    mc = mc_conjugation_group(cmod.hopf, build_group_algebra(s3, name="kS3_c"), s3)
    bridge = KaygunBridge(mc, cmod, top=1)
    assert check_w_in_ker_pi(bridge, upto=1)["ok"]
    assert check_iso(bridge)["ok"]


def test_s3_graded_negative(s3):
    # non-SAYD coefficients: the commutator space is nonzero and escapes
    # the kernel of the projection, so the bridge degrades honestly
    cmod = s3_regular_cmod(s3)
    mc = mc_graded_group(cmod.hopf, build_group_algebra(s3, name="kS3_g"))
    bridge = KaygunBridge(mc, cmod, top=1)
    assert bridge.w_rows(1)
    assert not check_w_in_ker_pi(bridge, upto=1)["ok"]

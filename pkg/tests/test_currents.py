import pytest

from zqlattice.currents import (
    LatticeConfig,
    build_currents,
    check_centrality,
    check_current_suite,
    k2_sign_control,
)
from zqlattice.currents import center_acts_on_vertex


@pytest.mark.parametrize("N", [3, 4])
def test_current_suite_passes(N):
    fam = build_currents(LatticeConfig(3, N))
    assert [r.relation for r in check_current_suite(fam) if not r.passed] == []
    assert all(r.passed for r in check_centrality(fam))


def test_two_site_ring_neighbour_exchange():
    # with two edges each is both neighbours of the other; the exchange rules clash
    fam = build_currents(LatticeConfig(3, 2))
    failed = {r.relation for r in check_current_suite(fam) if not r.passed}
    assert failed == {"K4", "II"}


def test_sign_control_fails():
    assert not k2_sign_control(build_currents(LatticeConfig(3, 3))).passed


def test_center_is_not_central_for_vertex_operators():
    assert center_acts_on_vertex(build_currents(LatticeConfig(3, 3)))


@pytest.mark.parametrize("p,N", [(4, 3), (3, 1), (2, 2)])
def test_bad_config(p, N):
    with pytest.raises(ValueError):
        LatticeConfig(p, N)

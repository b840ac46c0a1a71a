import pytest

from zqlattice.currents import LatticeConfig, build_currents
from zqlattice.shift import (
    OddLengthError,
    build_shift,
    check_inner_time_steps,
    check_shift_suite,
    rho_gauss_coefficients,
    solve_z,
)
from zqlattice.vertex import VertexFamily
from zqlattice.cyclotomic import CycloNum, half_qpow


def test_shift_suite(vf33):
    assert [r.relation for r in check_shift_suite(vf33) if not r.passed] == []


def test_unique_z_and_star_symmetry(vf33):
    zr, zl = solve_z(vf33, "r"), solve_z(vf33, "l")
    assert len(zr) == len(zl) == 1
    assert all(a.star().field_eq(b) for a, b in zip(zr[0], zl[0]))


def test_literal_ordering_has_no_solution(vf33):
    assert solve_z(vf33, "r", literal=True) == []


def test_inner_time_steps(vf33):
    assert all(r.passed for r in check_inner_time_steps(vf33))


def test_even_length_rejected(vf32):
    with pytest.raises(OddLengthError):
        solve_z(vf32, "r")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rho_coefficients_are_a_gauss_transform(p):
    c = rho_gauss_coefficients(p, "r")
    for s in range(p):
        val = sum((cs.shift(k * s) for k, cs in enumerate(c)), CycloNum.zero(p))
        assert val.field_eq(half_qpow(p, -s * s))


def test_build_shift_reports_all_solutions(vf33):
    S = build_shift(vf33, "l")
    assert S.alpha == "l" and len(S.all_solutions) == 1
    assert (S.V * S.V_inv).equals(S.V.one(vf33.table))

from hypothesis import given
from hypothesis import strategies as st

from zqlattice.cyclotomic import CycloNum, qpow
from zqlattice.universal import (
    R_minus,
    R_plus,
    ScalarAlgebra,
    Universal,
    assert_equal,
    check_relation,
    delta_a,
    epsilon_a,
    inverse_u,
    permute,
    s_a,
    star_u,
)

P = 3
ALG = ScalarAlgebra(P)
phases = st.lists(st.integers(0, P - 1), min_size=P, max_size=P)


def one_leg(vals):
    return Universal.from_function(ALG, 1, lambda t: qpow(P, vals[t]))


@given(phases)
def test_antipode_and_counit_axioms(vals):
    x = one_leg(vals)
    assert assert_equal(s_a(s_a(x)), x).passed
    assert assert_equal(epsilon_a(delta_a(x), 1), x).passed


@given(phases)
def test_coassociativity(vals):
    x = one_leg(vals)
    assert assert_equal(delta_a(delta_a(x, 1), 1), delta_a(delta_a(x, 1), 2)).passed


@given(phases)
def test_inverse_and_star(vals):
    x = one_leg(vals)
    assert assert_equal(x * inverse_u(x), Universal.identity(ALG, 1)).passed
    assert assert_equal(star_u(x), inverse_u(x)).passed


def test_R_minus_is_inverse_of_flipped_R_plus():
    Rp, Rm = R_plus(ALG), R_minus(ALG)
    assert assert_equal(permute(Rp, (2, 1)) * Rm, Universal.identity(ALG, 2)).passed


def test_check_relation_merges_by_id():
    reports = []
    x = Universal.identity(ALG, 1)
    y = Universal.from_function(ALG, 1, lambda t: CycloNum.one(P) * 2)
    check_relation(reports, "s", "r", "ref", x, x, tag="a")
    check_relation(reports, "s", "r", "ref", x, y, tag="b")
    assert len(reports) == 1
    assert reports[0].instances_checked == 2 * P
    assert not reports[0].passed

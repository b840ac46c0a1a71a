import pytest
from hypothesis import given
from hypothesis import strategies as st

from zqlattice.cyclotomic import CycloNum
from zqlattice.zq_hopf import (
    ZqElement,
    build_basics,
    check_hopf_suite,
    check_modularity,
    det_primitive_component_nonzero,
    det_smatrix,
    universal_N,
)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_hopf_suite_passes(p):
    failed = [r.relation for r in check_hopf_suite(p) if not r.passed]
    assert failed == []


@pytest.mark.parametrize("p", [3, 5, 7])
def test_s_matrix_invertible(p):
    assert check_modularity(p) and det_primitive_component_nonzero(p)


def test_s_matrix_degenerate_at_p2():
    assert det_smatrix(2).is_zero()


coeffs = st.lists(st.integers(-3, 3), min_size=5, max_size=5)


@given(coeffs, coeffs)
def test_hopf_axioms_on_random_elements(a, b):
    p = 5
    x, y = ZqElement.from_coefficients(p, a), ZqElement.from_coefficients(p, b)
    # coproduct is multiplicative and the antipode is an algebra map (commutative case)
    assert ((x * y).coproduct()).body == {k: x.coproduct().body[k] * y.coproduct().body[k] for k in x.coproduct().body}
    assert (x * y).antipode() == x.antipode() * y.antipode()
    assert (x * y).counit() == x.counit() * y.counit()


@given(coeffs)
def test_coefficients_roundtrip(a):
    p = 5
    x = ZqElement.from_coefficients(p, a)
    rebuilt = ZqElement.from_function(p, lambda t: sum((c.shift(t * m) for m, c in enumerate(x.coefficients())), CycloNum.zero(p)))
    assert all(u.field_eq(v) for u, v in zip(rebuilt.evals, x.evals))


def test_ribbon_and_kappa():
    b = build_basics(5)
    for t in range(5):
        assert b.kappa(t) * b.kappa(t) == b.v(t)
        assert b.w(t) == 1


def test_unknown_universal_N():
    with pytest.raises(ValueError):
        universal_N(3, "N0")

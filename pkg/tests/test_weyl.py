import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zqlattice.crosscheck import cross_backend_check
from zqlattice.cyclotomic import CycloNum, qpow
from zqlattice.weyl import WeylElement, function_of_unitary, induced_rep, inv_monomial, lattice_table

T = lattice_table(3, 2)
REP = induced_rep(T)


def monomials(table=T):
    return st.tuples(
        st.lists(st.integers(0, table.p - 1), min_size=table.n, max_size=table.n),
        st.integers(0, table.p - 1),
    ).map(lambda a: WeylElement.monomial(table, a[0], CycloNum.monomial(table.p, a[1])))


def elements(table=T):
    return st.lists(monomials(table), min_size=1, max_size=3).map(lambda ms: sum(ms[1:], ms[0]))


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements())
def test_associativity(a, b, c):
    assert ((a * b) * c).equals(a * (b * c))


@settings(max_examples=40, deadline=None)
@given(elements(), elements())
def test_star_reverses_products(a, b):
    assert (a * b).star().equals(b.star() * a.star())


@given(monomials(), monomials())
def test_commutation_phase(a, b):
    ka, kb = next(iter(a.terms)), next(iter(b.terms))
    assert (a * b).equals(b * a * qpow(3, T.commutator_form(ka, kb)))


@given(monomials())
def test_monomial_inverse(a):
    assert (a * inv_monomial(a)).equals(WeylElement.one(T))


@settings(max_examples=30, deadline=None)
@given(elements(), elements())
def test_representation_is_a_homomorphism(a, b):
    assert REP.eval_in_rep(a * b).equals(REP.eval_in_rep(a) * REP.eval_in_rep(b))


def test_induced_rep_dimension():
    assert REP.dim == 27


@pytest.mark.parametrize("k", range(3))
def test_function_of_unitary_spectral(k):
    h = WeylElement.gen(T, "H0")
    f = function_of_unitary(h, lambda s: qpow(3, -s * s))
    # f(h) h^k == h^k f(h) and f(h)^{-1} is the function with inverted values
    finv = function_of_unitary(h, lambda s: qpow(3, s * s))
    assert (f * finv).equals(WeylElement.one(T))
    assert (f * h ** k).equals(h ** k * f)


def test_cross_backend_agreement():
    assert cross_backend_check(T, 20, seed=3).passed


def test_overlap_reading_validated():
    with pytest.raises(ValueError):
        lattice_table(3, 3, "middle")

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zqlattice.dynamics import (
    ClassicalField,
    check_chiral_transport,
    check_sublattice_independence,
    classical_evolve,
    constant_field,
    pulse_field,
    random_field,
)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 9).flatmap(lambda n: st.tuples(st.lists(fracs, min_size=n, max_size=n), st.lists(fracs, min_size=n, max_size=n))), st.integers(1, 12))
def test_transport_holds_for_any_data(slices, steps):
    f = ClassicalField(tuple(slices[0]), tuple(slices[1]))
    assert all(r.passed for r in check_chiral_transport(classical_evolve(f, steps)))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6).map(lambda k: 2 * k), st.integers(0, 1000))
def test_sublattices_independent(sites, seed):
    assert check_sublattice_independence(random_field(sites, seed), 10).passed


def test_constant_stays_constant():
    tr = classical_evolve(constant_field(7, Fraction(3, 2)), 9)
    assert all(sl == (Fraction(3, 2),) * 7 for sl in tr.slices)


def test_pulse_light_cone():
    tr = classical_evolve(pulse_field(16), 5)
    for k, sl in enumerate(tr.slices[1:], start=1):
        for n, x in enumerate(sl):
            dist = min(n, 16 - n)
            if dist > k - 1 or (n + k - 1) % 2:
                assert x == 0


def test_random_is_deterministic():
    assert random_field(8, 4) == random_field(8, 4)


def test_float_mode():
    tr = classical_evolve(random_field(6, 2, exact=False), 4)
    assert isinstance(tr.slices[-1][0], float)


def test_too_few_sites():
    with pytest.raises(ValueError):
        ClassicalField((0, 0), (0, 0))

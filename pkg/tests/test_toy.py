import pytest

from zqlattice.toy import (
    ax3_inverse_control,
    build_toy,
    qr_off_diagonal_fails,
    run_toy,
    structure_data,
)


def test_toy_p3_all_relations():
    failed = [(r.suite, r.relation) for r in run_toy(3) if not r.passed]
    assert failed == []


def test_diagonal_dimension():
    assert build_toy(3).diagonal_dimension() == 3


def test_negative_controls():
    toy = build_toy(3)
    right, _ = structure_data(toy)
    assert qr_off_diagonal_fails(toy)
    assert ax3_inverse_control(right)


@pytest.mark.parametrize("p", [2, 4])
def test_even_order_rejected(p):
    with pytest.raises(ValueError):
        build_toy(p)

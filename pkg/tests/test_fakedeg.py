import pytest

from fakedegrees.fakedeg import (
    BC_ROUTES,
    D_ROUTES,
    Representation,
    all_representations,
    bc_rep,
    check_corollary1_bc,
    check_corollary1_d,
    d_rep,
    dimension,
    fake_degree_bc,
    fake_degree_d,
    fake_degree_wreath,
    is_shifted_submultiset,
    poincare_bc,
    poincare_d,
    poincare_wreath,
    regular_representation_sum,
    special_partner_bc,
    symbol_of,
    wreath_rep,
)
from fakedegrees.qpoly import QPolynomial
from fakedegrees.shapes import multipartitions_of
from fakedegrees.tableaux import enumerate_tuple_tableaux


def test_representation_validation():
    with pytest.raises(ValueError):
        Representation(group="wreath", d=2, label=((1,),))
    with pytest.raises(ValueError):
        Representation(group="bc", d=3, label=((1,), ()))
    with pytest.raises(ValueError):
        Representation(group="d", d=2, label=((1,), (2,)))  # not canonical
    with pytest.raises(ValueError):
        Representation(group="d", d=2, label=((2,), (1,)), marker=2)
    r = d_rep(((1,), (2,)), marker=2)
    assert r.label == ((2,), (1,)) and r.marker == 1
    assert d_rep(((1,), (1,)), marker=2).marker == 2


def test_wreath_examples():
    assert fake_degree_wreath(((1, 1), (1,)), 2) == QPolynomial([0, 0, 0, 1, 0, 1, 0, 1])
    assert fake_degree_wreath(((4,),), 1) == QPolynomial([1])
    assert fake_degree_wreath(((2,), (2,)), 2) == QPolynomial(
        [0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1]
    )
    with pytest.raises(ValueError):
        fake_degree_wreath(((1,),), 2)
    with pytest.raises(ValueError):
        fake_degree_wreath(((1,),), 1, "bogus")


def test_wreath_route_agreement():
    for d in (1, 2, 3):
        for n in range(0, 5):
            for mp in multipartitions_of(n, d):
                assert fake_degree_wreath(mp, d, "formula") == fake_degree_wreath(
                    mp, d, "enumeration"
                )


def test_bc_examples_and_agreement():
    expected = QPolynomial([0, 0, 0, 1, 0, 1, 0, 1])
    for route in BC_ROUTES:
        assert fake_degree_bc(((1, 1), (1,)), route) == expected
        assert fake_degree_bc(((), ()), route) == QPolynomial([1])
    for n in range(0, 5):
        for pair in multipartitions_of(n, 2):
            ref = fake_degree_bc(pair, "tuple")
            for route in BC_ROUTES:
                assert fake_degree_bc(pair, route) == ref


def test_d_known_examples():
    rep = d_rep(((1, 1), (1,)))
    for route in D_ROUTES:
        assert fake_degree_d(rep, route) == QPolynomial([0, 0, 0, 1, 1, 1])
    for marker in (1, 2):
        rep = d_rep(((2,), (2,)), marker)
        for route in D_ROUTES:
            assert fake_degree_d(rep, route) == QPolynomial([0, 0, 1, 0, 1, 0, 1])


def test_d_trivial_side():
    assert fake_degree_d(d_rep(((4,), ()))) == QPolynomial([1])


def test_d_rejects_small_rank():
    with pytest.raises(ValueError):
        fake_degree_d(d_rep(((1,), ())))


def test_d_route_agreement():
    for n in range(2, 6):
        for rep in all_representations("d", n):
            ref = fake_degree_d(rep, "tuple")
            assert fake_degree_d(rep, "domino") == ref
            assert fake_degree_d(rep, "shifted") == ref


def test_d_marker_invariance():
    for n in range(2, 6, 2):
        for rep in all_representations("d", n):
            if rep.label[0] == rep.label[1]:
                assert fake_degree_d(d_rep(rep.label, 1)) == fake_degree_d(
                    d_rep(rep.label, 2)
                )


def test_poincare_examples():
    assert poincare_bc(1) == QPolynomial([1, 1])
    assert poincare_d(2) == QPolynomial([1, 2, 1])
    assert poincare_wreath(3, 1) == QPolynomial([1, 1, 1])
    with pytest.raises(ValueError):
        poincare_d(1)


def test_regular_representation_identity():
    for n in range(0, 6):
        assert regular_representation_sum("wreath", n, 2) == poincare_wreath(2, n)
    for n in range(0, 5):
        assert regular_representation_sum("wreath", n, 3) == poincare_wreath(3, n)
    for n in range(2, 6):
        assert regular_representation_sum("d", n) == poincare_d(n)


def test_dimension_is_tableau_count():
    for n in range(0, 5):
        for pair in multipartitions_of(n, 2):
            assert dimension(bc_rep(pair)) == len(
                list(enumerate_tuple_tableaux(pair))
            )
        for mp in multipartitions_of(n, 3):
            assert dimension(wreath_rep(mp, 3)) == len(
                list(enumerate_tuple_tableaux(mp))
            )


def test_d_dimension_halving():
    """The two representations of an equal-component pair split the
    tableau count in half."""
    rep = d_rep(((2,), (2,)))
    assert dimension(rep) * 2 == len(list(enumerate_tuple_tableaux(rep.label)))


def test_symbol_shape():
    long_row, short_row = symbol_of(((1, 1), (1,)))
    assert len(long_row) == len(short_row) + 1
    assert list(long_row) == sorted(long_row)
    assert list(short_row) == sorted(short_row)


def test_special_partner_idempotent_and_interleaved_fixpoint():
    for n in range(0, 6):
        for pair in multipartitions_of(n, 2):
            sp = special_partner_bc(pair)
            assert special_partner_bc(sp) == sp
            long_row, short_row = symbol_of(sp)
            merged = sorted(long_row + short_row)
            assert tuple(merged[0::2]) == long_row
            assert tuple(merged[1::2]) == short_row


def test_special_partner_golden_values():
    # frozen after the exponent-containment sweep passed
    assert special_partner_bc(((1, 1), (1,))) == ((1, 1), (1,))  # already special
    assert special_partner_bc(((1, 1), ())) == ((1,), (1,))
    assert special_partner_bc(((), (2,))) == ((1,), (1,))
    assert special_partner_bc(((1, 1, 1), ())) == ((1,), (1, 1))


def test_is_shifted_submultiset():
    assert is_shifted_submultiset([3, 5, 7], [3, 5, 7])
    assert is_shifted_submultiset([0, 2], [5, 7, 9])
    assert is_shifted_submultiset([], [1])
    assert not is_shifted_submultiset([0, 0], [1, 2])
    assert not is_shifted_submultiset([0, 1, 2], [0, 1])


def test_corollary1_bc():
    for n in range(0, 5):
        assert all(r["ok"] for r in check_corollary1_bc(n))


def test_corollary1_d():
    for n in range(2, 5):
        assert all(r["ok"] for r in check_corollary1_d(n))

import pytest

from fakedegrees.bijections import (
    RuleError,
    Trace,
    flip_b,
    flip_c,
    pair_maj_b,
    pair_maj_c,
    pair_shapes,
    pi_b,
    pi_b_prime,
    pi_c,
    pi_c_prime,
)
from fakedegrees.dominoes import enumerate_sdt, maj_domino
from fakedegrees.shapes import lusztig_rho1, lusztig_rho2, multipartitions_of
from fakedegrees.tableaux import enumerate_tuple_tableaux, maj_tuple


def test_pi_parity_checks():
    t_even = next(iter(enumerate_sdt((2,))))
    t_odd = next(iter(enumerate_sdt((1,))))
    with pytest.raises(ValueError):
        pi_b(t_even)
    with pytest.raises(ValueError):
        pi_c(t_odd)


def test_insertion_shapes_and_trace():
    for n in range(0, 5):
        for pair_shape in multipartitions_of(n, 2):
            for t in enumerate_sdt(lusztig_rho1(pair_shape)):
                trace = Trace()
                pair = pi_c(t, trace)
                assert pair_shapes(pair) == pair_shape
                assert [s.label for s in trace.steps] == list(range(1, n + 1))
            for t in enumerate_sdt(lusztig_rho2(pair_shape)):
                assert pair_shapes(pi_b(t)) == pair_shape


def test_pair_maj_equals_domino_maj():
    for n in range(0, 6):
        for pair_shape in multipartitions_of(n, 2):
            for t in enumerate_sdt(lusztig_rho1(pair_shape)):
                assert pair_maj_c(pi_c(t)) == maj_domino(t)
            for t in enumerate_sdt(lusztig_rho2(pair_shape)):
                assert pair_maj_b(pi_b(t)) == maj_domino(t)


def test_flip_worked_example_even():
    y = (((4,), (6,)), ((1, 3), (2, 5)))
    trace = Trace()
    z = flip_c(y, trace)
    assert z == (((3,), (4,)), ((1, 5), (2, 6)))
    assert trace.swaps == [3, 5, 4]


def test_flip_worked_example_second():
    y = (((1,), (3,), (4,)), ((2,),))
    trace = Trace()
    z = flip_c(y, trace)
    assert z == (((1,), (2,), (3,)), ((4,),))
    assert trace.swaps == [2, 3]


def test_flip_fixpoint_when_nothing_qualifies():
    y = (((1, 2),), ((3,),))
    trace = Trace()
    assert flip_c(y, trace) == y
    assert trace.swaps == []


def test_flip_preserves_shapes_and_labels():
    for n in range(0, 5):
        for pair_shape in multipartitions_of(n, 2):
            for t in enumerate_sdt(lusztig_rho1(pair_shape)):
                y = pi_c(t)
                z = flip_c(y)
                assert pair_shapes(z) == pair_shapes(y)
                labels = sorted(x for f in z for row in f for x in row)
                assert labels == list(range(1, n + 1))


def certify(rho, prime, max_n):
    for n in range(0, max_n + 1):
        for pair_shape in multipartitions_of(n, 2):
            images = []
            for t in enumerate_sdt(rho(pair_shape)):
                z = prime(t)
                assert pair_shapes(z) == pair_shape
                assert maj_tuple(z) == maj_domino(t)
                images.append(z)
            assert len(set(images)) == len(images)  # injective
            assert sorted(images) == sorted(enumerate_tuple_tableaux(pair_shape))


def test_pi_c_prime_bijection_certified():
    certify(lusztig_rho1, pi_c_prime, 5)


def test_pi_b_prime_bijection_certified():
    certify(lusztig_rho2, pi_b_prime, 5)


def test_flip_b_small_case():
    """Odd-size inputs flip under the odd descent rule; sanity on a small
    case that needs no flips."""
    t = next(iter(enumerate_sdt((3, 2, 2))))
    y = pi_b(t)
    z = flip_b(y)
    assert maj_tuple(z) == maj_domino(t)

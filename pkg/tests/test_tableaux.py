import math

from fakedegrees.qpoly import QPolynomial, q_int
from fakedegrees.shapes import hooks, multipartitions_of, partitions_of
from fakedegrees.tableaux import (
    enumerate_syt,
    enumerate_tuple_tableaux,
    format_tableau,
    format_tuple_tableau,
    largest_label_component,
    maj_syt,
    maj_tuple,
    position_of,
    shape_of,
    syt_maj_gf,
    tuple_maj_gf,
    tuple_maj_gf_restricted,
)


def syt_count_by_hooks(shape):
    n = sum(shape)
    denom = math.prod(hooks(shape))
    return math.factorial(n) // denom


def test_syt_enumeration_counts():
    for n in range(0, 7):
        for shape in partitions_of(n):
            ts = list(enumerate_syt(shape))
            assert len(ts) == syt_count_by_hooks(shape), shape
            assert len(set(ts)) == len(ts)
            for t in ts:
                assert shape_of(t) == shape


def test_syt_standardness():
    for t in enumerate_syt((3, 2)):
        for i, row in enumerate(t):
            assert all(row[j] < row[j + 1] for j in range(len(row) - 1))
            if i:
                assert all(t[i - 1][j] < row[j] for j in range(len(row)))


def test_maj_examples():
    assert maj_syt(((1, 2, 3),)) == 0
    assert maj_syt(((1,), (2,), (3,))) == 1 + 2
    assert syt_maj_gf((2, 1)) == QPolynomial([0, 1, 1])


def test_position_of():
    t = ((1, 3), (2,))
    assert position_of(t, 3) == (1, 2)
    assert position_of(t, 2) == (2, 1)


def test_tuple_enumeration_counts():
    # multinomial times product of SYT counts
    for n in range(0, 5):
        for mp in multipartitions_of(n, 2):
            ts = list(enumerate_tuple_tableaux(mp))
            sizes = [sum(c) for c in mp]
            expected = math.factorial(n)
            for s in sizes:
                expected //= math.factorial(s)
            for c in mp:
                expected *= syt_count_by_hooks(c)
            assert len(ts) == expected, mp
            assert len(set(ts)) == len(ts)


def test_tuple_maj_known_value():
    assert tuple_maj_gf(((1, 1), (1,))) == QPolynomial([0, 1, 1, 1])


def test_restricted_gfs_known_values():
    assert tuple_maj_gf_restricted(((1, 1), (1,))) == QPolynomial([0, 1, 1])
    assert tuple_maj_gf_restricted(((1,), (1, 1))) == QPolynomial([0, 1])


def test_restricted_complement_identity():
    """Restricting the largest label to either component splits the full
    generating function."""
    for n in range(1, 6):
        for mp in multipartitions_of(n, 2):
            lam1, lam2 = mp
            swapped = (lam2, lam1)
            total = tuple_maj_gf(mp)
            first = tuple_maj_gf_restricted(mp)
            second = QPolynomial()
            for t in enumerate_tuple_tableaux(mp):
                if largest_label_component(t) == 2:
                    second = second + QPolynomial.monomial(maj_tuple(t))
            assert first + second == total
            # every tableau has the largest label in exactly one component
            assert first.evaluate_at_one() + second.evaluate_at_one() == len(
                list(enumerate_tuple_tableaux(mp))
            )
            assert len(list(enumerate_tuple_tableaux(swapped))) == len(
                list(enumerate_tuple_tableaux(mp))
            )


def test_formatting():
    t = ((1, 3), (2,))
    assert format_tableau(t) == "[[1,3],[2]]"
    assert format_tuple_tableau((t, ((4,),))) == "[[1,3],[2]] ; [[4]]"

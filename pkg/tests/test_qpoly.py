import pytest
from hypothesis import given, strategies as st

from fakedegrees.qpoly import (
    ONE,
    InexactDivisionError,
    QPolynomial,
    hook_syt_gf,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
)

polys = st.builds(QPolynomial, st.lists(st.integers(-9, 9), max_size=8))


def test_canonical_form():
    assert QPolynomial([0, 1, 0, 0]).coeffs == (0, 1)
    assert QPolynomial([]).coeffs == ()
    assert QPolynomial([0, 0]).is_zero()
    assert QPolynomial([1]) == 1


def test_immutability_and_hash():
    p = QPolynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(p) == hash(QPolynomial([1, 2, 0]))


def test_monomial_degree_low_degree():
    m = QPolynomial.monomial(3, 2)
    assert m.coeffs == (0, 0, 0, 2)
    assert m.degree == 3
    assert m.low_degree == 3
    assert QPolynomial().degree == -1


def test_arithmetic_basics():
    a = QPolynomial([1, 1])
    b = QPolynomial([1, -1])
    assert a + b == QPolynomial([2])
    assert a - a == QPolynomial()
    assert a * b == QPolynomial([1, 0, -1])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_exact_div_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        QPolynomial([1, 1, 1]).exact_div(QPolynomial([1, 1]))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(QPolynomial())


def test_substitute_power_and_shift():
    p = QPolynomial([0, 1, 1, 1])  # q + q^2 + q^3
    assert p.substitute_power(2) == QPolynomial([0, 0, 1, 0, 1, 0, 1])
    assert p.shift(1).coeffs == (0, 0, 1, 1, 1)
    assert p.shift(-1).coeffs == (1, 1, 1)
    with pytest.raises(ValueError):
        p.shift(-2)


def test_evaluate_and_call():
    p = QPolynomial([1, 2, 3])
    assert p.evaluate_at_one() == 6
    assert p(2) == 1 + 4 + 12


def test_palindromic():
    assert QPolynomial([0, 1, 2, 1]).is_palindromic()
    assert not QPolynomial([1, 2]).is_palindromic()
    assert QPolynomial().is_palindromic()


def test_exponent_multiset():
    assert QPolynomial([0, 0, 2, 1]).exponent_multiset() == [2, 2, 3]
    with pytest.raises(ValueError):
        QPolynomial([-1]).exponent_multiset()


def test_json_roundtrip():
    p = QPolynomial([0, 1, 0, 5])
    assert QPolynomial.from_json(p.to_json()) == p


def test_pretty():
    assert QPolynomial([0, 0, 0, 1, 0, 1, 0, 1]).pretty() == "q^3 + q^5 + q^7"
    assert QPolynomial([1, 2]).pretty() == "1 + 2*q"
    assert QPolynomial().pretty() == "0"


def test_q_analogues():
    assert q_int(0) == ONE
    assert q_int(3) == QPolynomial([1, 1, 1])
    assert q_factorial(3) == q_int(2) * q_int(3)
    assert q_binomial(4, 2) == QPolynomial([1, 1, 2, 1, 1])
    assert q_multinomial(3, (1, 1, 1)).evaluate_at_one() == 6
    with pytest.raises(ValueError):
        q_multinomial(3, (1, 1))


@given(st.integers(0, 6), st.integers(0, 6))
def test_q_binomial_symmetry(n, k):
    if k > n:
        return
    assert q_binomial(n, k) == q_binomial(n, n - k)


def test_hook_syt_gf_matches_enumeration():
    from fakedegrees.shapes import partitions_of
    from fakedegrees.tableaux import syt_maj_gf

    for n in range(0, 7):
        for shape in partitions_of(n):
            assert hook_syt_gf(shape) == syt_maj_gf(shape), shape

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import Z, seqs
from hurwitz.binomial_type import (
    a_from_binomial,
    binomial_from_u,
    divisor_weight,
    is_binomial_type,
    named_family,
    pa_coefficient,
    pa_polynomials,
    poly_ring,
    powers,
    touchard,
    u_from_binomial,
)
from hurwitz.errors import IndexOutOfRange, NonzeroConstantTerm, NotBinomialType, NotUnitHeaded
from hurwitz.rings import poly_eval
from hurwitz.series import Seq, delta, hurwitz_power, ones
from oracles import bell_numbers, count_set_partitions

P = poly_ring(Z)
x = P.gen()


def S(*terms, ring=Z):
    return Seq(ring, terms)


def at(q, v):
    return Seq(Z, [poly_eval(t.payload, Z(v)) for t in q.terms])


def test_pa_examples():
    assert pa_polynomials(ones(Z, 5)) == Seq(P, [x**m for m in range(5)])
    bell = Seq(Z, bell_numbers(6))
    expect = Seq(P, [P.from_coefficients([count_set_partitions(m, k) for k in range(m + 1)]) for m in range(6)])
    assert pa_polynomials(bell) == expect
    assert at(pa_polynomials(bell), 1) == bell
    with pytest.raises(NotUnitHeaded):
        pa_polynomials(S(2, 1))


def test_pa_coefficient_examples():
    a = S(1, 1, 7, -3, 2)
    for n in range(5):
        assert pa_coefficient(a, n, n) == Z.one
    assert all(pa_coefficient(a, n, 0).is_zero() for n in range(1, 5))
    assert pa_coefficient(ones(Z, 4), 3, 2).is_zero()
    with pytest.raises(IndexOutOfRange):
        pa_coefficient(a, 2, 3)


def test_from_u_examples():
    assert binomial_from_u(delta(Z, 4)) == powers(5)
    fib = binomial_from_u(S(1, 1, 2, 3, 5, 8), 6)
    assert fib == Seq(
        P,
        [
            1,
            x,
            x**2 + x,
            x**3 + 3 * x**2 + 2 * x,
            x**4 + 6 * x**3 + 11 * x**2,
            x**5 + 10 * x**4 + 35 * x**3 + 20 * x**2 + 5 * x,
        ],
    )
    assert binomial_from_u(S(1, 1, 1, 4, 1, -19, 1, 771, -559)) == touchard(10)


def test_to_u_examples():
    assert u_from_binomial(touchard(10)) == S(1, 1, 1, 4, 1, -19, 1, 771, -559)
    assert u_from_binomial(named_family("pochhammer", 10)) == S(1, 1, 2, 9, 24, 110, 720, 5985, 39200)
    assert u_from_binomial(powers(6)) == delta(Z, 5)
    with pytest.raises(NonzeroConstantTerm):
        u_from_binomial(Seq(P, [1, x, x**2 + 1]))
    with pytest.raises(NotBinomialType):
        u_from_binomial(Seq(P, [1, x, x**2, x**3 + x**2]))
    assert u_from_binomial(Seq(P, [1, x, x**2, x**3 + x**2]), verify=False) == S(1, 0, 0)


def test_is_binomial_type_examples():
    assert is_binomial_type(powers(4))
    bad = is_binomial_type(Seq(P, [1, x, x**2 + 1]))
    assert not bad and bad.index == 2


def test_a_from_binomial_examples():
    assert a_from_binomial(powers(5)) == ones(Z, 5)
    assert a_from_binomial(touchard(5)) == S(1, 1, 2, 5, 15)
    with pytest.raises(NotBinomialType):
        a_from_binomial(Seq(P, [1, x, x**2 + x**3]))


def test_prime_index_reads_linear_coefficient():
    q = named_family("laguerre", 8)
    u = u_from_binomial(q)
    for p in (2, 3, 5, 7):
        assert u[p - 1] == q[p].payload.coefficient(1)


@pytest.mark.parametrize("m", range(1, 31))
def test_divisor_weight_integrality(m):
    for k in range(1, m + 1):
        if m % k == 0:
            j = m // k
            num, den = factorial(m), j * factorial(k) ** j
            assert num % den == 0
            assert divisor_weight(m, k) == (-1) ** j * (num // den)


@given(a=seqs(Z, 6, head=Z.one))
def test_pa_is_binomial_type(a):
    assert is_binomial_type(pa_polynomials(a))


@given(a=seqs(Z, 6, head=Z.one))
def test_integer_specialization(a):
    q = pa_polynomials(a)
    for m in range(5):
        assert at(q, m) == hurwitz_power(a, m)


@given(a=seqs(Z, 7, head=Z.one))
def test_coefficient_routes_agree(a):
    q = pa_polynomials(a)
    for n in range(7):
        for j in range(n + 1):
            assert pa_coefficient(a, n, j) == q[n].payload.coefficient(j)


@given(u=seqs(Z, 6))
def test_u_round_trip(u):
    q = binomial_from_u(u)
    assert is_binomial_type(q)
    assert u_from_binomial(q) == u
    assert pa_polynomials(a_from_binomial(q)) == q


@pytest.mark.parametrize("name", ["powers", "laguerre", "touchard", "abel", "pochhammer"])
def test_family_round_trip(name):
    q = named_family(name, 7)
    assert is_binomial_type(q)
    assert binomial_from_u(u_from_binomial(q)) == q


def test_unknown_family():
    with pytest.raises(ValueError):
        named_family("hermite", 4)

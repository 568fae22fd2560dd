from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import Q, Z
from hurwitz.combinatorics import (
    BellArguments,
    binomial,
    exponential_bell_partial,
    exponential_bell_table,
    ordinary_bell_complete,
    ordinary_bell_partial,
    stirling1_unsigned,
    stirling2,
)
from hurwitz.errors import RingMismatch
from hurwitz.rings import PolynomialsOver
from hurwitz.series import Seq, cauchy
from oracles import bell_numbers, count_permutations_with_cycles, count_set_partitions

# Z[x1][x2][x3][x4]
X = Z
for _name in ("x1", "x2", "x3", "x4"):
    X = PolynomialsOver(X, _name)
x1, x2, x3, x4 = (X(f"x{i}") for i in range(1, 5))
SYM = BellArguments(X, (x1, x2, x3, x4))


def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0


@pytest.mark.parametrize("n", range(7))
def test_stirling_against_brute_force(n):
    for k in range(n + 2):
        assert stirling2(n, k) == count_set_partitions(n, k)
        assert stirling1_unsigned(n, k) == count_permutations_with_cycles(n, k)


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling1_unsigned(4, 2) == 11
    assert all(stirling2(n, n) == 1 for n in range(11))
    assert stirling2(0, 0) == stirling1_unsigned(0, 0) == 1


def test_ordinary_bell_boundaries():
    assert ordinary_bell_partial(SYM, 0, 0) == X.one
    assert all(ordinary_bell_partial(SYM, n, 0).is_zero() for n in range(1, 5))
    assert all(ordinary_bell_partial(SYM, 0, k).is_zero() for k in range(1, 4))
    assert ordinary_bell_complete(SYM, 0) == X.one


def test_ordinary_bell_examples():
    assert ordinary_bell_partial(SYM, 3, 2) == 2 * x1 * x2
    assert ordinary_bell_complete(SYM, 2) == x1**2 + x2
    assert ordinary_bell_complete(SYM, 3) == x1**3 + 2 * x1 * x2 + x3
    for n in range(1, 5):
        assert ordinary_bell_partial(SYM, n, 1) == SYM.x(n)


def test_exponential_bell_examples():
    for n in range(6):
        assert exponential_bell_partial(SYM, n, n) == x1**n
    assert exponential_bell_partial(SYM, 3, 2) == 3 * x1 * x2
    assert exponential_bell_partial(SYM, 4, 2) == 4 * x1 * x3 + 3 * x2**2


def test_bell_ring_mismatch():
    with pytest.raises(RingMismatch):
        BellArguments(Z, (Q(1),))


@given(xs=st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_ordinary_bell_generating_identity(xs):
    args = BellArguments(Z, xs)
    base = Seq(Z, [0] + xs)
    power = Seq(Z, [1] + [0] * 6)
    for k in range(7):
        for n in range(k, 7):
            assert ordinary_bell_partial(args, n, k) == power[n]
        power = cauchy(power, base)


@given(xs=st.lists(st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)), min_size=8, max_size=8))
def test_exponential_vs_ordinary_over_q(xs):
    ehat = exponential_bell_table(BellArguments(Q, xs), 8)
    scaled = BellArguments(Q, [x / factorial(j + 1) for j, x in enumerate(xs)])
    for n in range(9):
        for k in range(n + 1):
            expect = ordinary_bell_partial(scaled, n, k) * Fraction(factorial(n), factorial(k))
            assert ehat[n][k] == expect


def test_exponential_row_sums_are_bell_numbers():
    table = exponential_bell_table(BellArguments(Z, [1] * 8), 8)
    sums = [sum((v.payload for v in row), 0) for row in table]
    assert sums == bell_numbers(9)

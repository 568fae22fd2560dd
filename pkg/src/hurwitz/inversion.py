"""Inverses for the Hurwitz product and for e.g.f. composition.

Recursive, division-free routines work over any ring. The Bell-polynomial
closed forms divide by factorials; they run over the rational lift of the
ring (Z -> Q, Z[x] -> Q[x], ...) and retract the result, or directly over
Z/nZ when the needed factorials are units there.
"""

from __future__ import annotations

from math import comb, factorial

from .combinatorics import (
    BellArguments,
    exponential_bell_row,
    ordinary_bell_complete,
    ordinary_bell_table,
)
from .errors import FactorialNotInvertible, LengthTooShort, NotAUnit, NotInvertibleForComposition
from .rings import Ring, RingValue, lift, rational_lift, retract
from .series import Seq, compose_egf, shift_minus, shift_plus


def hurwitz_inverse(a: Seq) -> Seq:
    """``a^{-1}`` with respect to the Hurwitz product; needs ``a_0`` a unit.

    ``b_0 = 1/a_0`` and ``b_n = -(1/a_0) sum_{h=1..n} C(n,h) a_h b_{n-h}``.
    """
    a0 = a.terms[0]
    if not a0.is_unit():
        raise NotAUnit(a0, a.ring)
    inv0 = a0.inverse()
    b = [inv0]
    for n in range(1, len(a)):
        acc = a.ring.zero
        for h in range(1, n + 1):
            acc = acc + a.terms[h] * b[n - h] * comb(n, h)
        b.append(-inv0 * acc)
    return Seq(a.ring, b)


def _factorial_ring(ring: Ring, nmax: int) -> Ring:
    """Rational lift of ``ring`` after checking ``0!..nmax!`` are units there."""
    target = rational_lift(ring)
    for k in range(nmax + 1):
        if not target.from_integer(factorial(k)).is_unit():
            raise FactorialNotInvertible(k, ring)
    return target


def _lift_seq(a: Seq, target: Ring) -> Seq:
    if a.ring == target:
        return a
    return Seq(target, [lift(t) for t in a.terms])


def _retract_seq(values, ring: Ring) -> Seq:
    return Seq(ring, [retract(v, ring) for v in values])


def _divide(v: RingValue, k: int) -> RingValue:
    return v * v.ring.from_integer(k).inverse()


def hurwitz_inverse_bell(a: Seq) -> Seq:
    """Closed form ``b_n = n! B_n(g_0, g_1, ...) / a_0``, ``g_j = -a_{j+1} / (a_0 (j+1)!)``.

    ``B_n`` is the complete ordinary Bell polynomial with ``x_j = g_{j-1}``.
    """
    a0 = a.terms[0]
    if not a0.is_unit():
        raise NotAUnit(a0, a.ring)
    N = len(a)
    L = _factorial_ring(a.ring, N - 1)
    al = _lift_seq(a, L)
    inv0 = al.terms[0].inverse()
    g = [-_divide(al.terms[j] * inv0, factorial(j)) for j in range(1, N)]
    args = BellArguments(L, tuple(g))
    out = [ordinary_bell_complete(args, n) * factorial(n) * inv0 for n in range(N)]
    return _retract_seq(out, a.ring)


def _check_comp_invertible(a: Seq) -> RingValue:
    if len(a) < 2:
        raise LengthTooShort(len(a), 2)
    a0, a1 = a.terms[0], a.terms[1]
    if not a0.is_zero() or not a1.is_unit():
        raise NotInvertibleForComposition(a0, a1)
    return a1


def comp_inverse(a: Seq) -> Seq:
    """Compositional inverse ``a^{(-1)}`` (series reversion); needs ``a_0 = 0``, ``a_1`` a unit.

    Solves ``(a o g)_n = [n == 1]`` term by term: in ``(a o g)_n`` the unknown
    ``g_n`` appears only as ``a_1 g_n``, so each step is one multiplication by
    ``1/a_1``. No factorials are inverted.
    """
    a1 = _check_comp_invertible(a)
    ring = a.ring
    inv1 = a1.inverse()
    N = len(a)
    g = [ring.zero, inv1]

    def x(j):
        return g[j]

    table = [[ring.one], [ring.zero, inv1]]
    for n in range(2, N):
        g.append(ring.zero)
        row = exponential_bell_row(table, x, n)
        acc = ring.zero
        for k in range(2, n + 1):
            acc = acc + a.terms[k] * row[k]
        g[n] = -acc * inv1
        row[1] = g[n]
        table.append(row)
    return Seq(ring, g)


def comp_inverse_closed(a: Seq) -> Seq:
    """Closed form of the compositional inverse via ordinary partial Bell polynomials.

    ``g_n = (n-1)!/a_1^n * sum_{j<n} (-1)^j C(n+j-1, j) B_{n-1,j}(abar_1, ...)``
    with ``abar_i = a_{i+1} / (a_1 (i+1)!)``.
    """
    _check_comp_invertible(a)
    N = len(a)
    L = _factorial_ring(a.ring, N - 1)
    al = _lift_seq(a, L)
    a1 = al.terms[1]
    inv1 = a1.inverse()
    abar = [_divide(al.terms[i + 1] * inv1, factorial(i + 1)) for i in range(1, N - 1)]
    table = ordinary_bell_table(BellArguments(L, tuple(abar)), max(N - 2, 0))
    out = [L.zero]
    for n in range(1, N):
        acc = L.zero
        for j in range(n):
            term = table[n - 1][j] * comb(n + j - 1, j)
            acc = acc - term if j % 2 else acc + term
        out.append(acc * factorial(n - 1) * inv1**n)
    return _retract_seq(out, a.ring)


def hurwitz_inverse_via_relinv(a: Seq) -> Seq:
    """``a^{-1} = shift_minus(comp_inverse(shift_plus(0, a))) o shift_plus(0, a)``.

    Works internally at length ``N + 1``; the result has length ``N``.
    """
    a0 = a.terms[0]
    if not a0.is_unit():
        raise NotAUnit(a0, a.ring)
    lam = shift_plus(a.ring.zero, a)
    return compose_egf(shift_minus(comp_inverse(lam)), lam)


def comp_inverse_via_cinv(a: Seq) -> Seq:
    """Compositional inverse of ``shift_plus(0, a)`` from ``a^{-1}``, length ``N + 1``.

    ``lam[n+1] = n! sum_{k<=n} (ainv[k]/k!) B_{n,k}(lam[1]/1!, lam[2]/2!, ...)``.
    """
    a0 = a.terms[0]
    if not a0.is_unit():
        raise NotAUnit(a0, a.ring)
    N = len(a)
    L = _factorial_ring(a.ring, N - 1)
    ainv = hurwitz_inverse(_lift_seq(a, L))
    scaled_inv = [_divide(ainv.terms[k], factorial(k)) for k in range(N)]
    lam = [L.zero]
    lam_bar: list[RingValue] = []
    for n in range(N):
        table = ordinary_bell_table(BellArguments(L, tuple(lam_bar)), n)
        acc = L.zero
        for k in range(n + 1):
            acc = acc + scaled_inv[k] * table[n][k]
        lam.append(acc * factorial(n))
        if n + 1 < N:
            lam_bar.append(_divide(lam[n + 1], factorial(n + 1)))
    return _retract_seq(lam, a.ring)

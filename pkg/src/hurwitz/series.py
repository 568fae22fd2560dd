"""Truncated sequences over a ring and the products defined on them.

A :class:`Seq` stores ``a_0, ..., a_{N-1}`` in the exponential convention:
term ``n`` is the coefficient of ``t^n / n!``. Binary operations return
length ``min(len(a), len(b))``; term ``n`` of every result depends only on
terms ``<= n`` of the inputs.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Callable, Iterable, Iterator

from .combinatorics import BellArguments, exponential_bell_table, ordinary_bell_table
from .errors import (
    FactorialNotInvertible,
    LengthTooShort,
    NotUnitHeaded,
    NotZeroOfOrderOne,
    RingMismatch,
)
from .rings import Ring, RingValue, coerce


class Seq:
    """An element of ``H_R`` truncated to ``N >= 1`` terms. Immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Iterable):
        terms = tuple(coerce(t, ring) for t in terms)
        if not terms:
            raise LengthTooShort(0, 1)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        self._check()

    def _check(self):
        pass

    def __setattr__(self, name, value):
        raise AttributeError("Seq is immutable")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[RingValue]:
        return iter(self.terms)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Seq(self.ring, self.terms[i])
        return self.terms[i]

    def __eq__(self, other):
        if not isinstance(other, Seq):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.ring}; " + ", ".join(str(t) for t in self.terms) + ")"

    def __add__(self, other: Seq) -> Seq:
        return seq_add(self, other)

    def __neg__(self) -> Seq:
        return seq_neg(self)

    def __sub__(self, other: Seq) -> Seq:
        return seq_add(self, seq_neg(other))

    def truncate(self, n: int) -> Seq:
        if n < 1:
            raise LengthTooShort(n, 1)
        if n > len(self):
            raise LengthTooShort(len(self), n)
        return Seq(self.ring, self.terms[:n])

    def map(self, f: Callable[[RingValue], RingValue], ring: Ring | None = None) -> Seq:
        return Seq(ring or self.ring, (f(t) for t in self.terms))

    def is_zero_of_order(self, m: int) -> bool:
        """True when the first ``m`` stored terms vanish."""
        return all(t.is_zero() for t in self.terms[:m])


class UnitSeq(Seq):
    """A sequence whose first term is 1 (an element of ``U_R``)."""

    __slots__ = ()

    def _check(self):
        if self.terms[0] != self.ring.one:
            raise NotUnitHeaded(self.terms[0])


def _same_ring(a: Seq, b: Seq) -> Ring:
    if a.ring != b.ring:
        raise RingMismatch(a.ring, b.ring)
    return a.ring


def require_unit_headed(a: Seq) -> UnitSeq:
    if isinstance(a, UnitSeq):
        return a
    return UnitSeq(a.ring, a.terms)


# -- named sequences ---------------------------------------------------------


def zeros(ring: Ring, n: int) -> Seq:
    return Seq(ring, [0] * n)


def delta(ring: Ring, n: int) -> Seq:
    """``(1, 0, 0, ...)``, the identity of the Hurwitz and Cauchy products."""
    return Seq(ring, [1] + [0] * (n - 1))


def ident(ring: Ring, n: int) -> Seq:
    """``(0, 1, 0, ...)``, the identity of e.g.f. composition (needs ``n >= 2``)."""
    if n < 2:
        raise LengthTooShort(n, 2)
    return Seq(ring, [0, 1] + [0] * (n - 2))


def ones(ring: Ring, n: int) -> Seq:
    """``(1, 1, 1, ...)``, the Hadamard identity (e.g.f. ``e^t``)."""
    return Seq(ring, [1] * n)


def beta(r: RingValue, n: int) -> Seq:
    """``(r^n)``, e.g.f. ``e^{rt}``."""
    return Seq(r.ring, [r**k for k in range(n)])


def factorials(ring: Ring, n: int) -> Seq:
    return Seq(ring, [factorial(k) for k in range(n)])


# -- additive structure and products ----------------------------------------


def seq_add(a: Seq, b: Seq) -> Seq:
    ring = _same_ring(a, b)
    return Seq(ring, [x + y for x, y in zip(a.terms, b.terms)])


def seq_neg(a: Seq) -> Seq:
    return Seq(a.ring, [-x for x in a.terms])


def hadamard(a: Seq, b: Seq) -> Seq:
    ring = _same_ring(a, b)
    return Seq(ring, [x * y for x, y in zip(a.terms, b.terms)])


def hurwitz(a: Seq, b: Seq) -> Seq:
    """Binomial convolution ``c_n = sum_h C(n, h) a_h b_{n-h}``."""
    ring = _same_ring(a, b)
    n = min(len(a), len(b))
    out = []
    for m in range(n):
        acc = ring.zero
        for h in range(m + 1):
            x, y = a.terms[h], b.terms[m - h]
            if x.is_zero() or y.is_zero():
                continue
            acc = acc + x * y * comb(m, h)
        out.append(acc)
    return Seq(ring, out)


def cauchy(a: Seq, b: Seq) -> Seq:
    """Ordinary convolution ``c_n = sum_h a_h b_{n-h}``."""
    ring = _same_ring(a, b)
    n = min(len(a), len(b))
    out = []
    for m in range(n):
        acc = ring.zero
        for h in range(m + 1):
            acc = acc + a.terms[h] * b.terms[m - h]
        out.append(acc)
    return Seq(ring, out)


def gamma(a: Seq) -> Seq:
    """Scale term ``n`` by ``n!``; carries Cauchy products to Hurwitz products."""
    return Seq(a.ring, [t * factorial(n) for n, t in enumerate(a.terms)])


def gamma_inv(a: Seq) -> Seq:
    out = []
    for n, t in enumerate(a.terms):
        f = a.ring.from_integer(factorial(n))
        if not f.is_unit():
            raise FactorialNotInvertible(n, a.ring)
        out.append(t * f.inverse())
    return Seq(a.ring, out)


def shift_minus(a: Seq) -> Seq:
    """``(a_1, a_2, ...)``: drops the first term (e.g.f. derivative)."""
    if len(a) < 2:
        raise LengthTooShort(len(a), 2)
    return Seq(a.ring, a.terms[1:])


def shift_plus(u, a: Seq) -> Seq:
    """``(u, a_0, a_1, ...)``: one term longer (e.g.f. integral plus ``u``)."""
    return Seq(a.ring, (coerce(u, a.ring),) + a.terms)


def _inner_check(a: Seq, b: Seq) -> Ring:
    ring = _same_ring(a, b)
    if not b.terms[0].is_zero():
        raise NotZeroOfOrderOne(b.terms[0])
    return ring


def compose_egf(a: Seq, b: Seq) -> Seq:
    """``a o b``: e.g.f. composition ``A(B(t))``; requires ``b_0 = 0``.

    ``d_n = sum_k a_k * Bh_{n,k}(b_1, b_2, ...)``.
    """
    ring = _inner_check(a, b)
    n = min(len(a), len(b))
    table = exponential_bell_table(BellArguments(ring, b.terms[1:n]), n - 1)
    out = []
    for m in range(n):
        acc = ring.zero
        for k in range(m + 1):
            acc = acc + a.terms[k] * table[m][k]
        out.append(acc)
    return Seq(ring, out)


def compose_ogf(a: Seq, b: Seq) -> Seq:
    """o.g.f. composition: ``c_n = sum_k a_k * B_{n,k}(b_1, b_2, ...)``; requires ``b_0 = 0``."""
    ring = _inner_check(a, b)
    n = min(len(a), len(b))
    table = ordinary_bell_table(BellArguments(ring, b.terms[1:n]), n - 1)
    out = []
    for m in range(n):
        acc = ring.zero
        for k in range(m + 1):
            acc = acc + a.terms[k] * table[m][k]
        out.append(acc)
    return Seq(ring, out)


def hurwitz_power(a: Seq, m: int) -> Seq:
    """``a`` star-multiplied by itself ``m >= 0`` times."""
    if m < 0:
        raise ValueError("hurwitz_power needs a nonnegative exponent; use hurwitz_inverse")
    result = delta(a.ring, len(a))
    base = a
    while m:
        if m & 1:
            result = hurwitz(result, base)
        base = hurwitz(base, base)
        m >>= 1
    return result


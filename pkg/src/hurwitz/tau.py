"""The basis ``b^(1), b^(2), ...`` of ``(U_R, *)`` and the isomorphism tau.

``b^(1) = (1, 1, 1, ...)`` and, for ``i >= 2``, ``b^(i)`` has ones at
positions 0 and i only, so its e.g.f. is ``1 + t^i / i!``. ``tau`` sends
``x = (x_0, ..., x_{n-2})`` to the Hurwitz product of the powers
``(b^(k))^{x_{k-1}}`` truncated to length ``n``; the exponent may be any
ring element (for instance a polynomial).
"""

from __future__ import annotations

from functools import reduce
from math import factorial

from .errors import LengthMismatch, LengthTooShort
from .rings import Ring, RingValue, coerce, falling
from .series import Seq, UnitSeq, hurwitz, require_unit_headed


def basis_element(i: int, ring: Ring, n: int) -> UnitSeq:
    """``b^(i)`` truncated to length ``n``."""
    if i < 1:
        raise ValueError("basis index starts at 1")
    if i == 1:
        return UnitSeq(ring, [1] * n)
    return UnitSeq(ring, [1 if k in (0, i) else 0 for k in range(n)])


def basis_coefficient(i: int, k: int) -> int:
    """``(ik)! / (k! (i!)^k)``: ways to split ``ik`` labelled items into ``k`` blocks of size ``i``."""
    num = factorial(i * k)
    den = factorial(k) * factorial(i) ** k
    q, r = divmod(num, den)
    assert r == 0, (i, k)
    return q


def basis_power(i: int, e, n: int, ring: Ring | None = None) -> UnitSeq:
    """``(b^(i))^e`` truncated to length ``n``, for ``e`` in any ring.

    ``i = 1``: term ``m`` is ``e^m``. ``i >= 2``: term ``m`` vanishes unless
    ``m = k i``, where it is ``basis_coefficient(i, k) * e (e-1) ... (e-k+1)``.
    """
    if ring is None:
        ring = e.ring
    e = coerce(e, ring)
    if i == 1:
        return UnitSeq(ring, [e**m for m in range(n)])
    terms = [ring.zero] * n
    for k in range(0, (n - 1) // i + 1):
        terms[k * i] = falling(e, k) * basis_coefficient(i, k)
    return UnitSeq(ring, terms)


def tau_forward(x: Seq, n: int | None = None) -> UnitSeq:
    """``tau^(n)(x)``: the product of ``basis_power(k, x_{k-1}, n)`` for ``k = 1..n-1``."""
    if n is None:
        n = len(x) + 1
    if n < 2:
        raise LengthTooShort(n, 2)
    if len(x) != n - 1:
        raise LengthMismatch(len(x), n - 1)
    factors = [basis_power(k, x.terms[k - 1], n) for k in range(1, n)]
    return require_unit_headed(reduce(hurwitz, factors))


def tau_inverse(a: Seq) -> Seq:
    """The unique ``x`` of length ``len(a) - 1`` with ``tau_forward(x) = a``.

    ``x_{i-1}`` enters term ``i`` of ``tau(x)`` linearly with coefficient 1 and
    does not enter earlier terms, so it equals ``a_i`` minus term ``i`` of
    ``tau`` applied to the prefix found so far (padded with zeros).
    """
    a = require_unit_headed(a)
    n = len(a)
    if n < 2:
        raise LengthTooShort(n, 2)
    ring = a.ring
    x: list[RingValue] = [a.terms[1]]
    for i in range(2, n):
        probe = Seq(ring, x + [ring.zero])
        x.append(a.terms[i] - tau_forward(probe, i + 1).terms[i])
    return Seq(ring, x)

"""Binomial-type polynomial sequences.

A sequence of polynomials ``q = (q_0, q_1, ...)`` in ``R[x]`` is of binomial
type when ``q_0 = 1`` and ``q(x + y) = q(x) * q(y)`` under the Hurwitz
product. Every such family is ``tau(x u)`` for exactly one ``u`` in ``H_R``,
and also ``a^x`` for ``a = q(1)``. This module moves between the three
descriptions ``u``, ``a`` and ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .combinatorics import BellArguments, exponential_bell_table, stirling1_table, stirling2_table
from .errors import LengthTooShort, NonzeroConstantTerm, NotBinomialType, NotUnitHeaded
from .errors import IndexOutOfRange
from .rings import (
    Integers,
    PolynomialsOver,
    Ring,
    RingValue,
    embed,
    falling,
    poly_eval,
    poly_substitute,
)
from .series import Seq, UnitSeq, hurwitz, require_unit_headed
from .tau import tau_forward


def poly_ring(base: Ring, var: str = "x") -> PolynomialsOver:
    return PolynomialsOver(base, var)


def _poly_base(q: Seq) -> PolynomialsOver:
    if not isinstance(q.ring, PolynomialsOver):
        raise TypeError(f"expected a sequence of polynomials, got ring {q.ring}")
    return q.ring


def pa_polynomials(a: Seq, n: int | None = None, var: str = "x") -> UnitSeq:
    """``p^(a)(x) = a^x``: term ``m`` is ``sum_k x(x-1)...(x-k+1) Bh_{m,k}(a_1, a_2, ...)``."""
    a = require_unit_headed(a)
    n = len(a) if n is None else n
    if n > len(a):
        raise LengthTooShort(len(a), n)
    P = poly_ring(a.ring, var)
    x = P.gen()
    table = exponential_bell_table(BellArguments(a.ring, a.terms[1:n]), n - 1)
    falls = [falling(x, k) for k in range(n)]
    out = []
    for m in range(n):
        acc = P.zero
        for k in range(m + 1):
            if not table[m][k].is_zero():
                acc = acc + falls[k] * embed(table[m][k], P)
        out.append(acc)
    return UnitSeq(P, out)


def pa_coefficient(a: Seq, n: int, j: int) -> RingValue:
    """Coefficient of ``x^j`` in ``p_n^(a)(x)`` through the Stirling expansion
    ``sum_h (-1)^h s(h+j, j) Bh_{n,h+j}(a_1, ...)`` with unsigned first-kind ``s``."""
    a = require_unit_headed(a)
    if not 0 <= j <= n:
        raise IndexOutOfRange(n, j)
    if n >= len(a):
        raise LengthTooShort(len(a), n + 1)
    table = exponential_bell_table(BellArguments(a.ring, a.terms[1 : n + 1]), n)
    s1 = stirling1_table(n)
    acc = a.ring.zero
    for h in range(n - j + 1):
        term = table[n][h + j] * s1[h + j][j]
        acc = acc - term if h % 2 else acc + term
    return acc


def binomial_from_u(u: Seq, n: int | None = None, var: str = "x") -> UnitSeq:
    """``tau(x u)`` truncated to length ``n`` (default ``len(u) + 1``)."""
    n = len(u) + 1 if n is None else n
    if n < 2:
        raise LengthTooShort(n, 2)
    if len(u) < n - 1:
        raise LengthTooShort(len(u), n - 1)
    P = poly_ring(u.ring, var)
    x = P.gen()
    xu = Seq(P, [x * embed(t, P) for t in u.terms[: n - 1]])
    return tau_forward(xu, n)


def divisor_weight(m: int, k: int) -> int:
    """``(-1)^(m/k) m! / ((m/k) (k!)^(m/k))`` as an exact integer, for ``k | m``."""
    j = m // k
    multinomial, r = divmod(factorial(m), factorial(k) ** j * factorial(j))
    assert r == 0, (m, k)
    w = multinomial * factorial(j - 1)
    return -w if j % 2 else w


def _check_family(q: Seq) -> PolynomialsOver:
    P = _poly_base(q)
    if q.terms[0] != P.one:
        raise NotUnitHeaded(q.terms[0])
    for n in range(1, len(q)):
        if not q.terms[n].payload.coefficient(0).is_zero():
            raise NonzeroConstantTerm(n, q.terms[n])
    return P


def u_from_binomial(q: Seq, verify: bool = True) -> Seq:
    """Recover ``u`` (length ``len(q) - 1``) with ``tau(x u) = q``.

    ``u_{m-1} = c_{1,m} + sum_{k | m, 1 < k < m} divisor_weight(m, k) u_{k-1}``
    where ``c_{1,m}`` is the coefficient of ``x`` in ``q_m``. Only those
    coefficients are read; with ``verify`` the whole family is regenerated
    from ``u`` and compared, raising NotBinomialType on the first mismatch.
    """
    P = _check_family(q)
    if len(q) < 2:
        raise LengthTooShort(len(q), 2)
    R = P.base
    u: list[RingValue] = []
    for m in range(1, len(q)):
        acc = q.terms[m].payload.coefficient(1)
        for k in range(2, m):
            if m % k == 0:
                acc = acc + u[k - 1] * divisor_weight(m, k)
        u.append(acc)
    useq = Seq(R, u)
    if verify:
        again = binomial_from_u(useq, len(q), P.var)
        for i, (lhs, rhs) in enumerate(zip(q.terms, again.terms)):
            if lhs != rhs:
                raise NotBinomialType(i, lhs, rhs)
    return useq


@dataclass(frozen=True)
class BinomialCheck:
    """Outcome of :func:`is_binomial_type`; falsy on failure.

    On failure ``index`` is the first offending term, ``lhs`` is ``q_n(x+y)``
    and ``rhs`` is ``(q(x) * q(y))_n``.
    """

    ok: bool
    index: int | None = None
    lhs: RingValue | None = None
    rhs: RingValue | None = None

    def __bool__(self) -> bool:
        return self.ok


def _fresh_name(ring: Ring, stem: str = "y") -> str:
    name = stem
    while name in ring.variables():
        name += "_"
    return name


def is_binomial_type(q: Seq) -> BinomialCheck:
    """Check ``q_n(x + y) = sum_h C(n, h) q_h(x) q_{n-h}(y)`` inside ``R[x][y]``."""
    P = _poly_base(q)
    if q.terms[0] != P.one:
        return BinomialCheck(False, 0, q.terms[0], P.one)
    S = PolynomialsOver(P, _fresh_name(P))
    X = embed(P.gen(), S)
    Y = S.gen()
    lhs = [poly_substitute(t.payload, X + Y) for t in q.terms]
    qx = Seq(S, [embed(t, S) for t in q.terms])
    qy = Seq(S, [poly_substitute(t.payload, Y) for t in q.terms])
    rhs = hurwitz(qx, qy)
    for n, (l, r) in enumerate(zip(lhs, rhs.terms)):
        if l != r:
            return BinomialCheck(False, n, l, r)
    return BinomialCheck(True)


def a_from_binomial(q: Seq) -> UnitSeq:
    """``a = q(1)``, so that ``pa_polynomials(a) == q``."""
    check = is_binomial_type(q)
    if not check:
        raise NotBinomialType(check.index, check.lhs, check.rhs)
    P = _poly_base(q)
    return UnitSeq(P.base, [poly_eval(t.payload, P.base.one) for t in q.terms])


# -- named families -----------------------------------------------------------


def powers(n: int, base: Ring | None = None) -> UnitSeq:
    """``x^m``."""
    P = poly_ring(base or Integers())
    x = P.gen()
    return UnitSeq(P, [x**m for m in range(n)])


def laguerre(n: int, base: Ring | None = None) -> UnitSeq:
    """``L_m(x) = sum_{k=1..m} m!/k! C(m-1, k-1) (-x)^k`` and ``L_0 = 1``."""
    P = poly_ring(base or Integers())
    out = [P.one]
    for m in range(1, n):
        coeffs = [0] + [(-1) ** k * (factorial(m) // factorial(k)) * comb(m - 1, k - 1) for k in range(1, m + 1)]
        out.append(P.from_coefficients(coeffs))
    return UnitSeq(P, out)


def touchard(n: int, base: Ring | None = None) -> UnitSeq:
    """``T_m(x) = sum_k S2(m, k) x^k``."""
    P = poly_ring(base or Integers())
    s2 = stirling2_table(max(n - 1, 0))
    return UnitSeq(P, [P.from_coefficients(s2[m]) for m in range(n)])


def pochhammer(n: int, base: Ring | None = None) -> UnitSeq:
    """Rising factorials ``x (x+1) ... (x+m-1)``."""
    P = poly_ring(base or Integers())
    x = P.gen()
    out = [P.one]
    for m in range(1, n):
        out.append(out[-1] * (x + (m - 1)))
    return UnitSeq(P, out)


def abel(n: int, base: Ring | None = None, param: str = "a") -> UnitSeq:
    """``A_m(x, a) = x (x - a m)^(m-1)`` over ``base[a][x]`` with a symbolic ``a``."""
    A = PolynomialsOver(base or Integers(), param)
    P = poly_ring(A)
    x = P.gen()
    a = embed(A.gen(), P)
    out = [P.one]
    for m in range(1, n):
        out.append(x * (x - a * m) ** (m - 1))
    return UnitSeq(P, out)


FAMILIES = {
    "powers": powers,
    "laguerre": laguerre,
    "touchard": touchard,
    "abel": abel,
    "pochhammer": pochhammer,
}


def named_family(name: str, n: int) -> UnitSeq:
    """One of ``powers``, ``laguerre``, ``touchard``, ``abel``, ``pochhammer`` at length ``n``."""
    try:
        return FAMILIES[name](n)
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None

"""Exact commutative rings with identity.

Concrete rings are small frozen dataclasses (``Integers``, ``Rationals``,
``IntegersMod``, ``PolynomialsOver``, ``LaurentOver``). Their elements are
:class:`RingValue` objects carrying the ring and a canonical payload:

============================  ==========================================
ring                          payload
============================  ==========================================
``Integers()``                ``int``
``Rationals()``               ``fractions.Fraction`` (always reduced)
``IntegersMod(n)``            ``int`` in ``[0, n)``
``PolynomialsOver(R, "x")``   :class:`Polynomial` with coefficients in R
``LaurentOver(R, "x")``       :class:`LaurentPolynomial`
============================  ==========================================

Canonical payloads make ``==`` structural equality. Everything is exact.

>>> Zx = PolynomialsOver(Integers(), "x")
>>> x = Zx.gen()
>>> (x + 1) * (x - 1)
RingValue(Poly:x:Z, x^2 - 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .errors import NotAUnit, RetractFailed, RingMismatch


class Ring:
    """Common behaviour of every concrete ring descriptor.

    Subclasses implement the payload-level primitives ``_add``, ``_neg``,
    ``_mul``, ``_is_zero``, ``_is_unit``, ``_inverse`` and ``_from_int``.
    """

    def __call__(self, x) -> RingValue:
        return coerce(x, self)

    @property
    def zero(self) -> RingValue:
        return RingValue(self, self._from_int(0))

    @property
    def one(self) -> RingValue:
        return RingValue(self, self._from_int(1))

    def from_integer(self, k: int) -> RingValue:
        return RingValue(self, self._from_int(int(k)))

    def variables(self) -> tuple[str, ...]:
        """Indeterminate names, outermost first."""
        return ()

    @property
    def ground(self) -> Ring:
        """The innermost coefficient ring (Z, Q or Z/nZ)."""
        return self

    def gen(self, name: str | None = None) -> RingValue:
        raise ValueError(f"{self} has no indeterminate {name!r}")

    def __repr__(self) -> str:
        return str(self)

    # payload primitives
    def _from_int(self, k: int):
        raise NotImplementedError

    def _add(self, p, q):
        raise NotImplementedError

    def _neg(self, p):
        raise NotImplementedError

    def _mul(self, p, q):
        raise NotImplementedError

    def _is_zero(self, p) -> bool:
        raise NotImplementedError

    def _is_unit(self, p) -> bool:
        raise NotImplementedError

    def _inverse(self, p):
        raise NotImplementedError


@dataclass(frozen=True, repr=False)
class Integers(Ring):
    def __str__(self) -> str:
        return "Z"

    def _from_int(self, k):
        return k

    def _add(self, p, q):
        return p + q

    def _neg(self, p):
        return -p

    def _mul(self, p, q):
        return p * q

    def _is_zero(self, p):
        return p == 0

    def _is_unit(self, p):
        return p in (1, -1)

    def _inverse(self, p):
        return p


@dataclass(frozen=True, repr=False)
class Rationals(Ring):
    def __str__(self) -> str:
        return "Q"

    def _from_int(self, k):
        return Fraction(k)

    def _add(self, p, q):
        return p + q

    def _neg(self, p):
        return -p

    def _mul(self, p, q):
        return p * q

    def _is_zero(self, p):
        return p == 0

    def _is_unit(self, p):
        return p != 0

    def _inverse(self, p):
        return 1 / p


@dataclass(frozen=True, repr=False)
class IntegersMod(Ring):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"IntegersMod needs a modulus n >= 2, got {self.n!r}")

    def __str__(self) -> str:
        return f"Zmod:{self.n}"

    def _from_int(self, k):
        return k % self.n

    def _add(self, p, q):
        return (p + q) % self.n

    def _neg(self, p):
        return (-p) % self.n

    def _mul(self, p, q):
        return (p * q) % self.n

    def _is_zero(self, p):
        return p == 0

    def _is_unit(self, p):
        return gcd(p, self.n) == 1

    def _inverse(self, p):
        return pow(p, -1, self.n)


def _strip(coeffs: Sequence[RingValue]) -> tuple[RingValue, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``.

    The zero polynomial has no coefficients and ``degree`` ``None``.
    """

    base: Ring
    coeffs: tuple[RingValue, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if c.ring != self.base:
                raise RingMismatch(c.ring, self.base, "polynomial coefficient")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, i: int) -> RingValue:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.base.zero

    def is_zero(self) -> bool:
        return not self.coeffs


def _check_base(p: Polynomial, q: Polynomial) -> None:
    if p.base != q.base:
        raise RingMismatch(p.base, q.base)


def _add_lists(xs, ys, zero):
    n = max(len(xs), len(ys))
    return [
        (xs[i] if i < len(xs) else zero) + (ys[i] if i < len(ys) else zero) for i in range(n)
    ]


def _mul_lists(xs, ys, zero):
    if not xs or not ys:
        return []
    out = [zero] * (len(xs) + len(ys) - 1)
    for i, a in enumerate(xs):
        if a.is_zero():
            continue
        for j, b in enumerate(ys):
            out[i + j] = out[i + j] + a * b
    return out


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_base(p, q)
    return Polynomial(p.base, tuple(_add_lists(p.coeffs, q.coeffs, p.base.zero)))


def poly_neg(p: Polynomial) -> Polynomial:
    return Polynomial(p.base, tuple(-c for c in p.coeffs))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_base(p, q)
    return Polynomial(p.base, tuple(_mul_lists(p.coeffs, q.coeffs, p.base.zero)))


def poly_eval(p: Polynomial, at: RingValue) -> RingValue:
    """Evaluate ``p`` at a point of its coefficient ring (Horner)."""
    if at.ring != p.base:
        raise RingMismatch(at.ring, p.base, "evaluation point")
    acc = p.base.zero
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc


def poly_substitute(p: Polynomial, at: RingValue) -> RingValue:
    """Evaluate ``p`` at ``at`` lying in any ring that contains ``p.base``.

    Used to substitute ``x -> x + y`` inside ``R[x][y]``.
    """
    acc = at.ring.zero
    for c in reversed(p.coeffs):
        acc = acc * at + embed(c, at.ring)
    return acc


@dataclass(frozen=True, repr=False)
class PolynomialsOver(Ring):
    """``base[var]``. Nests to any depth with distinct variable names."""

    base: Ring
    var: str = "x"

    def __post_init__(self):
        if not self.var.isidentifier():
            raise ValueError(f"bad variable name {self.var!r}")
        if self.var in self.base.variables():
            raise ValueError(f"variable {self.var!r} already used by {self.base}")

    def __str__(self) -> str:
        return f"Poly:{self.var}:{self.base}"

    def variables(self):
        return (self.var,) + self.base.variables()

    @property
    def ground(self):
        return self.base.ground

    def gen(self, name=None):
        if name is None or name == self.var:
            return RingValue(self, Polynomial(self.base, (self.base.zero, self.base.one)))
        return embed(self.base.gen(name), self)

    def constant(self, c: RingValue) -> RingValue:
        return RingValue(self, Polynomial(self.base, (c,)))

    def from_coefficients(self, coeffs: Sequence) -> RingValue:
        return RingValue(self, Polynomial(self.base, tuple(coerce(c, self.base) for c in coeffs)))

    def _from_int(self, k):
        return Polynomial(self.base, (self.base.from_integer(k),))

    def _add(self, p, q):
        return poly_add(p, q)

    def _neg(self, p):
        return poly_neg(p)

    def _mul(self, p, q):
        return poly_mul(p, q)

    def _is_zero(self, p):
        return p.is_zero()

    def _is_unit(self, p):
        # Only unit constants; nilpotent-perturbed units over non-reduced bases are not detected.
        return len(p.coeffs) == 1 and p.coeffs[0].is_unit()

    def _inverse(self, p):
        return Polynomial(self.base, (p.coeffs[0].inverse(),))


@dataclass(frozen=True)
class LaurentPolynomial:
    """``sum(coeffs[i] * var**(low + i))`` with a nonzero lowest coefficient."""

    base: Ring
    coeffs: tuple[RingValue, ...] = ()
    low: int = 0

    def __post_init__(self):
        cs = list(_strip(self.coeffs))
        low = self.low
        while cs and cs[0].is_zero():
            cs.pop(0)
            low += 1
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "low", low if cs else 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> RingValue:
        k = i - self.low
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.base.zero


@dataclass(frozen=True, repr=False)
class LaurentOver(Ring):
    """``base[var, 1/var]``; lets a symbol act as a unit."""

    base: Ring
    var: str = "x"

    def __post_init__(self):
        if not self.var.isidentifier():
            raise ValueError(f"bad variable name {self.var!r}")
        if self.var in self.base.variables():
            raise ValueError(f"variable {self.var!r} already used by {self.base}")

    def __str__(self) -> str:
        return f"Laurent:{self.var}:{self.base}"

    def variables(self):
        return (self.var,) + self.base.variables()

    @property
    def ground(self):
        return self.base.ground

    def gen(self, name=None):
        if name is None or name == self.var:
            return RingValue(self, LaurentPolynomial(self.base, (self.base.one,), 1))
        return embed(self.base.gen(name), self)

    def constant(self, c: RingValue) -> RingValue:
        return RingValue(self, LaurentPolynomial(self.base, (c,), 0))

    def _from_int(self, k):
        return LaurentPolynomial(self.base, (self.base.from_integer(k),), 0)

    def _align(self, p, q):
        low = min(p.low, q.low)
        z = self.base.zero
        xs = [z] * (p.low - low) + list(p.coeffs)
        ys = [z] * (q.low - low) + list(q.coeffs)
        return xs, ys, low

    def _add(self, p, q):
        if p.is_zero():
            return q
        if q.is_zero():
            return p
        xs, ys, low = self._align(p, q)
        return LaurentPolynomial(self.base, tuple(_add_lists(xs, ys, self.base.zero)), low)

    def _neg(self, p):
        return LaurentPolynomial(self.base, tuple(-c for c in p.coeffs), p.low)

    def _mul(self, p, q):
        prod = _mul_lists(p.coeffs, q.coeffs, self.base.zero)
        return LaurentPolynomial(self.base, tuple(prod), p.low + q.low)

    def _is_zero(self, p):
        return p.is_zero()

    def _is_unit(self, p):
        return len(p.coeffs) == 1 and p.coeffs[0].is_unit()

    def _inverse(self, p):
        return LaurentPolynomial(self.base, (p.coeffs[0].inverse(),), -p.low)


class RingValue:
    """An element of a :class:`Ring`. Immutable; ints coerce automatically."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("RingValue is immutable")

    def _other(self, other) -> RingValue:
        if isinstance(other, RingValue):
            if other.ring != self.ring:
                raise RingMismatch(self.ring, other.ring)
            return other
        return coerce(other, self.ring)

    def __add__(self, other):
        other = self._other(other)
        return RingValue(self.ring, self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return RingValue(self.ring, self.ring._neg(self.payload))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        return RingValue(self.ring, self.ring._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.payload)

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.payload)

    def inverse(self) -> RingValue:
        if not self.is_unit():
            raise NotAUnit(self, self.ring)
        return RingValue(self.ring, self.ring._inverse(self.payload))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, RingValue):
            return self.ring == other.ring and self.payload == other.payload
        try:
            other = coerce(other, self.ring)
        except (TypeError, RingMismatch, ValueError):
            return NotImplemented
        return self.payload == other.payload

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __str__(self) -> str:
        return format_value(self)

    def __repr__(self) -> str:
        return f"RingValue({self.ring}, {format_value(self)})"


def ring_from_integer(r: Ring, k: int) -> RingValue:
    """Image of ``k`` under the unital map Z -> r."""
    return r.from_integer(k)


def ring_is_unit(v: RingValue) -> bool:
    return v.is_unit()


def ring_inverse(v: RingValue) -> RingValue:
    return v.inverse()


def embed(value: RingValue, target: Ring) -> RingValue:
    """Constant embedding of ``value`` into ``target`` (e.g. Z -> Z[x][y], Z -> Q)."""
    if value.ring == target:
        return value
    if isinstance(target, (PolynomialsOver, LaurentOver)):
        return target.constant(embed(value, target.base))
    if isinstance(target, Rationals) and isinstance(value.ring, Integers):
        return RingValue(target, Fraction(value.payload))
    raise RingMismatch(value.ring, target, "no constant embedding")


def coerce(x, ring: Ring) -> RingValue:
    """Turn ``x`` (int, Fraction, str literal or RingValue) into an element of ``ring``."""
    if isinstance(x, RingValue):
        return embed(x, ring)
    if isinstance(x, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(x, int):
        return ring.from_integer(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return ring.from_integer(x.numerator)
        den = ring.from_integer(x.denominator)
        if not den.is_unit():
            raise RingMismatch(f"Fraction({x})", ring, "denominator not invertible")
        return ring.from_integer(x.numerator) * den.inverse()
    if isinstance(x, str):
        from .literals import parse_literal

        return parse_literal(x, ring)
    raise TypeError(f"cannot coerce {type(x).__name__} into {ring}")


# -- rational lift / retract -------------------------------------------------


def rational_lift(ring: Ring) -> Ring:
    """Replace the ground ring Z by Q, keeping the polynomial tower."""
    if isinstance(ring, Integers):
        return Rationals()
    if isinstance(ring, PolynomialsOver):
        return PolynomialsOver(rational_lift(ring.base), ring.var)
    if isinstance(ring, LaurentOver):
        return LaurentOver(rational_lift(ring.base), ring.var)
    return ring


def lift(value: RingValue) -> RingValue:
    ring = value.ring
    target = rational_lift(ring)
    if target == ring:
        return value
    if isinstance(ring, Integers):
        return RingValue(target, Fraction(value.payload))
    p = value.payload
    coeffs = tuple(lift(c) for c in p.coeffs)
    if isinstance(ring, PolynomialsOver):
        return RingValue(target, Polynomial(target.base, coeffs))
    return RingValue(target, LaurentPolynomial(target.base, coeffs, p.low))


def retract(value: RingValue, ring: Ring) -> RingValue:
    """Inverse of :func:`lift`; raises RetractFailed on a non-integral value."""
    if value.ring == ring:
        return value
    if rational_lift(ring) != value.ring:
        raise RingMismatch(value.ring, ring, "not the rational lift")
    if isinstance(ring, Integers):
        q = value.payload
        if q.denominator != 1:
            raise RetractFailed(value, ring)
        return RingValue(ring, q.numerator)
    p = value.payload
    try:
        coeffs = tuple(retract(c, ring.base) for c in p.coeffs)
    except RetractFailed:
        raise RetractFailed(value, ring) from None
    if isinstance(ring, PolynomialsOver):
        return RingValue(ring, Polynomial(ring.base, coeffs))
    return RingValue(ring, LaurentPolynomial(ring.base, coeffs, p.low))


def falling(e: RingValue, k: int) -> RingValue:
    """Falling factorial ``e (e-1) ... (e-k+1)``."""
    acc = e.ring.one
    for h in range(k):
        acc = acc * (e - h)
    return acc


# -- descriptor strings and canonical literals -------------------------------


def parse_ring(desc: str) -> Ring:
    """Parse ``"Z"``, ``"Q"``, ``"Zmod:<n>"``, ``"Poly:<var>:<base>"``, ``"Laurent:<var>:<base>"``."""
    desc = desc.strip()
    if desc == "Z":
        return Integers()
    if desc == "Q":
        return Rationals()
    head, _, rest = desc.partition(":")
    if head == "Zmod":
        if not rest.isdigit():
            raise ValueError(f"bad modulus in ring descriptor {desc!r}")
        return IntegersMod(int(rest))
    if head in ("Poly", "Laurent"):
        var, sep, base = rest.partition(":")
        if not sep or not var:
            raise ValueError(f"bad ring descriptor {desc!r}")
        cls = PolynomialsOver if head == "Poly" else LaurentOver
        return cls(parse_ring(base), var)
    raise ValueError(f"unknown ring descriptor {desc!r}")


def monomials(value: RingValue) -> Iterator[tuple[RingValue, tuple[int, ...]]]:
    """Yield ``(ground coefficient, exponents)`` pairs, exponents aligned with ``variables()``.

    Order is lexicographically descending in the exponents, outermost variable first.
    """
    ring = value.ring
    if isinstance(ring, (PolynomialsOver, LaurentOver)):
        p = value.payload
        low = getattr(p, "low", 0)
        for i in range(len(p.coeffs) - 1, -1, -1):
            for g, exps in monomials(p.coeffs[i]):
                yield g, (low + i,) + exps
    elif not value.is_zero():
        yield value, ()


def _format_ground(g: RingValue) -> str:
    return str(g.payload)


def format_value(value: RingValue) -> str:
    names = value.ring.variables()
    parts = []
    for g, exps in monomials(value):
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        coef = _format_ground(g)
        if not factors:
            parts.append(coef)
        elif coef == "1":
            parts.append("*".join(factors))
        elif coef == "-1":
            parts.append("-" + "*".join(factors))
        else:
            parts.append(coef + "*" + "*".join(factors))
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += " - " + part[1:] if part.startswith("-") else " + " + part
    return out

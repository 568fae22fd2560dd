"""Endomorphisms of the Hurwitz series ring described as plain data.

``apply(spec, a)`` evaluates a transform; ``invert_spec`` returns the spec of
the inverse automorphism. Stirling transforms use Stirling-number sums
directly; their descriptions as compositions live in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .combinatorics import stirling1_table, stirling2_table
from .errors import NotZeroOfOrderOne, RingMismatch
from .inversion import comp_inverse
from .rings import RingValue
from .series import Seq, beta, compose_egf, hadamard


@dataclass(frozen=True)
class ComposeBy:
    """``a -> a o b`` for an inner sequence ``b`` with ``b_0 = 0``."""

    b: Seq

    def __post_init__(self):
        if not self.b.terms[0].is_zero():
            raise NotZeroOfOrderOne(self.b.terms[0])


@dataclass(frozen=True)
class HadamardBeta:
    """``a -> a . (r^n)``, i.e. ``A(t) -> A(r t)``."""

    r: RingValue


@dataclass(frozen=True)
class AltSign:
    """``a_n -> (-1)^n a_n``."""


@dataclass(frozen=True)
class Stirling:
    """``b_n = sum_h S2(n, h) a_h``."""


@dataclass(frozen=True)
class StirlingInverse:
    """``b_n = sum_h (-1)^(n-h) s(n, h) a_h`` with unsigned first-kind numbers ``s``."""


TransformSpec = Union[ComposeBy, HadamardBeta, AltSign, Stirling, StirlingInverse]


def _triangle_apply(rows, signed: bool, a: Seq) -> Seq:
    out = []
    for n in range(len(a)):
        acc = a.ring.zero
        for h in range(n + 1):
            c = rows[n][h]
            if c == 0:
                continue
            if signed and (n - h) % 2:
                c = -c
            acc = acc + a.terms[h] * c
        out.append(acc)
    return Seq(a.ring, out)


def apply(t: TransformSpec, a: Seq) -> Seq:
    if isinstance(t, AltSign):
        return Seq(a.ring, [-x if n % 2 else x for n, x in enumerate(a.terms)])
    if isinstance(t, Stirling):
        return _triangle_apply(stirling2_table(len(a) - 1), False, a)
    if isinstance(t, StirlingInverse):
        return _triangle_apply(stirling1_table(len(a) - 1), True, a)
    if isinstance(t, ComposeBy):
        return compose_egf(a, t.b)
    if isinstance(t, HadamardBeta):
        if t.r.ring != a.ring:
            raise RingMismatch(t.r.ring, a.ring)
        return hadamard(a, beta(t.r, len(a)))
    raise TypeError(f"not a transform spec: {t!r}")


def invert_spec(t: TransformSpec) -> TransformSpec:
    """Spec of the inverse automorphism.

    Raises NotAUnit for ``HadamardBeta(r)`` with ``r`` not a unit and
    NotInvertibleForComposition for ``ComposeBy(b)`` with ``b_1`` not a unit.
    """
    if isinstance(t, AltSign):
        return t
    if isinstance(t, Stirling):
        return StirlingInverse()
    if isinstance(t, StirlingInverse):
        return Stirling()
    if isinstance(t, HadamardBeta):
        return HadamardBeta(t.r.inverse())
    if isinstance(t, ComposeBy):
        return ComposeBy(comp_inverse(t.b))
    raise TypeError(f"not a transform spec: {t!r}")


def format_spec(t: TransformSpec) -> str:
    """Serialize as ``altsign``, ``stirling``, ``stirling-inv``, ``mu:<terms>`` or ``beta:<value>``."""
    if isinstance(t, AltSign):
        return "altsign"
    if isinstance(t, Stirling):
        return "stirling"
    if isinstance(t, StirlingInverse):
        return "stirling-inv"
    if isinstance(t, HadamardBeta):
        return f"beta:{t.r}"
    if isinstance(t, ComposeBy):
        return "mu:" + ",".join(str(x) for x in t.b.terms)
    raise TypeError(f"not a transform spec: {t!r}")


def parse_spec(text: str, ring) -> TransformSpec:
    """Inverse of :func:`format_spec`; ``ring`` types the payload of ``mu:``/``beta:``."""
    text = text.strip()
    if text == "altsign":
        return AltSign()
    if text == "stirling":
        return Stirling()
    if text == "stirling-inv":
        return StirlingInverse()
    kind, sep, payload = text.partition(":")
    if sep and kind == "beta":
        return HadamardBeta(ring(payload))
    if sep and kind == "mu":
        payload = payload.strip().strip("[]")
        return ComposeBy(Seq(ring, [p.strip() for p in payload.split(",")]))
    raise ValueError(f"unknown transform spec {text!r}")

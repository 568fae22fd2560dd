"""
Inverses for the two products
=============================

Hurwitz inverses need an invertible first term; compositional inverses
(series reversion) need ``a_0 = 0`` and an invertible ``a_1``. The two are
linked: shifting ``a`` right by one and reverting gives back ``a^{-1}``.
"""

from hurwitz import Rationals, Seq
from hurwitz.inversion import (
    comp_inverse,
    comp_inverse_closed,
    comp_inverse_via_cinv,
    hurwitz_inverse,
    hurwitz_inverse_bell,
    hurwitz_inverse_via_relinv,
)
from hurwitz.rings import LaurentOver, PolynomialsOver
from hurwitz.series import compose_egf, hurwitz, shift_plus

Q = Rationals()
a = Seq(Q, [1, 2, "-1/3", 5, 0, 7])

inv = hurwitz_inverse(a)
print("a^-1                 =", inv)
print("a * a^-1             =", hurwitz(a, inv))
print("Bell closed form     =", hurwitz_inverse_bell(a) == inv)
print("via reversion        =", hurwitz_inverse_via_relinv(a) == inv)

# log(1 + t) is the reversion of e^t - 1
expm1 = Seq(Q, [0, 1, 1, 1, 1, 1, 1])
log1p = comp_inverse(expm1)
print("reversion of e^t - 1 =", log1p)
print("round trip           =", compose_egf(expm1, log1p))
print("closed form agrees   =", comp_inverse_closed(expm1) == log1p)
print("from a^-1 recursion  =", comp_inverse_via_cinv(a) == comp_inverse(shift_plus(0, a)))

# Symbolic coefficients: a0 is a Laurent variable so it can be inverted
R = LaurentOver(Q, "a0")
for name in ("a1", "a2", "a3"):
    R = PolynomialsOver(R, name)
a0, a1, a2, a3 = (R(v) for v in ("a0", "a1", "a2", "a3"))
for n, term in enumerate(comp_inverse(Seq(R, [0, a0, a1, a2, a3]))):
    print(f"  g_{n} = {term}")

"""
Transforms as ring automorphisms
================================

The alternating sign, Stirling and inverse Stirling transforms are all
compositions with a fixed inner sequence, so they respect both ``+`` and the
Hurwitz product.
"""

from hurwitz import Integers, Seq
from hurwitz.series import hurwitz, ones
from hurwitz.transforms import AltSign, ComposeBy, Stirling, StirlingInverse, apply, format_spec, invert_spec

Z = Integers()
N = 8

bell = apply(Stirling(), ones(Z, N))
print("Stirling(1,1,...) =", bell)
print("back again        =", apply(StirlingInverse(), bell))

a = Seq(Z, [1, -1, 2, 0, 3, 1, -2, 4])
b = Seq(Z, [2, 0, 1, 1, -1, 0, 5, 1])
for t in (AltSign(), Stirling(), StirlingInverse()):
    lhs = apply(t, hurwitz(a, b))
    rhs = hurwitz(apply(t, a), apply(t, b))
    print(f"{format_spec(t):13s} multiplicative: {lhs == rhs}")

# Composition transforms invert through series reversion
mu = ComposeBy(Seq(Z, [0, 1, 1, 1]))
print("inverse of", format_spec(mu), "is", format_spec(invert_spec(mu)))

"""
Unit sequences as an additive group
===================================

Sequences starting with 1 form a group under the Hurwitz product. ``tau``
identifies it with plain sequences under addition, one basis power per
coordinate.
"""

import itertools

from hurwitz import Integers, IntegersMod, PolynomialsOver, Seq
from hurwitz.series import hurwitz, hurwitz_power
from hurwitz.tau import basis_power, tau_forward, tau_inverse

Z = Integers()

R = Z
for name in ("x0", "x1", "x2", "x3"):
    R = PolynomialsOver(R, name)
x = Seq(R, [R(f"x{i}") for i in range(4)])
for n, term in enumerate(tau_forward(x, 5)):
    print(f"tau(x)_{n} = {term}")

# Addition on the left becomes the Hurwitz product on the right
p, q = Seq(Z, [1, -2, 0, 3]), Seq(Z, [4, 1, 1, -1])
print("homomorphism:", tau_forward(p + q) == hurwitz(tau_forward(p), tau_forward(q)))
print("round trip:  ", tau_inverse(tau_forward(p)) == p)

# Basis powers with exponent 2: (1 + t^2/2)^2
print("b^(2) squared:", basis_power(2, Z(2), 7))

# Over Z/3 every unit sequence of length 4 has order dividing 3
F3 = IntegersMod(3)
units = [Seq(F3, (1,) + t) for t in itertools.product(range(3), repeat=3)]
print("group order:", len(units), "cubes all trivial:", all(hurwitz_power(u, 3) == units[0] for u in units))

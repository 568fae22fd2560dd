"""
Sequences and their products
============================

Sequences are stored by their e.g.f. coefficients: term ``n`` multiplies
``t^n / n!``. The Hurwitz product is then the product of e.g.f.s.
"""

from hurwitz import Integers, IntegersMod, Rationals, Seq
from hurwitz.series import beta, cauchy, compose_egf, gamma, hadamard, hurwitz, hurwitz_power, ones

Z = Integers()

# e^t * e^t = e^{2t}
u = ones(Z, 8)
print("1 * 1      =", hurwitz(u, u))
print("beta(2)    =", beta(Z(2), 8))

# The same product mod 2 collapses to the identity (1, 0, 0, ...)
Z2 = IntegersMod(2)
print("mod 2      =", hurwitz(ones(Z2, 6), ones(Z2, 6)))

# Cauchy and Hadamard products for comparison
a = Seq(Z, [1, 2, 3, 4, 5, 6])
print("a . a      =", hadamard(a, a))
print("a x a      =", cauchy(a, a))

# gamma turns Cauchy products into Hurwitz products
print("gamma check:", gamma(cauchy(a, a)) == hurwitz(gamma(a), gamma(a)))

# e^{e^t - 1}: composition with (0, 1, 1, ...) gives the Bell numbers
print("Bell       =", compose_egf(ones(Z, 9), Seq(Z, [0] + [1] * 8)))

# Over Q everything is exact
Q = Rationals()
half = Seq(Q, ["1/2", "1/3", "1/4", "1/5"])
print("power^3    =", hurwitz_power(half, 3))

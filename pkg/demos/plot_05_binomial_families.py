"""
Polynomial families of binomial type
====================================

Each family ``q`` with ``q(x + y) = q(x) * q(y)`` comes from a unique
generator ``u`` through ``tau(x u)``. Starting from the Fibonacci numbers
gives a new family; the classical ones give back short integer sequences.
"""

from hurwitz import Integers, Seq
from hurwitz.binomial_type import (
    a_from_binomial,
    binomial_from_u,
    is_binomial_type,
    named_family,
    pa_polynomials,
    u_from_binomial,
)

Z = Integers()

fib = binomial_from_u(Seq(Z, [1, 1, 2, 3, 5, 8]), 6)
for n, poly in enumerate(fib):
    print(f"q_{n}(x) = {poly}")
print("binomial type:", bool(is_binomial_type(fib)))
print("q(1) =", a_from_binomial(fib))

for name in ("powers", "touchard", "pochhammer", "laguerre", "abel"):
    fam = named_family(name, 7)
    print(f"{name:10s} u = {u_from_binomial(fam)}")

# Families can also be generated from a = q(1)
print("Touchard from Bell numbers:", pa_polynomials(Seq(Z, [1, 1, 2, 5, 15])) == named_family("touchard", 5))

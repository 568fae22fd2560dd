"""Exact algebra of sequences over commutative rings.

Sequences are stored in the exponential convention (term ``n`` multiplies
``t^n / n!``). The package covers the Hadamard, Hurwitz and Cauchy products,
e.g.f./o.g.f. composition, Hurwitz and compositional inverses, the Stirling
family of automorphisms, the isomorphism ``tau`` from ``(H_R, +)`` onto
``(U_R, *)`` and binomial-type polynomial families.
"""

from .binomial_type import (
    BinomialCheck,
    a_from_binomial,
    binomial_from_u,
    is_binomial_type,
    named_family,
    pa_coefficient,
    pa_polynomials,
    u_from_binomial,
)
from .combinatorics import (
    BellArguments,
    binomial,
    exponential_bell_partial,
    factorial,
    ordinary_bell_complete,
    ordinary_bell_partial,
    stirling1_unsigned,
    stirling2,
)
from .errors import (
    FactorialNotInvertible,
    HttpError,
    HurwitzError,
    IndexOutOfRange,
    LengthMismatch,
    LengthTooShort,
    NetworkDisabled,
    NonzeroConstantTerm,
    NotAUnit,
    NotBinomialType,
    NotInvertibleForComposition,
    NotUnitHeaded,
    NotZeroOfOrderOne,
    ParseError,
    RetractFailed,
    RingMismatch,
)
from .inversion import (
    comp_inverse,
    comp_inverse_closed,
    comp_inverse_via_cinv,
    hurwitz_inverse,
    hurwitz_inverse_bell,
    hurwitz_inverse_via_relinv,
)
from .io import dumps_seq, load_seq, parse_seq, save_seq, serialize_seq
from .oeis import OeisHit, oeis_lookup
from .rings import (
    Integers,
    IntegersMod,
    LaurentOver,
    Polynomial,
    PolynomialsOver,
    Rationals,
    Ring,
    RingValue,
    parse_ring,
    poly_add,
    poly_eval,
    poly_mul,
    ring_from_integer,
    ring_inverse,
    ring_is_unit,
)
from .series import (
    Seq,
    UnitSeq,
    beta,
    cauchy,
    compose_egf,
    compose_ogf,
    delta,
    factorials,
    gamma,
    gamma_inv,
    hadamard,
    hurwitz,
    hurwitz_power,
    ident,
    ones,
    seq_add,
    seq_neg,
    shift_minus,
    shift_plus,
    zeros,
)
from .tau import basis_power, tau_forward, tau_inverse
from .transforms import AltSign, ComposeBy, HadamardBeta, Stirling, StirlingInverse, apply, invert_spec

__version__ = "0.1.0"

"""Integer combinatorics and partial Bell polynomials over an arbitrary ring.

Two Bell families are provided:

* ordinary partial Bell polynomials ``B[n][k]``: the coefficient of ``z^n`` in
  ``(x_1 z + x_2 z^2 + ...)^k``;
* exponential partial Bell polynomials ``Bh[n][k]``, the set-partition sums
  ``Bh[n][k](x) = n!/k! * B[n][k](x_1/1!, x_2/2!, ...)``, computed with integer
  weights only so they work over Z and Z/nZ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .errors import RingMismatch
from .rings import Ring, RingValue, coerce

__all__ = [
    "factorial",
    "binomial",
    "stirling2",
    "stirling1_unsigned",
    "stirling2_table",
    "stirling1_table",
    "BellArguments",
    "ordinary_bell_table",
    "ordinary_bell_partial",
    "ordinary_bell_complete",
    "exponential_bell_table",
    "exponential_bell_row",
    "exponential_bell_partial",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k > n``."""
    return comb(n, k)


def stirling2_table(nmax: int) -> list[list[int]]:
    """Rows ``0..nmax`` of Stirling numbers of the second kind."""
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1] + [0]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = k * prev[k] + prev[k - 1]
        rows.append(row)
    return rows


def stirling1_table(nmax: int) -> list[list[int]]:
    """Rows ``0..nmax`` of unsigned Stirling numbers of the first kind."""
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1] + [0]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (n - 1) * prev[k] + prev[k - 1]
        rows.append(row)
    return rows


def stirling2(n: int, k: int) -> int:
    if k > n:
        return 0
    return stirling2_table(n)[n][k]


def stirling1_unsigned(n: int, k: int) -> int:
    if k > n:
        return 0
    return stirling1_table(n)[n][k]


@dataclass(frozen=True)
class BellArguments:
    """Variables ``x_1, x_2, ...`` (1-indexed); missing entries read as zero."""

    ring: Ring
    values: tuple[RingValue, ...] = field(default=())

    def __post_init__(self):
        vals = tuple(v if isinstance(v, RingValue) else coerce(v, self.ring) for v in self.values)
        for v in vals:
            if v.ring != self.ring:
                raise RingMismatch(v.ring, self.ring, "Bell argument")
        object.__setattr__(self, "values", vals)

    def x(self, j: int) -> RingValue:
        if 1 <= j <= len(self.values):
            return self.values[j - 1]
        return self.ring.zero


def ordinary_bell_table(args: BellArguments, nmax: int) -> list[list[RingValue]]:
    """``T[n][k] = B_{n,k}(args)`` for ``0 <= k <= n <= nmax``."""
    zero = args.ring.zero
    table = [[args.ring.one]]
    for n in range(1, nmax + 1):
        row = [zero] * (n + 1)
        for k in range(1, n + 1):
            acc = zero
            for j in range(1, n - k + 2):
                prev = table[n - j][k - 1]
                if not prev.is_zero():
                    acc = acc + args.x(j) * prev
            row[k] = acc
        table.append(row)
    return table


def exponential_bell_row(table: list[list[RingValue]], x, n: int) -> list[RingValue]:
    """Row ``n`` of the exponential Bell table from rows ``0..n-1``.

    ``x(j)`` returns the j-th argument. Entries with ``k >= 2`` only read
    ``x(1..n-1)``; ``x(n)`` enters through ``Bh_{n,1} = x_n`` alone.
    """
    zero = table[0][0].ring.zero
    row = [zero] * (n + 1)
    for k in range(1, n + 1):
        acc = zero
        for j in range(1, n - k + 2):
            prev = table[n - j][k - 1]
            if not prev.is_zero():
                acc = acc + x(j) * prev * comb(n - 1, j - 1)
        row[k] = acc
    return row


def exponential_bell_table(args: BellArguments, nmax: int) -> list[list[RingValue]]:
    """``T[n][k] = Bh_{n,k}(args)`` using the recurrence
    ``Bh_{n,k} = sum_j C(n-1, j-1) x_j Bh_{n-j,k-1}``."""
    table = [[args.ring.one]]
    for n in range(1, nmax + 1):
        table.append(exponential_bell_row(table, args.x, n))
    return table


def ordinary_bell_partial(args: BellArguments, n: int, k: int) -> RingValue:
    if k > n:
        return args.ring.zero
    return ordinary_bell_table(args, n)[n][k]


def ordinary_bell_complete(args: BellArguments, n: int) -> RingValue:
    """``B_0 = 1`` and ``B_n = sum_{k=1..n} B_{n,k}``."""
    row = ordinary_bell_table(args, n)[n]
    if n == 0:
        return row[0]
    acc = args.ring.zero
    for v in row[1:]:
        acc = acc + v
    return acc


def exponential_bell_partial(args: BellArguments, n: int, k: int) -> RingValue:
    if k > n:
        return args.ring.zero
    return exponential_bell_table(args, n)[n][k]


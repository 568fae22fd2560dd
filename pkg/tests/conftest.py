from __future__ import annotations

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hurwitz.rings import Integers, IntegersMod, PolynomialsOver, Rationals  # noqa: E402
from hurwitz.series import Seq  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

Z = Integers()
Q = Rationals()
Z6 = IntegersMod(6)
Zx = PolynomialsOver(Z, "x")

small_ints = st.integers(min_value=-9, max_value=9)
fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def ring_elements(ring):
    if ring == Q:
        return fractions.map(ring)
    if isinstance(ring, PolynomialsOver):
        return st.lists(small_ints, max_size=3).map(ring.from_coefficients)
    return small_ints.map(ring.from_integer)


def seqs(ring, n, head=None, min_len=None):
    """Sequences of length ``n`` (or ``min_len..n``); ``head`` pins the first term."""
    sizes = st.just(n) if min_len is None else st.integers(min_len, n)

    def build(size):
        elems = st.lists(ring_elements(ring), min_size=size, max_size=size)
        if head is None:
            return elems.map(lambda ts: Seq(ring, ts))
        return elems.map(lambda ts: Seq(ring, [head] + ts[1:]))

    return sizes.flatmap(build)


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  -- {detail}"
        terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(name, ok, detail=""):
        ACCEPTANCE_RESULTS.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'}  {name}")

    return record

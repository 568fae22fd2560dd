"""Command-line front end.

::

    hurwitz-seq <group> <verb> [--a FILE] [--b FILE] [--u FILE] [-n LEN]
                [--ring DESC] [--transform SPEC] [--online]

Groups: ``op``, ``inverse``, ``transform``, ``tau``, ``binom``, ``oeis``.
Results are JSON documents on stdout. Exit status is 0 on success, 1 on a
domain error (the error name and offending value go to stderr) and 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import binomial_type as bt
from . import inversion, series, tau, transforms
from .errors import HurwitzError, ParseError, RingMismatch
from .io import load_seq, serialize_seq
from .oeis import oeis_lookup
from .rings import coerce, parse_ring
from .series import Seq


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


OP_VERBS: dict[str, Callable] = {
    "add": lambda a, b, ns: series.seq_add(a, b),
    "neg": lambda a, b, ns: series.seq_neg(a),
    "hadamard": lambda a, b, ns: series.hadamard(a, b),
    "hurwitz": lambda a, b, ns: series.hurwitz(a, b),
    "cauchy": lambda a, b, ns: series.cauchy(a, b),
    "gamma": lambda a, b, ns: series.gamma(a),
    "gamma-inv": lambda a, b, ns: series.gamma_inv(a),
    "shift-minus": lambda a, b, ns: series.shift_minus(a),
    "shift-plus": lambda a, b, ns: series.shift_plus(coerce(ns.value, a.ring), a),
    "compose-egf": lambda a, b, ns: series.compose_egf(a, b),
    "compose-ogf": lambda a, b, ns: series.compose_ogf(a, b),
    "power": lambda a, b, ns: series.hurwitz_power(a, ns.exp),
}
BINARY_OPS = {"add", "hadamard", "hurwitz", "cauchy", "compose-egf", "compose-ogf"}

INVERSE_VERBS: dict[str, Callable[[Seq], Seq]] = {
    "hurwitz": inversion.hurwitz_inverse,
    "hurwitz-bell": inversion.hurwitz_inverse_bell,
    "relinv": inversion.hurwitz_inverse_via_relinv,
    "comp": inversion.comp_inverse,
    "comp-closed": inversion.comp_inverse_closed,
    "cinv": inversion.comp_inverse_via_cinv,
}

GROUPS = {
    "op": list(OP_VERBS),
    "inverse": list(INVERSE_VERBS),
    "transform": ["apply", "invert"],
    "tau": ["forward", "inverse"],
    "binom": ["from-u", "to-u", "pa", "check", "to-a", "family"],
    "oeis": ["lookup"],
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", metavar="FILE", help="main input sequence document")
    p.add_argument("--b", metavar="FILE", help="second operand")
    p.add_argument("--u", metavar="FILE", help="generator sequence for binom from-u")
    p.add_argument("-n", type=int, metavar="LEN", help="truncation length")
    p.add_argument("--ring", metavar="DESC", help="embed inputs into this ring (e.g. Q, Poly:x:Z)")
    p.add_argument("--transform", metavar="SPEC", help="altsign | stirling | stirling-inv | mu:<terms> | beta:<value>")
    p.add_argument("--online", action="store_true", help="allow the OEIS network request")
    p.add_argument("--offline", action="store_true", help="use the bundled OEIS fixture")
    p.add_argument("--fixture", metavar="FILE", help="OEIS fixture file for offline lookups")
    p.add_argument("--exp", type=int, default=2, help="exponent for op power")
    p.add_argument("--value", default="0", help="head value for op shift-plus")
    p.add_argument("--family", choices=sorted(bt.FAMILIES), help="named binomial-type family")
    p.add_argument("--no-verify", action="store_true", help="skip the round trip in binom to-u")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz-seq", description="Exact algebra of sequences under the Hurwitz product.")
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")
    for group, verbs in GROUPS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="verb", required=True, metavar="VERB")
        for verb in verbs:
            _common(sub.add_parser(verb))
    return parser


def _load(path: str | None, ns, flag: str) -> Seq:
    if path is None:
        raise UsageError(f"--{flag} FILE is required")
    try:
        seq = load_seq(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (ParseError, RingMismatch) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if ns.ring:
        ring = _ring(ns.ring)
        seq = Seq(ring, [coerce(t, ring) for t in seq.terms])
    return seq


def _ring(desc: str):
    try:
        return parse_ring(desc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _trunc(seq: Seq, n: int | None) -> Seq:
    return seq if n is None else seq.truncate(n)


def _dispatch(ns) -> dict:
    group, verb = ns.group, ns.verb
    if group == "op":
        a = _trunc(_load(ns.a, ns, "a"), ns.n)
        b = _trunc(_load(ns.b, ns, "b"), ns.n) if verb in BINARY_OPS else None
        return serialize_seq(OP_VERBS[verb](a, b, ns))
    if group == "inverse":
        a = _trunc(_load(ns.a, ns, "a"), ns.n)
        return serialize_seq(INVERSE_VERBS[verb](a))
    if group == "transform":
        if not ns.transform:
            raise UsageError("--transform SPEC is required")
        if verb == "apply":
            a = _trunc(_load(ns.a, ns, "a"), ns.n)
            spec = _spec(ns.transform, a.ring)
            return serialize_seq(transforms.apply(spec, a))
        ring = _ring(ns.ring or "Z")
        inv = transforms.invert_spec(_spec(ns.transform, ring))
        return {"ring": str(ring), "transform": transforms.format_spec(inv)}
    if group == "tau":
        a = _load(ns.a, ns, "a")
        if verb == "forward":
            n = ns.n if ns.n is not None else len(a) + 1
            return serialize_seq(tau.tau_forward(a.truncate(n - 1), n))
        return serialize_seq(tau.tau_inverse(_trunc(a, ns.n)))
    if group == "binom":
        if verb == "from-u":
            u = _load(ns.u, ns, "u")
            return serialize_seq(bt.binomial_from_u(u, ns.n))
        if verb == "family":
            if not ns.family:
                raise UsageError("--family NAME is required")
            return serialize_seq(bt.named_family(ns.family, ns.n or 6))
        a = _trunc(_load(ns.a, ns, "a"), ns.n)
        if verb == "to-u":
            return serialize_seq(bt.u_from_binomial(a, verify=not ns.no_verify))
        if verb == "pa":
            return serialize_seq(bt.pa_polynomials(a))
        if verb == "to-a":
            return serialize_seq(bt.a_from_binomial(a))
        check = bt.is_binomial_type(a)
        out = {"binomial_type": check.ok}
        if not check.ok:
            out.update(index=check.index, lhs=str(check.lhs), rhs=str(check.rhs))
        return out
    if group == "oeis":
        a = _trunc(_load(ns.a, ns, "a"), ns.n)
        prefix = [int(str(t)) for t in a.terms]
        fixture = ns.fixture or (True if ns.offline else None)
        hits = oeis_lookup(prefix, online=ns.online, fixture=fixture)
        return {"prefix": prefix, "hits": [{"id": h.id, "name": h.name, "offset": h.offset} for h in hits]}
    raise UsageError(f"unknown command {group} {verb}")


def _spec(text: str, ring):
    try:
        return transforms.parse_spec(text, ring)
    except (ValueError, ParseError) as exc:
        raise UsageError(f"bad --transform {text!r}: {exc}") from None


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns ``(exit status, stdout text or error message)``."""
    try:
        ns = build_parser().parse_args(argv)
        doc = _dispatch(ns)
    except UsageError as exc:
        return 2, f"usage error: {exc}"
    except ParseError as exc:
        return 2, str(exc)
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    except HurwitzError as exc:
        return 1, str(exc)
    except ValueError as exc:
        return 1, f"{type(exc).__name__}: {exc}"
    return 0, json.dumps(doc)


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

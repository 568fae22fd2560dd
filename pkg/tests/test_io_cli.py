import json
import subprocess
import sys

import pytest

from conftest import Q, Z
from hurwitz.cli import main, run_command
from hurwitz.errors import ParseError, RingMismatch
from hurwitz.io import dumps_seq, load_seq, parse_seq, save_seq, serialize_seq
from hurwitz.rings import IntegersMod, LaurentOver, PolynomialsOver, parse_ring
from hurwitz.series import Seq

CORPUS = [
    {"ring": "Z", "terms": [1, 1, 2, 3, 5]},
    {"ring": "Q", "terms": ["1", "-1/2", 3]},
    {"ring": "Zmod:6", "terms": [7, -1, 0]},
    {"ring": "Poly:x:Z", "terms": ["1", "3*x^2 + x", "-x"]},
    {"ring": "Poly:y:Poly:x:Q", "terms": [1, "1/2*y*x - x^3", "y^2"]},
    {"ring": "Laurent:t:Q", "terms": ["t^-1", "2*t - 1/3"]},
]


def test_parse_examples():
    assert parse_seq({"ring": "Z", "terms": [1, 1, 2, 3, 5]}) == Seq(Z, [1, 1, 2, 3, 5])
    assert parse_seq({"ring": "Q", "terms": ["1", "-1/2"]}) == Seq(Q, [1, "-1/2"])
    assert parse_seq({"ring": "Zmod:6", "terms": [7]}).terms[0].payload == 1


@pytest.mark.parametrize("doc", CORPUS, ids=lambda d: d["ring"])
def test_serialize_parse_round_trip(doc):
    seq = parse_seq(doc)
    out = serialize_seq(seq)
    assert out["ring"] == doc["ring"] and out["length"] == len(doc["terms"])
    assert parse_seq(out) == seq
    assert parse_seq(dumps_seq(seq)) == seq
    assert serialize_seq(parse_seq(out)) == out


def test_file_round_trip(tmp_path):
    seq = Seq(PolynomialsOver(Z), ["x^2 - 1", "x"])
    path = tmp_path / "s.json"
    save_seq(seq, path)
    assert load_seq(path) == seq


@pytest.mark.parametrize(
    "doc",
    [
        '{"ring": "Z", "terms": [1, 2}',
        '{"ring": "Z"}',
        '{"ring": "Z", "terms": []}',
        '{"ring": "Z", "terms": [1], "extra": 0}',
        '{"ring": "Z", "terms": [1], "convention": "ogf"}',
        '{"ring": "Z", "terms": [1], "length": 2}',
        '{"ring": "R", "terms": [1]}',
        '{"ring": "Z", "terms": [1.5]}',
        '{"ring": "Z", "terms": ["1 +"]}',
        "[1, 2]",
    ],
)
def test_parse_errors(doc):
    with pytest.raises(ParseError):
        parse_seq(doc)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_seq('{\n  "ring": "Z",\n  "terms": [1, 2,]\n}')
    assert err.value.line == 3


def test_literal_ring_mismatch():
    with pytest.raises(RingMismatch):
        parse_seq({"ring": "Poly:x:Z", "terms": ["y"]})
    with pytest.raises(RingMismatch):
        parse_seq({"ring": "Z", "terms": ["1/2"]})


def test_descriptors_cover_ring_kinds():
    kinds = {type(parse_ring(d["ring"])) for d in CORPUS}
    assert {IntegersMod, PolynomialsOver, LaurentOver} <= kinds


# -- CLI -----------------------------------------------------------------------


@pytest.fixture
def files(tmp_path):
    def write(name, ring, terms):
        path = tmp_path / name
        path.write_text(json.dumps({"ring": ring, "terms": terms}))
        return str(path)

    return write


def ok(argv):
    code, text = run_command(argv)
    assert code == 0, text
    return json.loads(text)


def test_cli_hurwitz(files):
    ones = files("ones.json", "Z", [1] * 8)
    doc = ok(["op", "hurwitz", "--a", ones, "--b", ones, "-n", "5"])
    assert doc == {"ring": "Z", "convention": "egf-terms", "length": 5, "terms": [1, 2, 4, 8, 16]}


def test_cli_fibonacci(files):
    fib = files("fib.json", "Z", [1, 1, 2, 3, 5, 8])
    doc = ok(["binom", "from-u", "--u", fib, "-n", "6"])
    assert doc["ring"] == "Poly:x:Z"
    assert doc["terms"] == [
        "1",
        "x",
        "x^2 + x",
        "x^3 + 3*x^2 + 2*x",
        "x^4 + 6*x^3 + 11*x^2",
        "x^5 + 10*x^4 + 35*x^3 + 20*x^2 + 5*x",
    ]
    back = files("fibq.json", doc["ring"], doc["terms"])
    assert ok(["binom", "to-u", "--a", back])["terms"] == [1, 1, 2, 3, 5]
    assert ok(["binom", "check", "--a", back]) == {"binomial_type": True}


def test_cli_domain_error(files, capsys):
    bad = files("notunit.json", "Z", [2, 1, 0])
    code, text = run_command(["inverse", "hurwitz", "--a", bad])
    assert code == 1 and "NotAUnit(2)" in text
    assert main(["inverse", "hurwitz", "--a", bad]) == 1
    assert "NotAUnit" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["op", "frobnicate"],
        ["nope"],
        [],
        ["op", "hurwitz", "--a", "/nonexistent.json", "--b", "/nonexistent.json"],
        ["op", "add"],
        ["transform", "apply", "--a", "X"],
    ],
)
def test_cli_usage_errors(argv):
    assert run_command(argv)[0] == 2


def test_cli_parse_error(files, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"ring": "Z", "terms": [1,')
    code, text = run_command(["op", "neg", "--a", str(path)])
    assert code == 2 and "broken.json" in text


def test_cli_transforms(files):
    ones = files("ones.json", "Z", [1] * 8)
    assert ok(["transform", "apply", "--a", ones, "--transform", "stirling"])["terms"] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert ok(["transform", "invert", "--transform", "mu:0,1,1,1"]) == {"ring": "Z", "transform": "mu:0,1,-1,2"}
    assert ok(["transform", "invert", "--ring", "Q", "--transform", "beta:2"])["transform"] == "beta:1/2"
    assert run_command(["transform", "invert", "--transform", "beta:2"])[0] == 1


def test_cli_inverse_and_tau(files):
    a = files("a.json", "Z", [1, 1, 1, 1, 1])
    for verb in ["hurwitz", "hurwitz-bell", "relinv"]:
        assert ok(["inverse", verb, "--a", a])["terms"] == [1, -1, 1, -1, 1]
    assert ok(["inverse", "cinv", "--a", a, "-n", "4"])["terms"] == [0, 1, -1, 2, -6]
    lam = files("lam.json", "Z", [0, 1, 1, 1, 1])
    assert ok(["inverse", "comp", "--a", lam])["terms"] == [0, 1, -1, 2, -6]
    assert ok(["inverse", "comp-closed", "--a", lam])["terms"] == [0, 1, -1, 2, -6]
    x = files("x.json", "Z", [1, 1, 2, 3])
    fwd = ok(["tau", "forward", "--a", x, "-n", "5"])
    assert fwd["terms"] == [1, 1, 2, 6, 18]
    back = files("t.json", "Z", fwd["terms"])
    assert ok(["tau", "inverse", "--a", back])["terms"] == [1, 1, 2, 3]


def test_cli_ops_cover_verbs(files):
    a = files("a.json", "Z", [1, 2, 3, 4])
    b = files("b.json", "Z", [0, 1, 1, 1])
    assert ok(["op", "add", "--a", a, "--b", b])["terms"] == [1, 3, 4, 5]
    assert ok(["op", "neg", "--a", a])["terms"] == [-1, -2, -3, -4]
    assert ok(["op", "hadamard", "--a", a, "--b", b])["terms"] == [0, 2, 3, 4]
    assert ok(["op", "cauchy", "--a", a, "--b", b])["terms"] == [0, 1, 3, 6]
    assert ok(["op", "gamma", "--a", a])["terms"] == [1, 2, 6, 24]
    assert ok(["op", "gamma-inv", "--a", a, "--ring", "Q"])["terms"] == [1, 2, "3/2", "2/3"]
    assert ok(["op", "shift-minus", "--a", a])["terms"] == [2, 3, 4]
    assert ok(["op", "shift-plus", "--a", a, "--value", "9"])["terms"] == [9, 1, 2, 3, 4]
    assert ok(["op", "compose-egf", "--a", a, "--b", b])["length"] == 4
    assert ok(["op", "compose-ogf", "--a", a, "--b", b])["length"] == 4
    assert ok(["op", "power", "--a", a, "--exp", "0"])["terms"] == [1, 0, 0, 0]
    assert run_command(["op", "compose-egf", "--a", a, "--b", a])[0] == 1


def test_cli_families_and_pa(files):
    doc = ok(["binom", "family", "--family", "touchard", "-n", "4"])
    assert doc["terms"] == ["1", "x", "x^2 + x", "x^3 + 3*x^2 + x"]
    t = files("t.json", doc["ring"], doc["terms"])
    assert ok(["binom", "to-a", "--a", t])["terms"] == [1, 1, 2, 5]
    a = files("a.json", "Z", [1, 1, 2, 5])
    assert ok(["binom", "pa", "--a", a])["terms"] == doc["terms"]
    bad = files("bad.json", "Poly:x:Z", ["1", "x", "x^2 + x^3"])
    check = ok(["binom", "check", "--a", bad])
    assert check["binomial_type"] is False and check["index"] == 2


def test_cli_is_deterministic(files):
    fib = files("fib.json", "Z", [1, 1, 2, 3, 5, 8])
    runs = {run_command(["binom", "from-u", "--u", fib, "-n", "6"])[1] for _ in range(3)}
    assert len(runs) == 1


def test_module_entry_point(files):
    ones = files("ones.json", "Z", [1, 1, 1])
    proc = subprocess.run(
        [sys.executable, "-m", "hurwitz", "op", "hurwitz", "--a", ones, "--b", ones],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"] == [1, 2, 4]

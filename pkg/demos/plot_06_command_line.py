"""
Driving the command line
========================

The ``hurwitz-seq`` command reads and writes JSON sequence documents. This
script calls it in-process through ``run_command``; from a shell the same
argument lists work verbatim.
"""

import json
import tempfile
from pathlib import Path

from hurwitz.cli import run_command

tmp = Path(tempfile.mkdtemp())
(tmp / "fib.json").write_text(json.dumps({"ring": "Z", "terms": [1, 1, 2, 3, 5, 8]}))
(tmp / "bell.json").write_text(json.dumps({"ring": "Z", "terms": [1, 1, 2, 5, 15, 52]}))

for argv in (
    ["binom", "from-u", "--u", str(tmp / "fib.json"), "-n", "6"],
    ["transform", "apply", "--a", str(tmp / "fib.json"), "--transform", "stirling"],
    ["inverse", "hurwitz", "--a", str(tmp / "fib.json")],
    ["oeis", "lookup", "--a", str(tmp / "bell.json"), "--offline"],
    ["oeis", "lookup", "--a", str(tmp / "bell.json")],
):
    code, out = run_command(argv)
    print("$ hurwitz-seq", " ".join(argv[:2]), "...")
    print(f"  exit {code}: {out}")

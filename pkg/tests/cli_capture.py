"""Run the CLI in-process and capture what a shell would see."""

from __future__ import annotations

import contextlib
import io
import json
from pathlib import Path

from lattice_entailment.cli import main

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def capture(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def load_cases():
    return json.loads((GOLDEN / "cases.json").read_text())

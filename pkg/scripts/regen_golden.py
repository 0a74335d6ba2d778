"""Rewrite tests/golden/*.out and *.err from the current CLI.

Run from the repository root and review the diff before committing.
"""

import os
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from cli_capture import GOLDEN, capture, load_cases  # noqa: E402


def main() -> int:
    os.chdir(ROOT)
    status = 0
    for case in load_cases():
        code, out, err = capture(case["argv"])
        (GOLDEN / f"{case['name']}.out").write_text(out)
        (GOLDEN / f"{case['name']}.err").write_text(err)
        mark = "ok" if code == case["exit"] else f"EXIT {code} != {case['exit']}"
        if code != case["exit"]:
            status = 1
        print(f"{case['name']}: {mark}")
    return status


if __name__ == "__main__":
    sys.exit(main())

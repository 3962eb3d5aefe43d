"""Run every acceptance criterion and print one PASS/FAIL line each."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from tests.test_acceptance import CRITERIA  # noqa: E402


def main() -> int:
    failed = 0
    for k, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        failed += not ok
        print(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

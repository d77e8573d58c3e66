"""A scripted tour of the `cyclo` command-line interface.

Each section below invokes the CLI entry point in-process with the same
argument vectors you would type in a shell, and reports the exit code.
Covered: expression evaluation (cyclotomic and affine), basis listing,
basis-vector multiplication, the cached multiplication table, and the
verification suites.
"""

from __future__ import annotations

import json
import pathlib
import sys
import tempfile

from cycloschur.cli import main


def run(argv: list[str]) -> None:
    # flush around the call so stdout and stderr interleave in order even
    # when the demo output is piped
    print(f"$ cyclo {' '.join(argv)}", flush=True)
    code = main(list(argv))
    sys.stdout.flush()
    sys.stderr.flush()
    print(f"[exit {code}]\n", flush=True)


def main_demo() -> None:
    print("== evaluating expressions ==")
    run(["element", "--m", "2", "--r", "2", "T1*T1"])
    run(["element", "--m", "2", "--r", "2", "L1^2", "--format", "json"])
    run(["element", "--m", "2", "--r", "2", "--affine", "X1^-1 * X2"])
    run(["element", "--m", "2", "--r", "2", "T9"])  # out of range: exit 2

    print("== listing the hom basis ==")
    run(["basis", "--m", "2", "--n", "2", "--r", "2"])
    run(["basis", "--m", "2", "--n", "2", "--r", "2",
         "--lambda", "2,0", "--mu", "1,1", "--format", "json"])

    print("== multiplying basis vectors ==")
    A = json.dumps([[[0, 0], [0, 0]], [[0, 0], [1, 1]]])
    run(["mult", "--m", "2", "--n", "2", "--r", "2", "--A", A, "--B", A])

    print("== the cached multiplication table ==")
    with tempfile.TemporaryDirectory() as tmp:
        run(["tables", "--m", "2", "--n", "1", "--r", "2",
             "--cache-dir", tmp, "--format", "json"])
        entries = sorted(pathlib.Path(tmp).glob("*.json"))
        print(f"cache entries written: {[e.name for e in entries]}")
        print()
        print("second run is served from the cache (byte-identical):")
        run(["tables", "--m", "2", "--n", "1", "--r", "2",
             "--cache-dir", tmp, "--format", "json"])

    print("== verification suites ==")
    run(["verify", "--suite", "rank", "--m", "2", "--n", "2", "--r", "2"])
    run(["verify", "--suite", "all", "--m", "1", "--n", "1", "--r", "1"])


if __name__ == "__main__":
    main_demo()

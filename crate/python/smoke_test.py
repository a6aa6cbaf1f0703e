#!/usr/bin/env python3
"""Smoke test for the gessel_py extension module.

Build the module first:

    cargo build -p gessel-py            # or --release

then run:

    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def import_gessel_py():
    candidates = [
        REPO_ROOT / "target" / "release" / "libgessel_py.so",
        REPO_ROOT / "target" / "debug" / "libgessel_py.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("libgessel_py.so not found; run `cargo build -p gessel-py` first")
    # Python imports the module by its registered name, so place a copy
    # named gessel_py.so on the path.
    stage = Path(tempfile.mkdtemp(prefix="gessel-py-"))
    newest = max(built, key=lambda p: p.stat().st_mtime)
    shutil.copy2(newest, stage / "gessel_py.so")
    sys.path.insert(0, str(stage))
    import gessel_py

    return gessel_py


def main():
    g = import_gessel_py()

    # Permutation statistics.
    assert g.des("3142") == 2
    assert g.ides("3142") == 1
    assert g.cdes("321") == 2
    assert g.des_b("-1,-2") == 2
    assert g.inversion_sequence("321") == [0, 1, 2]
    assert g.invseq_stats([0, 1, 2]) == (2, 3)

    # Families: brute force agrees with the recurrence.
    a3_brute = g.gen("two-sided", 3, method="brute")
    a3_rec = g.gen("two-sided", 3, method="rec")
    assert a3_brute == a3_rec
    assert a3_rec.coeff([2, 2]) == 4
    assert a3_rec.eval_ones() == 6
    assert a3_rec.vars() == ["s", "t"]

    # Arithmetic and the JSON wire format.
    doubled = a3_rec + a3_rec
    assert doubled.coeff([2, 2]) == 8
    round_tripped = g.Polynomial.from_json(a3_rec.to_json())
    assert round_tripped == a3_rec
    assert json.loads(a3_rec.to_json())["vars"] == ["s", "t"]

    # Type B initial value and a tau family.
    b1 = g.gen("type-B", 1)
    assert b1.terms() == [([0, 0], 1), ([1, 1], 1)]
    rev = g.gen("two-sided-tau", 3, tau="321")
    assert rev.coeff([1, 3]) == 1

    # Gamma triangle: the n = 5 row.
    table = g.gamma_table(5)
    row5 = [(i, j, v) for (n, i, j, v) in table if n == 5]
    assert row5 == [(1, 4, 1), (2, 1, 6), (2, 2, 16), (3, 0, 16)]
    uni = g.gamma_table(4, flavor="univariate")
    assert (4, 2, None, 8) in uni

    # Verification reports.
    reports = json.loads(g.run_checks("check_invseq", max_n=5))
    assert len(reports) == 5
    assert all(r["outcome"] == "pass" for r in reports)
    assert all(r["params"]["class"] == "conjecture" for r in reports)

    # Big coefficients survive the boundary exactly.
    a20 = g.gen("eulerian", 20)
    assert a20.eval_ones() == 2432902008176640000  # 20!

    print("gessel_py smoke test: OK")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Smoke test for the matroidal Python bindings.

Builds nothing itself: it locates the compiled extension under target/
(`cargo build -p matroidal-python [--release]` first), links it into a
temporary directory under the importable name, and exercises the main
surface against known values.

Run from the repository root:

    cargo build -p matroidal-python
    python3 python/smoke_test.py
"""

import os
import shutil
import sys
import tempfile
from fractions import Fraction

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def locate_extension():
    candidates = [
        os.path.join(REPO, "target", profile, name)
        for profile in ("release", "debug")
        for name in ("libmatroidal.so", "libmatroidal.dylib", "matroidal.dll")
    ]
    for path in candidates:
        if os.path.exists(path):
            return path
    sys.exit("extension not found; run `cargo build -p matroidal-python` first")


def import_module():
    src = locate_extension()
    tmp = tempfile.mkdtemp(prefix="matroidal-py-")
    suffix = ".pyd" if src.endswith(".dll") else ".so"
    shutil.copy(src, os.path.join(tmp, "matroidal" + suffix))
    sys.path.insert(0, tmp)
    import matroidal

    return matroidal


FANO_BLOCKS = [[0, 1, 2], [0, 3, 6], [0, 4, 5], [1, 3, 5], [1, 4, 6], [2, 3, 4], [2, 5, 6]]


def main():
    mt = import_module()

    # construction and basic combinatorics
    u23 = mt.Matroid(3, [[0, 1], [0, 2], [1, 2]])
    assert u23 == mt.Matroid.uniform(3, 2)
    assert u23.rank == 2 and u23.girth() == 3

    fano = mt.Matroid.steiner(7, 2, 3, FANO_BLOCKS)
    assert fano.rank == 3 and len(fano.bases()) == 28
    assert fano.is_sparse_paving() and fano.is_connected()

    j = mt.cover_ideal(fano)
    assert j.alpha() == 4 and j.mu() == 7

    # the running example: I = (af, cd, bde, bce)
    running = mt.Matroid.from_circuits(6, [[0, 5], [2, 3], [1, 3, 4], [1, 2, 4]])
    sr = mt.stanley_reisner(running)
    assert str(sr) == "(af, cd, bce, bde)"
    sf2 = mt.squarefree_part(running, 2, side="sr")
    assert str(sf2) == "(acdf, bcde, abcef, abdef)"
    assert str(mt.squarefree_part(running, 3, side="sr")) == "(abcdef)"

    # fast engine against the brute-force oracle
    for l in (1, 2, 3, 4):
        fast = mt.symbolic_power(running, l, side="sr")
        brute = mt.symbolic_power(running, l, side="sr", method="bruteforce")
        assert fast == brute, f"engine/oracle mismatch at l={l}"

    # named generator of I^(10) and its tower decomposition
    i10 = mt.symbolic_power(running, 10, side="sr")
    g10 = [1, 3, 6, 6, 3, 1]  # a b^3 c^6 d^6 e^3 f
    assert g10 in i10.generators()
    tower = mt.tower_decomposition(g10, running, 10, side="sr")
    assert tower == [
        ([1, 1, 1, 1, 1, 1], 3, 1),
        ([0, 1, 1, 1, 1, 0], 2, 2),
        ([0, 0, 1, 1, 0, 0], 1, 3),
    ]

    # detection, exact invariants
    ideal = mt.MonomialIdeal.from_string("ab, acd, ace, ade, bcd, bce, bde, cde")
    assert mt.detect_matroid(ideal)["is_matroidal"]
    bad = mt.MonomialIdeal.from_string("abc, abd, acd, bcde")
    assert not mt.detect_matroid(bad)["is_matroidal"]

    assert mt.waldschmidt(fano) == Fraction(7, 3)
    assert mt.alpha_symbolic(fano, 3) == 7
    assert mt.noether_number(fano) == 3

    report = mt.analyze(fano)
    assert report["uniformity_threshold"] == 2
    assert report["waldschmidt"] == {"num": 7, "den": 3}
    assert report["resurgence"] == {
        "lower": {"num": 12, "den": 7},
        "upper": {"num": 15, "den": 7},
    }

    defect = mt.sdefect(running, 2, side="sr")
    assert defect["direct"] == defect["formula"]

    print("matroidal python bindings: all smoke checks passed")


if __name__ == "__main__":
    main()

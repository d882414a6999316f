#!/usr/bin/env python3
"""Regenerate the shipped session fixtures.

The harmonic fixtures need the trace-power invariants written out in the
canonical harmonic coordinates; those expressions are computed here with the
library itself so the committed JSON can always be reproduced:

    python3 tools/make_fixtures.py
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from isostrat.exact import ExactMatrix  # noqa: E402
from isostrat.poly import MultiPoly  # noqa: E402
from isostrat.reps import harmonic_basis  # noqa: E402

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "isostrat", "fixtures")

ROT_Z_QUARTER = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
ROT_X_QUARTER = [[1, 0, 0], [0, 0, -1], [0, 1, 0]]
ROT_X_HALF = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]


def trace_power_invariants() -> dict[str, str]:
    """tr A^2 and tr A^3 on harmonic quadratics, in coordinates a1..a5.

    A point sum_i a_i b_i of the canonical harmonic basis corresponds to the
    traceless symmetric matrix A with quadratic form sum a_i b_i(x, y, z);
    the entries of A are linear in the a_i, so the traces of its powers are
    polynomials in a1..a5.
    """
    basis, _ = harmonic_basis(2)
    coords = tuple(f"a{i + 1}" for i in range(len(basis)))
    mono_of = {
        (2, 0, 0): (0, 0),
        (0, 2, 0): (1, 1),
        (0, 0, 2): (2, 2),
        (1, 1, 0): (0, 1),
        (1, 0, 1): (0, 2),
        (0, 1, 1): (1, 2),
    }
    zero = MultiPoly.zero(coords)
    entries = [[zero, zero, zero], [zero, zero, zero], [zero, zero, zero]]
    for i, b in enumerate(basis):
        ai = MultiPoly.variable(coords, i)
        for expo, coeff in b.terms.items():
            r, c = mono_of[expo]
            if r == c:
                entries[r][c] = entries[r][c] + ai.scale(coeff)
            else:
                half = ai.scale(coeff).scale("1/2")
                entries[r][c] = entries[r][c] + half
                entries[c][r] = entries[c][r] + half

    def matmul(a, b):
        return [
            [sum((a[i][k] * b[k][j] for k in range(3)), zero) for j in range(3)]
            for i in range(3)
        ]

    a2 = matmul(entries, entries)
    a3 = matmul(a2, entries)
    tr2 = sum((a2[i][i] for i in range(3)), zero)
    tr3 = sum((a3[i][i] for i in range(3)), zero)
    return {"I2": str(tr2), "I3": str(tr3)}


def s3_session() -> dict:
    return {
        "variables": ["x", "y", "z"],
        "representation": {
            "kind": "permutation",
            "n": 3,
            "generators": [[2, 1, 3], [2, 3, 1]],
        },
        "subgroups": [
            {
                "label": "S2",
                "finite_generators": [[[0, 1, 0], [1, 0, 0], [0, 0, 1]]],
            }
        ],
        "invariants": {
            "sigma1": "x+y+z",
            "sigma2": "x*y+x*z+y*z",
            "sigma3": "x*y*z",
        },
    }


def h2_session() -> dict:
    return {
        "representation": {
            "kind": "harmonic",
            "degree": 2,
            "generators": [ROT_Z_QUARTER, ROT_X_QUARTER],
            "so3_lie": True,
        },
        "subgroups": [
            {
                "label": "O2",
                "finite_generators": [ROT_X_HALF],
                "lie_generators": ["Lz"],
            }
        ],
        "invariants": trace_power_invariants(),
    }


def h4_session() -> dict:
    return {
        "representation": {
            "kind": "harmonic",
            "degree": 4,
            "generators": [ROT_Z_QUARTER, ROT_X_QUARTER],
            "so3_lie": True,
        },
        "subgroups": [
            {
                "label": "D2",
                "finite_generators": [
                    [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
                    [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
                ],
            }
        ],
    }


def main() -> None:
    os.makedirs(FIXTURE_DIR, exist_ok=True)
    for name, doc in (("s3", s3_session()), ("h2", h2_session()), ("h4", h4_session())):
        path = os.path.join(FIXTURE_DIR, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()

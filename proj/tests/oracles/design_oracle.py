#!/usr/bin/env python3
# Copyright 2026 The qsc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force moment oracle, independent of the C++ library.

Builds the constellations from textbook coordinates, enumerates every
monomial z^p conj(z)^q up to the requested degree, and compares against the
uniform complex-sphere average computed by exact rational arithmetic.

Regenerate the fixture with:
    python3 tests/oracles/design_oracle.py > tests/fixtures/design_oracle.json
"""

import itertools
import json
import math
from fractions import Fraction

import numpy as np

PHI = (1 + 5 ** 0.5) / 2


def to_complex(real_points):
    p = np.asarray(real_points, float)
    return p[:, 0::2] + 1j * p[:, 1::2]


def even_permutations(n):
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if inversions % 2 == 0:
            yield perm


def cell24():
    pts = set()
    for i in range(4):
        for s in (1, -1):
            v = [0.0] * 4
            v[i] = s
            pts.add(tuple(v))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        pts.add(signs)
    return sorted(pts)


def cell600():
    pts = set(cell24())
    base = (PHI / 2, 0.5, 1 / (2 * PHI), 0.0)
    for perm in even_permutations(4):
        for signs in itertools.product((1, -1), repeat=3):
            v = [0.0] * 4
            nonzero = [base[0] * signs[0], base[1] * signs[1], base[2] * signs[2], 0.0]
            for dst, src in enumerate(perm):
                v[dst] = nonzero[src]
            pts.add(tuple(round(x, 15) + 0.0 for x in v))
    return sorted(pts)


def indices(n, degree):
    for e in itertools.product(range(degree + 1), repeat=2 * n):
        if sum(e) == degree:
            yield e[:n], e[n:]


def sphere_average(p, q, n):
    if tuple(p) != tuple(q):
        return 0.0
    num = math.prod(math.factorial(x) for x in p) * math.factorial(n - 1)
    return float(Fraction(num, math.factorial(n - 1 + sum(p))))


def moment(z, p, q):
    zn = z / np.linalg.norm(z, axis=1, keepdims=True)
    vals = np.ones(len(z), complex)
    for i in range(z.shape[1]):
        vals *= zn[:, i] ** p[i] * np.conj(zn[:, i]) ** q[i]
    return vals.mean()


def strengths(constellations, t_max, tol=1e-9):
    n = constellations[0].shape[1]
    sphere_res, match_res = {}, {}
    for d in range(t_max + 1):
        ws, wm = 0.0, 0.0
        for p, q in indices(n, d):
            ms = [moment(c, p, q) for c in constellations]
            avg = sphere_average(p, q, n)
            ws = max(ws, max(abs(m - avg) for m in ms))
            wm = max(wm, max(abs(m - ms[0]) for m in ms))
        sphere_res[d], match_res[d] = ws, wm
    t_sphere = t_match = -1
    for d in range(t_max + 1):
        if sphere_res[d] > tol:
            break
        t_sphere = d
    for d in range(t_max + 1):
        if match_res[d] > tol:
            break
        t_match = d
    return {"t_sphere": t_sphere, "t_match": t_match,
            "sphere_residual": {str(k): v for k, v in sphere_res.items()},
            "match_residual": {str(k): v for k, v in match_res.items()}}


def min_separation(constellations):
    best = math.inf
    for a, b in itertools.combinations(range(len(constellations)), 2):
        for z in constellations[a]:
            for w in constellations[b]:
                best = min(best, float(np.linalg.norm(z - w)))
    return best


def main():
    out = {}
    alpha = 1.0
    cat4 = [np.array([[alpha], [-alpha]], complex), np.array([[1j * alpha], [-1j * alpha]], complex)]
    out["cat_2_2"] = strengths(cat4, 6)

    c24 = to_complex(cell24())
    out["cell24_single"] = strengths([c24], 7)
    # three 16-cells: the coordinate-axis points, and the half-integer points split by sign parity
    axis = to_complex([v for v in cell24() if sum(abs(x) for x in v) == 1])
    half = [v for v in cell24() if sum(abs(x) for x in v) == 2]
    even = to_complex([v for v in half if sum(x < 0 for x in v) % 2 == 0])
    odd = to_complex([v for v in half if sum(x < 0 for x in v) % 2 == 1])
    out["cell24_16cells"] = strengths([axis, even, odd], 7)
    out["cell24_16cells"]["min_separation"] = min_separation([axis, even, odd])
    out["cell24_16cells"]["num_points"] = len(c24)

    c600 = to_complex(cell600())
    out["cell600_single"] = strengths([c600], 12)
    out["cell600_single"]["num_points"] = len(c600)
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()

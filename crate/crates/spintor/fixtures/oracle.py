"""Regenerates the u8 golden forms from the gamma matrices, independently of the Rust code.

Usage: python3 oracle.py  (writes psi_plus_u8.json, psi_u8.json, star_psi_u8.json here)
"""
import itertools
import json
import os

import numpy as np

# e_k = sum of c * E_ij with E_ij: u_i -> u_j, u_j -> -u_i
GAMMA = {
    1: [(1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, -1)],
    2: [(1, 7, -1), (2, 8, 1), (3, 5, 1), (4, 6, -1)],
    3: [(1, 6, -1), (2, 5, 1), (3, 8, -1), (4, 7, 1)],
    4: [(1, 5, -1), (2, 6, -1), (3, 7, -1), (4, 8, -1)],
    5: [(1, 3, -1), (2, 4, -1), (5, 7, 1), (6, 8, 1)],
    6: [(1, 4, 1), (2, 3, -1), (5, 8, -1), (6, 7, 1)],
    7: [(1, 2, 1), (3, 4, -1), (5, 6, -1), (7, 8, 1)],
}


def gammas():
    out = []
    for k in range(1, 8):
        m = np.zeros((8, 8), dtype=np.int64)
        for i, j, c in GAMMA[k]:
            m[j - 1, i - 1] += c
            m[i - 1, j - 1] -= c
        out.append(m)
    return out


def main():
    g = gammas()
    phi = np.zeros(8, dtype=np.int64)
    phi[7] = 1

    def triple(a, b, c):
        return int((g[a] @ g[b] @ g[c] @ phi) @ phi)

    psi_plus = {(a, b, c): -triple(a, b, c) for a, b, c in itertools.combinations(range(6), 3)}
    psi = {(a, b, c): triple(a, b, c) for a, b, c in itertools.combinations(range(7), 3)}

    def psi_full(a, b, c):
        return triple(a, b, c)

    def cross(x, y):
        return [psi_full(x, y, k) for k in range(7)]

    def delta(a, b):
        return 1 if a == b else 0

    star = {}
    for v, w, x, y in itertools.combinations(range(7), 4):
        xy = cross(x, y)
        value = sum(psi_full(v, w, k) * xy[k] for k in range(7))
        value += -delta(v, x) * delta(w, y) + delta(v, y) * delta(w, x)
        star[(v, w, x, y)] = value

    here = os.path.dirname(os.path.abspath(__file__))
    for name, table in [("psi_plus_u8", psi_plus), ("psi_u8", psi), ("star_psi_u8", star)]:
        data = {",".join(str(i + 1) for i in key): str(val) for key, val in table.items() if val != 0}
        with open(os.path.join(here, name + ".json"), "w") as fh:
            json.dump(dict(sorted(data.items())), fh, indent=2)
            fh.write("\n")


if __name__ == "__main__":
    main()

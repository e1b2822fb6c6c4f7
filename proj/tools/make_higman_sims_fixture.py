#!/usr/bin/env python3
"""Write the Higman-Sims graph as an edge list, built from the extended binary
Golay code: octads through two fixed points give the 77 blocks of S(3,6,22).

Usage: make_higman_sims_fixture.py [output]   (default: stdout)
"""

import itertools
import sys


def golay_codewords():
    # Quadratic residue code of length 23, extended by a parity bit.
    residues = {(x * x) % 23 for x in range(1, 23)}
    for base in (residues, residues | {0}):
        word = sum(1 << r for r in base)
        shifts = [((word << s) | (word >> (23 - s))) & ((1 << 23) - 1) for s in range(23)]
        basis = []
        for v in shifts:
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
        if len(basis) != 12:
            continue
        code = set()
        for coeffs in itertools.product((0, 1), repeat=12):
            v = 0
            for c, b in zip(coeffs, basis):
                if c:
                    v ^= b
            code.add(v | ((bin(v).count("1") & 1) << 23))
        weights = {bin(c).count("1") for c in code if c}
        if min(weights) == 8:
            return code
    raise SystemExit("failed to build the extended Golay code")


def main():
    code = golay_codewords()
    octads = [c for c in code if bin(c).count("1") == 8]
    assert len(code) == 4096 and len(octads) == 759
    a, b = 22, 23
    points = list(range(22))
    blocks = sorted(
        tuple(p for p in points if (o >> p) & 1)
        for o in octads if (o >> a) & 1 and (o >> b) & 1
    )
    assert len(blocks) == 77
    for x, y, z in itertools.combinations(points, 3):
        assert sum(1 for B in blocks if x in B and y in B and z in B) == 1

    star, pt, blk = 0, lambda p: 1 + p, lambda i: 23 + i
    edges = [(star, pt(p)) for p in points]
    edges += [(pt(p), blk(i)) for i, B in enumerate(blocks) for p in B]
    edges += [
        (blk(i), blk(j))
        for i, j in itertools.combinations(range(77), 2)
        if not set(blocks[i]) & set(blocks[j])
    ]
    lines = ["# Higman-Sims graph from octads of the extended Golay code",
             "# vertex 0: base point, 1-22: points, 23-99: blocks of S(3,6,22)",
             f"100 {len(edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(edges)]
    text = "\n".join(lines) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()

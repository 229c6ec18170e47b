#!/usr/bin/env python3
"""Regenerate the bundled files under data/.

golay_gen.txt   generator [I | A] of the extended binary Golay code
mclaughlin.cg   descendant of the regular two-graph on 276 vertices
had12.hm        the fixed order-12 Hadamard matrix
brouwer_srg_snapshot.csv
                primitive parameter sets n <= 137 passing integrality,
                Krein and absolute-bound conditions
"""
import os
import sys
from fractions import Fraction
from math import isqrt

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def golay_rows():
    res = {(i * i) % 11 for i in range(1, 11)}
    a = [[0] * 12 for _ in range(12)]
    for j in range(1, 12):
        a[0][j] = 1
    for i in range(1, 12):
        a[i][0] = 1
        for j in range(1, 12):
            d = (j - i) % 11
            a[i][j] = 1 if (d == 0 or d not in res) else 0
    return [[1 if k == i else 0 for k in range(12)] + a[i] for i in range(12)]


def octads(rows):
    masks = [sum(b << k for k, b in enumerate(r)) for r in rows]
    out = []
    for m in range(1 << 12):
        x = 0
        for i in range(12):
            if m >> i & 1:
                x ^= masks[i]
        if bin(x).count("1") == 8:
            out.append(x)
    return out


def mclaughlin_edges(rows):
    hept = sorted(w & ~(1 << 23) for w in octads(rows) if w >> 23 & 1)
    verts = [("p", p) for p in range(23)] + [("h", h) for h in hept]

    def adj(a, b):
        (ta, xa), (tb, xb) = a, b
        if ta == "p" and tb == "p":
            return False
        if ta == "h" and tb == "h":
            return bin(xa & xb).count("1") == 1
        if ta == "p":
            return bool(xb >> xa & 1)
        return bool(xa >> xb & 1)

    # switch so that vertex 0 is isolated, then drop it
    n = len(verts)
    a0 = [adj(verts[0], verts[i]) for i in range(n)]
    edges = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if adj(verts[i], verts[j]) ^ a0[i] ^ a0[j]:
                edges.append((i, j))
    return n - 1, edges


HAD12 = """++++++++++++
+++------+++
+++---+++---
+--+---++-++
+---+-+-++-+
+----+++-++-
+-+-++-+---+
+-++-+--++--
+-+++-+---+-
++--++--+-+-
++-+-++----+
++-++--+-+--""".split()


def feasible(n, k, l, m):
    if not (0 < k < n - 1 and 0 < m < k):
        return False
    if k * (k - l - 1) != (n - k - 1) * m:
        return False
    disc = (l - m) ** 2 + 4 * (k - m)
    num = 2 * k + (n - 1) * (l - m)
    rd = isqrt(disc)
    if rd * rd != disc:
        return num == 0 and n % 4 == 1
    if (l - m + rd) % 2:
        return False
    r = (l - m + rd) // 2
    s = (l - m - rd) // 2
    f = Fraction(n - 1, 2) - Fraction(num, 2 * rd)
    g = Fraction(n - 1, 2) + Fraction(num, 2 * rd)
    if f.denominator != 1 or g.denominator != 1 or f <= 0 or g <= 0:
        return False
    f, g = int(f), int(g)
    if (r + 1) * (k + r + 2 * r * s) > (k + r) * (s + 1) ** 2:
        return False
    if (s + 1) * (k + s + 2 * r * s) > (k + s) * (r + 1) ** 2:
        return False
    return n <= f * (f + 3) // 2 and n <= g * (g + 3) // 2


def main():
    os.makedirs(OUT, exist_ok=True)
    rows = golay_rows()
    with open(os.path.join(OUT, "golay_gen.txt"), "w") as fh:
        for r in rows:
            fh.write(" ".join(map(str, r)) + "\n")

    n, edges = mclaughlin_edges(rows)
    with open(os.path.join(OUT, "mclaughlin.cg"), "w") as fh:
        fh.write("cg %d %d 1\n" % (n, len(edges)))
        for v in range(1, n + 1):
            fh.write("v %d 0\n" % v)
        for u, v in edges:
            fh.write("e %d %d\n" % (u, v))

    with open(os.path.join(OUT, "had12.hm"), "w") as fh:
        fh.write("hm 12\n" + "\n".join(HAD12) + "\n")

    with open(os.path.join(OUT, "brouwer_srg_snapshot.csv"), "w") as fh:
        fh.write("n,d,lambda,mu\n")
        for n in range(2, 138):
            for k in range(1, n - 1):
                for m in range(1, k):
                    for l in range(0, k - 1):
                        if feasible(n, k, l, m):
                            fh.write("%d,%d,%d,%d\n" % (n, k, l, m))
    return 0


if __name__ == "__main__":
    sys.exit(main())

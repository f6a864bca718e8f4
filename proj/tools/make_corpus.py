#!/usr/bin/env python3
"""Regenerate the group corpus and character tables under data/.

Every group file is validated by running the generator closure and checking
the expected order; every character table is validated against row/column
orthogonality before it is written.  Values with surds are evaluated in
double precision from their closed forms.
"""

import cmath
import json
import math
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def closure_order(degree, gens):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def write_group(fname, name, degree, gens, expect_order):
    order = closure_order(degree, gens)
    assert order == expect_order, f"{name}: closure order {order} != {expect_order}"
    path = os.path.join(ROOT, "groups", fname)
    with open(path, "w") as f:
        json.dump({"name": name, "kind": "permutation", "degree": degree, "generators": gens}, f)
        f.write("\n")
    print(f"group {name}: order {order}")


def check_table(name, order, classes, rows):
    c = len(classes)
    assert all(len(r) == c for r in rows) and len(rows) == c, name
    assert sum(sz for (_, sz, _) in classes) == order, name
    for r in range(c):
        for s in range(c):
            acc = sum(classes[j][1] * rows[r][j] * rows[s][j].conjugate() for j in range(c))
            want = order if r == s else 0
            assert abs(acc - want) < 1e-8, (name, "row", r, s, acc)
    for j in range(c):
        for k in range(c):
            acc = sum(rows[r][j] * rows[r][k].conjugate() for r in range(c))
            want = order / classes[j][1] if j == k else 0
            assert abs(acc - want) < 1e-8, (name, "col", j, k, acc)


def write_table(fname, name, order, classes, rows):
    check_table(name, order, classes, rows)
    path = os.path.join(ROOT, "tables", fname)
    data = {
        "group": name,
        "order": order,
        "classes": [{"label": l, "size": s, "rep_order": o} for (l, s, o) in classes],
        "chars": [[[v.real, v.imag] for v in map(complex, row)] for row in rows],
    }
    with open(path, "w") as f:
        json.dump(data, f)
        f.write("\n")
    print(f"table {name}: {len(classes)} classes")


def main():
    os.makedirs(os.path.join(ROOT, "groups"), exist_ok=True)
    os.makedirs(os.path.join(ROOT, "tables"), exist_ok=True)
    manifest = []

    def add(fname_group, name, degree, gens, order, table=None):
        write_group(fname_group, name, degree, gens, order)
        entry = {"file": "groups/" + fname_group, "name": name, "order": order}
        if table:
            entry["table"] = "tables/" + table
        manifest.append(entry)

    # Cyclic groups: Z/n for n = 2..12 and the remaining primes up to 31.
    cyclic_ns = list(range(2, 13)) + [13, 17, 19, 23, 29, 31]
    for n in cyclic_ns:
        gen = [list(range(1, n)) + [0]]
        add(f"z{n}.json", f"Z/{n}", n, gen, n, table=(f"z{n}.json" if n <= 12 else None))

    add("s3.json", "S3", 3, [[1, 2, 0], [1, 0, 2]], 6, table="s3.json")
    add("q8.json", "Q8", 8, [[2, 3, 1, 0, 6, 7, 5, 4], [4, 5, 7, 6, 1, 0, 2, 3]], 8, table="q8.json")
    add("d8.json", "D8", 4, [[1, 2, 3, 0], [0, 3, 2, 1]], 8, table="d8.json")
    add("a4.json", "A4", 4, [[1, 2, 0, 3], [0, 2, 3, 1]], 12, table="a4.json")
    add("s4.json", "S4", 4, [[1, 2, 3, 0], [1, 0, 2, 3]], 24, table="s4.json")
    add("a5.json", "A5", 5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]], 60, table="a5.json")
    add("s5.json", "S5", 5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], 120, table="s5.json")
    add("a6.json", "A6", 6, [[1, 2, 3, 4, 0, 5], [0, 2, 3, 4, 5, 1]], 360)
    add("a7.json", "A7", 7, [[1, 2, 3, 4, 5, 6, 0], [1, 2, 0, 3, 4, 5, 6]], 2520)
    add("psl2_7.json", "PSL(2,7)", 8,
        [[1, 2, 3, 4, 5, 6, 0, 7], [7, 6, 3, 2, 5, 4, 1, 0]], 168, table="psl2_7.json")
    add("psl2_8.json", "PSL(2,8)", 9,
        [[1, 0, 3, 2, 5, 4, 7, 6, 8], [0, 2, 4, 6, 3, 1, 7, 5, 8], [8, 1, 5, 6, 7, 2, 3, 4, 0]], 504)
    add("psl2_11.json", "PSL(2,11)", 12,
        [[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 11], [11, 10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 0]], 660)
    add("sl2_3.json", "SL(2,3)", 8, [[3, 7, 2, 6, 1, 5, 0, 4], [5, 2, 0, 6, 3, 1, 7, 4]], 24)

    with open(os.path.join(ROOT, "corpus.json"), "w") as f:
        json.dump({"groups": manifest}, f, indent=1)
        f.write("\n")

    # --- character tables ---

    for n in range(2, 13):
        w = cmath.exp(2j * math.pi / n)
        classes = [(f"c{k}", 1, n // math.gcd(n, k) if k else 1) for k in range(n)]
        rows = [[w ** (j * k) for k in range(n)] for j in range(n)]
        write_table(f"z{n}.json", f"Z/{n}", n, classes, rows)

    write_table("s3.json", "S3", 6,
                [("1a", 1, 1), ("2a", 3, 2), ("3a", 2, 3)],
                [[1, 1, 1], [1, -1, 1], [2, 0, -1]])

    d8_classes = [("1a", 1, 1), ("2a", 1, 2), ("4a", 2, 4), ("2b", 2, 2), ("2c", 2, 2)]
    two_dim_rows = [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, 1, -1],
        [1, 1, -1, -1, 1],
        [2, -2, 0, 0, 0],
    ]
    write_table("d8.json", "D8", 8, d8_classes, two_dim_rows)
    write_table("q8.json", "Q8", 8,
                [("1a", 1, 1), ("2a", 1, 2), ("4a", 2, 4), ("4b", 2, 4), ("4c", 2, 4)],
                two_dim_rows)

    w3 = cmath.exp(2j * math.pi / 3)
    write_table("a4.json", "A4", 12,
                [("1a", 1, 1), ("2a", 3, 2), ("3a", 4, 3), ("3b", 4, 3)],
                [[1, 1, 1, 1], [1, 1, w3, w3 ** 2], [1, 1, w3 ** 2, w3], [3, -1, 0, 0]])

    write_table("s4.json", "S4", 24,
                [("1a", 1, 1), ("2a", 6, 2), ("2b", 3, 2), ("3a", 8, 3), ("4a", 6, 4)],
                [[1, 1, 1, 1, 1],
                 [1, -1, 1, 1, -1],
                 [2, 0, 2, -1, 0],
                 [3, 1, -1, 0, -1],
                 [3, -1, -1, 0, 1]])

    phi = (1 + math.sqrt(5)) / 2
    psi = (1 - math.sqrt(5)) / 2
    write_table("a5.json", "A5", 60,
                [("1a", 1, 1), ("2a", 15, 2), ("3a", 20, 3), ("5a", 12, 5), ("5b", 12, 5)],
                [[1, 1, 1, 1, 1],
                 [3, -1, 0, phi, psi],
                 [3, -1, 0, psi, phi],
                 [4, 0, 1, -1, -1],
                 [5, 1, -1, 0, 0]])

    write_table("s5.json", "S5", 120,
                [("1a", 1, 1), ("2a", 10, 2), ("2b", 15, 2), ("3a", 20, 3),
                 ("6a", 20, 6), ("4a", 30, 4), ("5a", 24, 5)],
                [[1, 1, 1, 1, 1, 1, 1],
                 [1, -1, 1, 1, -1, -1, 1],
                 [4, 2, 0, 1, -1, 0, -1],
                 [4, -2, 0, 1, 1, 0, -1],
                 [5, 1, 1, -1, 1, -1, 0],
                 [5, -1, 1, -1, -1, 1, 0],
                 [6, 0, -2, 0, 0, 0, 1]])

    alpha = complex(-0.5, math.sqrt(7) / 2)
    write_table("psl2_7.json", "PSL(2,7)", 168,
                [("1a", 1, 1), ("2a", 21, 2), ("3a", 56, 3), ("4a", 42, 4), ("7a", 24, 7), ("7b", 24, 7)],
                [[1, 1, 1, 1, 1, 1],
                 [3, -1, 0, 1, alpha, alpha.conjugate()],
                 [3, -1, 0, 1, alpha.conjugate(), alpha],
                 [6, 2, 0, 0, -1, -1],
                 [7, -1, 1, -1, 0, 0],
                 [8, 0, -1, 0, 1, 1]])

    print("corpus written to", ROOT)


if __name__ == "__main__":
    sys.exit(main())

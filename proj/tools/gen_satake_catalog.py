#!/usr/bin/env python3
"""Regenerate data/satake_catalog.json.

Satake diagrams are transcribed from the standard classification tables
(Bourbaki node labels, 1-based). index_coweight is the sum of the positive
coroots of the black subsystem, written in the simple-coroot basis; the sign
(-1)^<lambda, index_coweight> is the Cartan index of a self-conjugate module.

Usage: gen_satake_catalog.py > data/satake_catalog.json
"""
import itertools
import json
import sys
from fractions import Fraction

CATALOG_VERSION = 1


def edges_and_lengths(t, n):
    """Dynkin edges (1-based) and squared root lengths."""
    edges = []
    lengths = [2] * n
    if t in "ABC":
        edges = [(i, i + 1) for i in range(1, n)]
        if t == "B":
            lengths = [4] * (n - 1) + [2]
        elif t == "C":
            lengths = [2] * (n - 1) + [4]
    elif t == "D":
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    elif t == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
    elif t == "F":
        edges = [(1, 2), (2, 3), (3, 4)]
        lengths = [4, 4, 2, 2]
    elif t == "G":
        edges = [(1, 2)]
        lengths = [2, 6]
    return edges, lengths


def gram(t, n):
    edges, lengths = edges_and_lengths(t, n)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = lengths[i]
    for i, j in edges:
        v = -max(lengths[i - 1], lengths[j - 1]) // 2
        b[i - 1][j - 1] = b[j - 1][i - 1] = v
    return b


def positive_roots(b, nodes):
    """Positive roots of the subsystem spanned by `nodes` (0-based), by
    brute-force reflection closure."""
    n = len(b)

    def refl(i, v):
        pair = Fraction(2 * sum(v[k] * b[i][k] for k in range(n)), b[i][i])
        w = list(v)
        w[i] -= int(pair)
        return tuple(w)

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in nodes]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in nodes:
                w = refl(i, v)
                if w not in seen and all(x >= 0 for x in w):
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def two_rho_check(b, nodes):
    """Sum of positive coroots of the subsystem on `nodes`, simple-coroot basis."""
    n = len(b)
    total = [Fraction(0)] * n
    for beta in positive_roots(b, nodes):
        norm = sum(beta[i] * beta[j] * b[i][j] for i in range(n) for j in range(n))
        for i in range(n):
            total[i] += Fraction(beta[i] * b[i][i], norm)
    assert all(x.denominator == 1 for x in total)
    return [int(x) for x in total]


def form(t, n, name, black, swaps=(), aliases=()):
    black = sorted(black)
    b = gram(t, n)
    coweight = two_rho_check(b, [i - 1 for i in black])
    return {
        "type": t,
        "rank": n,
        "name": name,
        "aliases": list(aliases),
        "black_nodes": black,
        "omega": [list(p) for p in swaps],
        "index_coweight": coweight,
    }


def reversal_pairs(nodes, n):
    return [(i, n + 1 - i) for i in nodes if i < n + 1 - i]


def forms_A(n):
    out = [form("A", n, f"sl({n + 1},R)", [], aliases=["split", "AI"])]
    for p in range(1, (n + 1) // 2 + 1):
        q = n + 1 - p
        if n == 1:
            break  # su(1,1) coincides with sl(2,R)
        black = list(range(p + 1, n - p + 1))
        white = [i for i in range(1, n + 1) if i not in black]
        aliases = ["quasi-split"] if q - p <= 1 else []
        out.append(form("A", n, f"su({p},{q})", black, reversal_pairs(white, n), aliases))
    if n % 2 == 1 and n >= 3:
        m = (n + 1) // 2
        out.append(form("A", n, f"sl({m},H)", range(1, n + 1, 2), aliases=["AII"]))
    out.append(form("A", n, f"su({n + 1})", range(1, n + 1),
                    reversal_pairs([], n), aliases=["compact"]))
    return out


def forms_B(n):
    out = []
    for p in range(0, n + 1):
        q = 2 * n + 1 - p
        aliases = []
        if p == 0:
            aliases = ["compact"]
        elif p == n:
            aliases = ["split"]
        out.append(form("B", n, f"so({p},{q})", range(p + 1, n + 1), aliases=aliases))
    return out


def forms_C(n):
    out = [form("C", n, f"sp({2 * n},R)", [], aliases=["split", "CI"])]
    for p in range(1, n // 2 + 1):
        q = n - p
        white = list(range(2, 2 * p + 1, 2))
        black = [i for i in range(1, n + 1) if i not in white]
        out.append(form("C", n, f"sp({p},{q})", black))
    out.append(form("C", n, f"sp({n})", range(1, n + 1), aliases=["compact"]))
    return out


def forms_D(n):
    out = []
    for p in range(0, n + 1):
        q = 2 * n - p
        aliases = []
        swaps = []
        if p <= n - 2:
            black = range(p + 1, n + 1)
            if p == 0:
                aliases = ["compact"]
        elif p == n - 1:
            black = []
            swaps = [(n - 1, n)]
            aliases = ["quasi-split"]
        else:
            black = []
            aliases = ["split"]
        out.append(form("D", n, f"so({p},{q})", black, swaps, aliases))
    if n % 2 == 0:
        black = range(1, n, 2)
        out.append(form("D", n, f"so*({2 * n})", black, aliases=["DIII"]))
    else:
        black = range(1, n - 1, 2)
        out.append(form("D", n, f"so*({2 * n})", black, [(n - 1, n)], aliases=["DIII"]))
    return out


def forms_E(n):
    if n == 6:
        return [
            form("E", 6, "EI", [], aliases=["split", "e6(6)"]),
            form("E", 6, "EII", [], [(1, 6), (3, 5)], aliases=["quasi-split", "e6(2)"]),
            form("E", 6, "EIII", [3, 4, 5], [(1, 6)], aliases=["e6(-14)"]),
            form("E", 6, "EIV", [2, 3, 4, 5], aliases=["e6(-26)"]),
            form("E", 6, "compact", range(1, 7), aliases=["e6(-78)"]),
        ]
    if n == 7:
        return [
            form("E", 7, "EV", [], aliases=["split", "e7(7)"]),
            form("E", 7, "EVI", [2, 5, 7], aliases=["e7(-5)"]),
            form("E", 7, "EVII", [2, 3, 4, 5], aliases=["e7(-25)"]),
            form("E", 7, "compact", range(1, 8), aliases=["e7(-133)"]),
        ]
    return [
        form("E", 8, "EVIII", [], aliases=["split", "e8(8)"]),
        form("E", 8, "EIX", [2, 3, 4, 5], aliases=["e8(-24)"]),
        form("E", 8, "compact", range(1, 9), aliases=["e8(-248)"]),
    ]


def main():
    forms = []
    for n in range(1, 9):
        forms += forms_A(n)
    for n in range(2, 9):
        forms += forms_B(n)
    for n in range(2, 9):
        forms += forms_C(n)
    for n in range(4, 9):
        forms += forms_D(n)
    for n in (6, 7, 8):
        forms += forms_E(n)
    forms += [
        form("F", 4, "FI", [], aliases=["split", "f4(4)"]),
        form("F", 4, "FII", [1, 2, 3], aliases=["f4(-20)"]),
        form("F", 4, "compact", range(1, 5), aliases=["f4(-52)"]),
        form("G", 2, "G", [], aliases=["split", "g2(2)"]),
        form("G", 2, "compact", [1, 2], aliases=["g2(-14)"]),
    ]
    json.dump({"catalog_version": CATALOG_VERSION, "forms": forms}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()

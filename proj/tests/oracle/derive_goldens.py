"""Independent oracle for the frozen values used by the unit tests.

Facets are rebuilt from the family definitions, cell nonemptiness is decided
with scipy's HiGHS LP on the cell system, and combinatorial quantities are
computed by brute force with fractions. Run with python3; prints JSON.
"""
import itertools
import json
from fractions import Fraction as Fr
from math import gcd

import numpy as np
from scipy.optimize import linprog


def cube_facets(d):
    out = []
    for i in range(d):
        for s in (1, -1):
            z = [0] * d
            z[i] = s
            out.append((f"F{i+1}{'+' if s > 0 else '-'}", z, 1))
    return out


def cross_facets(d):
    out = []
    for mask in range(1 << d):
        z = [1 if mask >> i & 1 else -1 for i in range(d)]
        label = "F{" + ",".join(str(i + 1) for i in range(d) if mask >> i & 1) + "}"
        out.append((label, z, 1))
    return out


def root_facets(d):
    out = []
    for mask in range(1, (1 << d) - 1):
        z = [1 if mask >> i & 1 else 0 for i in range(d)]
        label = "F{" + ",".join(str(i + 1) for i in range(d) if mask >> i & 1) + "}"
        out.append((label, z, 1))
    return out


def cell_nonempty(facets, f, g, a, sum_zero=False):
    d = len(a)
    zf = np.array(facets[f][1], float) / facets[f][2]
    zg = np.array(facets[g][1], float) / facets[g][2]
    a = np.array([float(x) for x in a])
    A_ub, b_ub = [], []
    for h, (_, z, b) in enumerate(facets):
        zh = np.array(z, float) / b
        if h != f:
            A_ub.append(zh - zf)
            b_ub.append(0.0)
        if h != g:
            A_ub.append(zh - zg)
            b_ub.append((zh - zg) @ a)
    A_eq = [zf - zg]
    b_eq = [-(zg @ a)]
    if sum_zero:
        A_eq.append(np.ones(d))
        b_eq.append(0.0)
    res = linprog(np.zeros(d), A_ub=np.array(A_ub), b_ub=np.array(b_ub) + 1e-9, A_eq=np.array(A_eq),
                  b_eq=np.array(b_eq), bounds=[(None, None)] * d, method="highs")
    return res.status == 0


def cells(facets, a, sum_zero=False):
    n = len(facets)
    return [(facets[f][0], facets[g][0]) for f in range(n) for g in range(n)
            if cell_nonempty(facets, f, g, a, sum_zero)]


def primitive(v):
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def ray_count(verts):
    dirs = set()
    for i, j in itertools.permutations(range(len(verts)), 2):
        dirs.add(primitive([verts[i][k] - verts[j][k] for k in range(2)]))
    return len(dirs)


def subset_sum(a, K):
    return sum((a[i] for i in K), Fr(0))


def p_function(a):
    d = len(a)
    total = Fr(0)
    for mask in range(1 << d):
        I = [i for i in range(d) if mask >> i & 1]
        Ic = [i for i in range(d) if not mask >> i & 1]
        subs = [subset_sum(a, K) for S in (I, Ic) for r in range(len(S) + 1)
                for K in itertools.combinations(S, r)]
        total += max(subs) + min(subs)
    return total


def d_signature(a):
    d = len(a)
    idx = range(d)
    pos = [i for i in idx if a[i] > 0]
    neg = [i for i in idx if a[i] < 0]
    splus = sorted(sorted(i + 1 for i in K) for r in range(1, d) for K in itertools.combinations(idx, r)
                   if subset_sum(a, K) > 0)
    heavy = sorted(sorted(i + 1 for i in X) for r in range(len(pos) + 1) for X in itertools.combinations(pos, r)
                   if subset_sum(a, X) > subset_sum(a, [i for i in pos if i not in X]))
    light = sorted(sorted(i + 1 for i in X) for r in range(len(neg) + 1) for X in itertools.combinations(neg, r)
                   if subset_sum(a, X) < subset_sum(a, [i for i in neg if i not in X]))
    return {"positiveSums": splus, "heavyPositive": heavy, "lightNegative": light}


def main():
    F = Fr
    regular_hex = [(F(1), F(0)), (F(1), F(1)), (F(0), F(1)), (F(-1), F(0)), (F(-1), F(-1)), (F(0), F(-1))]
    perturbed_hex = [(F(1), F(0)), (F(1), F(1)), (F(1, 5), F(4, 5)), (F(-1), F(0)), (F(-1), F(-1)),
                     (F(-1, 5), F(-4, 5))]
    square = [(F(1), F(0)), (F(0), F(1)), (F(-1), F(0)), (F(0), F(-1))]
    out = {
        "rays": {"square": ray_count(square), "regularHexagon": ray_count(regular_hex),
                 "perturbedHexagon": ray_count(perturbed_hex)},
        "cells": {
            "cube3_5_2_-1": cells(cube_facets(3), [5, 2, -1]),
            "cross2_3_1": cells(cross_facets(2), [3, 1]),
            "cross3_5_1_-2": cells(cross_facets(3), [5, 1, -2]),
            "cross4_7_-3_2_5": len(cells(cross_facets(4), [7, -3, 2, 5])),
            "root3_2_-3_1": cells(root_facets(3), [2, -3, 1], True),
            "root4_5_-2_-4_1": len(cells(root_facets(4), [5, -2, -4, 1], True)),
            "root5_7_-3_-5_2_-1": len(cells(root_facets(5), [7, -3, -5, 2, -1], True)),
        },
        "p": {"2,-3,1": str(p_function([F(2), F(-3), F(1)])),
              "-2,3,-1": str(p_function([F(-2), F(3), F(-1)])),
              "5,-2,-4,1": str(p_function([F(5), F(-2), F(-4), F(1)]))},
        "D": {"2,-3,1": d_signature([F(2), F(-3), F(1)]),
              "3,-4,1": d_signature([F(3), F(-4), F(1)])},
    }
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()

"""Independent brute-force oracles used only by the tests.

Nothing here imports the implementation of the thing it checks: path
families come from itertools, ballot areas from shapely polygons,
inversions straight from the clause definitions, and LP feasibility from
Fourier-Motzkin elimination.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from shapely.geometry import Polygon, box


def all_words(n: int):
    return ("".join(w) for w in itertools.product("NE", repeat=2 * n))


def nle_key(w):
    """Lexicographic order with N < E."""
    return w.translate(str.maketrans("NE", "01"))


def brute_L(n):
    return sorted((w for w in all_words(n) if w.count("N") == n), key=nle_key)


def _prefix_ok(w):
    h = 0
    for s in w:
        h += 1 if s == "N" else -1
        if h < 0:
            return False
    return True


def brute_B(n):
    return sorted((w for w in all_words(n) if _prefix_ok(w)), key=nle_key)


def brute_D(n):
    return [w for w in brute_L(n) if _prefix_ok(w)]


def east_counts(path):
    out, e = [], 0
    for s in path:
        if s == "E":
            e += 1
        else:
            out.append(e)
    return out


def area_vec_C(path):
    return [i - b for i, b in enumerate(east_counts(path), 1)]


def area_vec_A(path):
    return [i - 1 - b for i, b in enumerate(east_counts(path), 1)]


def shapely_ballot_boxes(path: str) -> set[tuple[int, int]]:
    """Unit boxes inside the staircase triangle and right of the path."""
    n = len(path) // 2
    pts = [(0, 0)]
    for s in path:
        x, y = pts[-1]
        pts.append((x, y + 1) if s == "N" else (x + 1, y))
    top = pts[-1][1]
    far = 2 * n + 2
    right = Polygon(pts + [(far, top), (far, 0)]).buffer(0)
    tri = Polygon([(0, 0), (n + 0.5, n + 0.5), (0, 2 * n + 1)])
    out = set()
    for c in range(1, n + 1):
        for r in range(1, 2 * n + 1):
            b = box(c - 1, r - 1, c, r)
            if tri.buffer(1e-9).contains(b) and right.intersection(b).area > 0.999:
                out.add((c, r))
    return out


def dinv_C_clauses(a):
    """Clause-by-clause count: pairs (i<j) for each of the four relations, plus zeros."""
    n = len(a)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += a[i] == a[j]
            total += a[i] == a[j] + 1
            total += a[i] == -a[j]
            total += a[i] == -a[j] + 1
    return total + sum(1 for x in a if x == 0)


def dinv_prime_C_clauses(a, s):
    n = len(a)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += a[i] == a[j] and s[i] < s[j]
            total += a[i] == a[j] + 1 and s[i] > s[j]
            total += a[i] == -a[j] and s[i] < -s[j]
            total += a[i] == -a[j] + 1 and s[i] > -s[j]
    return total + sum(1 for x, y in zip(a, s) if x == 0 and y < 0)


def dinv_A_pairs(a, s=None):
    n = len(a)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] == a[j] and (s is None or s[i] < s[j]):
                total += 1
            if a[i] == a[j] + 1 and (s is None or s[i] > s[j]):
                total += 1
    return total


def area_A_boxes(path, s=None):
    """Boxes (i, j) strictly between a Dyck path and the diagonal, i < j rows."""
    b = east_counts(path)
    n = len(b)
    total = 0
    for j in range(1, n + 1):
        for i in range(b[j - 1] + 1, j):
            if s is None or s[i - 1] < s[j - 1]:
                total += 1
    return total


# -- Fourier-Motzkin --------------------------------------------------------

def fm_feasible(strict, bound, dim) -> bool:
    """Decide strict feasibility inside |x_i| <= bound by eliminating variables.

    Each constraint is (coeffs, rhs, is_strict) meaning coeffs.x > rhs
    (or >= when not strict).
    """
    cons = [(tuple(Fraction(c) for c in a), Fraction(b), True) for a, b in strict]
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        cons.append((tuple(Fraction(x) for x in e), Fraction(-bound), False))
        cons.append((tuple(Fraction(-x) for x in e), Fraction(-bound), False))
    for k in range(dim):
        pos, neg, rest = [], [], []
        for a, b, st in cons:
            (pos if a[k] > 0 else neg if a[k] < 0 else rest).append((a, b, st))
        new = list(rest)
        for ap, bp, sp in pos:
            for an, bn, sn in neg:
                lp, ln = -an[k], ap[k]
                a = tuple(lp * x + ln * y for x, y in zip(ap, an))
                new.append((a, lp * bp + ln * bn, sp or sn))
        cons = new
    for _, b, st in cons:
        if (st and not 0 > b) or (not st and not 0 >= b):
            return False
    return True

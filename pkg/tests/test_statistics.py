from collections import Counter

import pytest

from oracles import (
    area_A_boxes,
    area_vec_A,
    area_vec_C,
    brute_D,
    brute_L,
    dinv_A_pairs,
    dinv_C_clauses,
    dinv_prime_C_clauses,
    east_counts,
)
from shizeta.labelled import (
    DiagonalPath,
    VerticalPath,
    diagonal_word,
    enumerate_diagonal_A,
    enumerate_diagonal_C,
    enumerate_vertical_A,
    enumerate_vertical_C,
)
from shizeta.paths import ballot_area, path_from_area_vector_C
from shizeta.statistics import (
    EQ,
    NEG,
    NEGSHIFT,
    SHIFT,
    ZERO,
    TypedInversion as T,
    area_A,
    area_prime_A,
    area_prime_C,
    dinv_A,
    dinv_C,
    dinv_prime_A,
    dinv_prime_C,
    qt_distribution,
    typed_inversions_C,
)

BETA6 = "NEEEENNNNNEE"


def test_area_A_examples():
    assert area_A("NENNNENEEE") == 5
    for n in range(1, 6):
        assert area_A("N" * n + "E" * n) == n * (n - 1) // 2
    assert area_A("NENENE") == 0


def test_area_prime_A_examples():
    assert area_prime_A(DiagonalPath("NENNNENEEE", (1, 2, 3, 5, 4))) == 4
    assert area_prime_A(DiagonalPath("NNNNEEEE", (1, 2, 3, 4))) == 6
    assert area_prime_A(DiagonalPath("NENENE", (3, 1, 2))) == 0


def test_area_prime_C_examples():
    assert area_prime_C(DiagonalPath("NNENNE", (-1, 2, -3, 3, -2, 1))) == 1
    for n in range(1, 5):
        assert area_prime_C(DiagonalPath("N" * (2 * n), diagonal_word(tuple(range(1, n + 1))))) == n * n
    assert area_prime_C(DiagonalPath("NENE", (2, -1, 1, -2))) == 0


def test_typed_inversions_examples():
    got = Counter(typed_inversions_C(BETA6))
    want = Counter([T(EQ, 1, 5), T(SHIFT, 1, 4), T(NEG, 1, 3), T(NEG, 2, 6), T(NEG, 3, 5),
                    T(NEGSHIFT, 1, 4), T(NEGSHIFT, 3, 6), T(NEGSHIFT, 4, 5), T(ZERO, 4)])
    assert got == want
    got = Counter(typed_inversions_C(path_from_area_vector_C((1, 0, 1))))
    assert got == Counter([T(SHIFT, 1, 2), T(NEGSHIFT, 1, 2), T(EQ, 1, 3),
                           T(NEGSHIFT, 2, 3), T(ZERO, 2)])
    assert typed_inversions_C("NNNEEE") == []
    assert str(T(ZERO, 4)) == "ZERO(4)"


def test_dinv_examples():
    assert dinv_C(BETA6) == 9
    assert dinv_A("NNNEENENEE") == 5
    assert dinv_C("NEEENN") == 4


def test_dinv_prime_examples():
    assert dinv_prime_C(VerticalPath(BETA6, (1, -5, -4, 2, 3, 6))) == 6
    assert dinv_prime_C(VerticalPath("NEENNE", (2, -1, 3))) == 5
    assert dinv_prime_C(VerticalPath("NEEENN", (2, 1, 3))) == 1
    assert dinv_prime_A(VerticalPath("NNNEENENEE", (1, 2, 4, 3, 5))) == 4
    assert dinv_prime_A(VerticalPath("NNNEEE", (1, 2, 3))) == 0
    assert dinv_prime_A(VerticalPath("NENENE", (1, 2, 3))) == 3


def test_qt_distribution_examples():
    dist = qt_distribution(enumerate_vertical_C(1), dinv_prime_C, lambda v: dinv_C(v.path))
    assert dist.marginal(0) == Counter({0: 2, 1: 1})
    dist = qt_distribution(enumerate_diagonal_C(1), area_prime_C, lambda d: ballot_area(d.path))
    assert dist.marginal(0) == Counter({0: 2, 1: 1})
    dist = qt_distribution(enumerate_vertical_C(3), dinv_prime_C, lambda v: dinv_C(v.path))
    assert sum(dist.values()) == 343
    csv = dist.to_csv().splitlines()
    assert csv[0] == "q,t,count"
    rows = [tuple(map(int, line.split(","))) for line in csv[1:]]
    assert rows == sorted(rows)
    assert sum(r[2] for r in rows) == 343
    assert dist.to_json()[0] == {"q": rows[0][0], "t": rows[0][1], "count": rows[0][2]}


@pytest.mark.parametrize("n", range(1, 7))
def test_dinv_against_clause_oracle(n):
    for p in brute_L(n):
        assert dinv_C(p) == dinv_C_clauses(area_vec_C(p))
        zeros = sum(1 for i, b in enumerate(east_counts(p), 1) if b == i)
        assert sum(1 for t in typed_inversions_C(p) if t.kind == ZERO) == zeros
        assert all(t.j is None or t.i < t.j for t in typed_inversions_C(p))
    for p in brute_D(n):
        assert dinv_A(p) == dinv_A_pairs(area_vec_A(p))
        assert dinv_C(p) == dinv_A(p)
        assert area_A(p) == area_A_boxes(p)


@pytest.mark.parametrize("n", range(1, 4))
def test_labelled_stats_against_oracle(n):
    for v in enumerate_vertical_C(n):
        d = dinv_prime_C(v)
        assert d == dinv_prime_C_clauses(area_vec_C(v.path), v.labels)
        assert d <= dinv_C(v.path)
    for v in enumerate_vertical_A(n + 1):
        assert dinv_prime_A(v) == dinv_A_pairs(area_vec_A(v.path), v.labels)
    for d in enumerate_diagonal_A(n + 1):
        assert area_prime_A(d) == area_A_boxes(d.path, d.labels)
    for d in enumerate_diagonal_C(n):
        assert area_prime_C(d) <= ballot_area(d.path)


@pytest.mark.parametrize("n", range(1, 5))
def test_distribution_identity(n):
    vert = Counter(dinv_prime_C(v) for v in enumerate_vertical_C(n))
    diag = Counter(area_prime_C(d) for d in enumerate_diagonal_C(n))
    assert vert == diag
    vert = Counter(dinv_prime_A(v) for v in enumerate_vertical_A(n))
    diag = Counter(area_prime_A(d) for d in enumerate_diagonal_A(n))
    assert vert == diag

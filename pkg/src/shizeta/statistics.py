"""area, area', dinv and dinv' in types A and C, plus joint distributions."""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable, NamedTuple, Sequence

from .labelled import DiagonalPath, VerticalPath
from .paths import area_vector_A, area_vector_C, ballot_area, ballot_boxes, east_before_north

# inversion kinds, keyed by the relation between a_i and a_j
EQ, SHIFT, NEG, NEGSHIFT, ZERO = "EQ", "SHIFT", "NEG", "NEGSHIFT", "ZERO"
KINDS = (EQ, SHIFT, NEG, NEGSHIFT, ZERO)


class TypedInversion(NamedTuple):
    kind: str
    i: int
    j: int | None = None

    def __str__(self) -> str:
        if self.j is None:
            return f"{self.kind}({self.i})"
        return f"{self.kind}({self.i},{self.j})"


def area_A(path: str) -> int:
    return sum(area_vector_A(path))


def _boxes_A(path: str) -> Iterable[tuple[int, int]]:
    # row j of a Dyck path holds boxes in columns b_j + 1 .. j - 1
    for j, b in enumerate(east_before_north(path), 1):
        for i in range(b + 1, j):
            yield i, j


def area_prime_A(d: DiagonalPath) -> int:
    s = d.labels
    return sum(1 for i, j in _boxes_A(d.path) if s[i - 1] < s[j - 1])


def area_C(path: str) -> int:
    return ballot_area(path)


def area_prime_C(d: DiagonalPath) -> int:
    w = d.labels
    return sum(1 for c, r in ballot_boxes(d.path) if w[c - 1] > w[r - 1])


def inversions_of_area_vector(a: Sequence[int]) -> list[TypedInversion]:
    n = len(a)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            x, y = a[i], a[j]
            if x == y:
                out.append(TypedInversion(EQ, i + 1, j + 1))
            if x == y + 1:
                out.append(TypedInversion(SHIFT, i + 1, j + 1))
            if x == -y:
                out.append(TypedInversion(NEG, i + 1, j + 1))
            if x == -y + 1:
                out.append(TypedInversion(NEGSHIFT, i + 1, j + 1))
    out.extend(TypedInversion(ZERO, i + 1) for i in range(n) if a[i] == 0)
    return out


def typed_inversions_C(path: str) -> list[TypedInversion]:
    """Diagonal inversions of a path in L_{n,n}; one pair may occur under
    several kinds and then counts once per kind."""
    return inversions_of_area_vector(area_vector_C(path))


def dinv_C(path: str) -> int:
    return len(typed_inversions_C(path))


def dinv_A(path: str) -> int:
    a = area_vector_A(path)
    n = len(a)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if a[i] == a[j] or a[i] == a[j] + 1
    )


def _label_ok(inv: TypedInversion, s: Sequence[int]) -> bool:
    x = s[inv.i - 1]
    if inv.kind == ZERO:
        return x < 0
    y = s[inv.j - 1]
    if inv.kind == EQ:
        return x < y
    if inv.kind == SHIFT:
        return x > y
    if inv.kind == NEG:
        return x < -y
    return x > -y


def dinv_prime_C(v: VerticalPath) -> int:
    return sum(1 for inv in typed_inversions_C(v.path) if _label_ok(inv, v.labels))


def dinv_prime_A(v: VerticalPath) -> int:
    a = area_vector_A(v.path)
    s = v.labels
    n = len(a)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] == a[j] and s[i] < s[j]:
                total += 1
            elif a[i] == a[j] + 1 and s[i] > s[j]:
                total += 1
    return total


class QTDistribution(Counter):
    """Joint counts keyed by (q exponent, t exponent)."""

    def marginal(self, axis: int = 0) -> Counter:
        out: Counter = Counter()
        for key, c in self.items():
            out[key[axis]] += c
        return out

    def rows(self) -> list[tuple[int, int, int]]:
        return [(q, t, c) for (q, t), c in sorted(self.items())]

    def to_csv(self) -> str:
        lines = ["q,t,count"]
        lines.extend(f"{q},{t},{c}" for q, t, c in self.rows())
        return "\n".join(lines) + "\n"

    def to_json(self) -> list[dict]:
        return [{"q": q, "t": t, "count": c} for q, t, c in self.rows()]


def qt_distribution(family: Iterable, stat_q: Callable, stat_t: Callable) -> QTDistribution:
    dist = QTDistribution()
    for obj in family:
        dist[stat_q(obj), stat_t(obj)] += 1
    return dist

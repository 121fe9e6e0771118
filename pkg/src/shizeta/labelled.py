"""Vertically and diagonally labelled paths, parking functions, Shi pairs.

A vertically labelled path carries one label per North step; a diagonally
labelled path carries one label per diagonal box. In type C the diagonal
labels form the word ``w`` of length 2n attached to a signed permutation
``s`` by ``w_i = s(n+1-i)`` for i <= n and ``w_i = -s(i-n)`` for i > n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .paths import (
    east_before_north,
    enumerate_B,
    enumerate_D,
    is_ballot,
    is_dyck,
    is_square,
    rises,
    valleys,
)
from .roots import (
    Root,
    RootSystem,
    antichain_of_ballot,
    antichain_of_dyck,
    ballot_of_antichain,
    dyck_of_antichain,
    is_shi_pair,
)


@dataclass(frozen=True)
class VerticalPath:
    path: str
    labels: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.path} {format_ints(self.labels)}"


@dataclass(frozen=True)
class DiagonalPath:
    """Diagonal labelling; ``labels`` is sigma in type A, the 2n-word in type C."""

    path: str
    labels: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.path} {format_ints(self.labels)}"


def parse_ints(text: str) -> tuple[int, ...]:
    """Parse ``"4,0,-1,-4"``."""
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def format_ints(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def is_permutation(s: Sequence[int]) -> bool:
    return sorted(s) == list(range(1, len(s) + 1))


def is_signed_permutation(s: Sequence[int]) -> bool:
    return sorted(abs(x) for x in s) == list(range(1, len(s) + 1))


def signed_permutations(n: int) -> Iterator[tuple[int, ...]]:
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((-1, 1), repeat=n):
            yield tuple(a * b for a, b in zip(signs, p))


# -- diagonal words --------------------------------------------------------

def diagonal_word(sigma: Sequence[int]) -> tuple[int, ...]:
    n = len(sigma)
    head = [sigma[n - i] for i in range(1, n + 1)]
    return tuple(head + [-x for x in reversed(head)])


def is_diagonal_word(w: Sequence[int]) -> bool:
    if len(w) % 2 or not w:
        return False
    n = len(w) // 2
    if any(w[2 * n - 1 - k] != -w[k] for k in range(n)):
        return False
    return is_signed_permutation(w[:n])


def signed_perm_of_word(w: Sequence[int]) -> tuple[int, ...]:
    if not is_diagonal_word(w):
        raise ValueError(f"not a diagonal word: {format_ints(w)}")
    n = len(w) // 2
    return tuple(w[n - k] for k in range(1, n + 1))


# -- validity predicates -------------------------------------------------------

def validate_vertical_A(path: str, sigma: Sequence[int]) -> bool:
    if not is_dyck(path) or len(sigma) != len(path) // 2 or not is_permutation(sigma):
        return False
    return all(sigma[i - 1] < sigma[i] for i in rises(path))


def validate_vertical_C(path: str, sigma: Sequence[int]) -> bool:
    if not is_square(path) or len(sigma) != len(path) // 2:
        return False
    if not is_signed_permutation(sigma):
        return False
    if path[0] == "N" and sigma[0] < 0:
        return False
    return all(sigma[i - 1] < sigma[i] for i in rises(path))


def columns_increase(path: str, sigma: Sequence[int]) -> bool:
    """Column form of the vertical condition: labels grow up each column,
    column 0 holds only positive labels."""
    cols: dict[int, list[int]] = {}
    for b, s in zip(east_before_north(path), sigma):
        cols.setdefault(b, []).append(s)
    if any(s < 0 for s in cols.get(0, [])):
        return False
    return all(all(x < y for x, y in zip(c, c[1:])) for c in cols.values())


def validate_diagonal_A(path: str, sigma: Sequence[int]) -> bool:
    if not is_dyck(path) or len(sigma) != len(path) // 2 or not is_permutation(sigma):
        return False
    return all(sigma[i - 1] < sigma[j - 1] for i, j in valleys(path))


def validate_diagonal_C(path: str, w: Sequence[int]) -> bool:
    if not is_ballot(path) or len(w) != len(path) or not is_diagonal_word(w):
        return False
    if any(w[i - 1] <= w[j - 1] for i, j in valleys(path)):
        return False
    if path[-1] == "E" and w[path.count("E") - 1] < 0:
        return False
    return True


# -- parking functions ---------------------------------------------------------

def is_parking_function_A(f: Sequence[int]) -> bool:
    n = len(f)
    if any(x < 0 for x in f):
        return False
    return all(sum(1 for x in f if x <= i - 1) >= i for i in range(1, n + 1))


def _columns_to_path(cols: dict[int, list[int]], n: int) -> VerticalPath:
    steps = ["N" * len(cols.get(0, []))]
    labels = sorted(cols.get(0, []))
    for j in range(1, n + 1):
        col = sorted(cols.get(j, []))
        steps.append("E" + "N" * len(col))
        labels.extend(col)
    return VerticalPath("".join(steps), tuple(labels))


def pf_to_vertical_C(f: Sequence[int]) -> VerticalPath:
    n = len(f)
    cols: dict[int, list[int]] = {}
    for i, x in enumerate(f, 1):
        if not -n <= x <= n:
            raise ValueError(f"entry {x} of {format_ints(f)} outside [-{n}, {n}]")
        if x >= 0:
            cols.setdefault(x, []).append(i)
        else:
            cols.setdefault(-x, []).append(-i)
    return _columns_to_path(cols, n)


def vertical_C_to_pf(v: VerticalPath) -> tuple[int, ...]:
    if not validate_vertical_C(v.path, v.labels):
        raise ValueError(f"invalid vertically labelled path {v}")
    g = [0] * len(v.labels)
    for col, s in zip(east_before_north(v.path), v.labels):
        g[abs(s) - 1] = col if s > 0 else -col
    return tuple(g)


def pf_to_vertical_A(f: Sequence[int]) -> VerticalPath:
    if not is_parking_function_A(f):
        raise ValueError(f"not a parking function: {format_ints(f)}")
    cols: dict[int, list[int]] = {}
    for i, x in enumerate(f, 1):
        cols.setdefault(x, []).append(i)
    return _columns_to_path(cols, len(f))


def vertical_A_to_pf(v: VerticalPath) -> tuple[int, ...]:
    if not validate_vertical_A(v.path, v.labels):
        raise ValueError(f"invalid vertically labelled Dyck path {v}")
    g = [0] * len(v.labels)
    for col, s in zip(east_before_north(v.path), v.labels):
        g[s - 1] = col
    return tuple(g)


def parking_functions_C(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(-n, n + 1), repeat=n)


def parking_functions_A(n: int) -> Iterator[tuple[int, ...]]:
    return (f for f in itertools.product(range(n), repeat=n) if is_parking_function_A(f))


# -- Shi pairs -------------------------------------------------------------------

def diagonal_C_to_shi_pair(d: DiagonalPath) -> tuple[frozenset[Root], tuple[int, ...]]:
    if not validate_diagonal_C(d.path, d.labels):
        raise ValueError(f"invalid diagonally labelled ballot path {d}")
    return antichain_of_ballot(d.path), signed_perm_of_word(d.labels)


def shi_pair_to_diagonal_C(A, sigma: Sequence[int]) -> DiagonalPath:
    rs = RootSystem("C", len(sigma))
    if not is_shi_pair(rs, A, sigma):
        raise ValueError("not a Shi pair: w(A) must be positive")
    return DiagonalPath(ballot_of_antichain(rs, A), diagonal_word(sigma))


def diagonal_A_to_shi_pair(d: DiagonalPath) -> tuple[frozenset[Root], tuple[int, ...]]:
    if not validate_diagonal_A(d.path, d.labels):
        raise ValueError(f"invalid diagonally labelled Dyck path {d}")
    return antichain_of_dyck(d.path), tuple(d.labels)


def shi_pair_to_diagonal_A(A, sigma: Sequence[int]) -> DiagonalPath:
    rs = RootSystem("A", len(sigma))
    if not is_shi_pair(rs, A, sigma):
        raise ValueError("not a Shi pair: w(A) must be positive")
    return DiagonalPath(dyck_of_antichain(rs, A), tuple(sigma))


# -- enumeration -------------------------------------------------------------------

_NE_ORDER = str.maketrans("NE", "01")


def enumerate_vertical_C(n: int) -> Iterator[VerticalPath]:
    """All vertically labelled paths, ordered by path (N < E) and then labels."""
    objs = [pf_to_vertical_C(f) for f in parking_functions_C(n)]
    objs.sort(key=lambda v: (v.path.translate(_NE_ORDER), v.labels))
    return iter(objs)


def enumerate_vertical_A(n: int) -> Iterator[VerticalPath]:
    perms = list(itertools.permutations(range(1, n + 1)))
    for path in enumerate_D(n):
        for s in perms:
            if validate_vertical_A(path, s):
                yield VerticalPath(path, s)


def enumerate_diagonal_C(n: int) -> Iterator[DiagonalPath]:
    words = [diagonal_word(s) for s in signed_permutations(n)]
    for path in enumerate_B(n):
        for w in words:
            if validate_diagonal_C(path, w):
                yield DiagonalPath(path, w)


def enumerate_diagonal_A(n: int) -> Iterator[DiagonalPath]:
    perms = list(itertools.permutations(range(1, n + 1)))
    for path in enumerate_D(n):
        for s in perms:
            if validate_diagonal_A(path, s):
                yield DiagonalPath(path, s)

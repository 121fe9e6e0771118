"""Lattice, Dyck and ballot paths as step words over ``N`` and ``E``.

Paths are plain strings such as ``"NENNNE"``. Every index used here is
1-based: the i-th North step is row i, the j-th East step is column j.
"""

from __future__ import annotations

from typing import Iterator, Sequence

STEPS = ("N", "E")


def parse_path(text: str) -> str:
    """Validate a step word and return it unchanged.

    >>> parse_path("NENNNE")
    'NENNNE'
    """
    if not text:
        raise ValueError("empty path")
    for pos, ch in enumerate(text, 1):
        if ch not in STEPS:
            raise ValueError(f"invalid step {ch!r} at position {pos} in {text!r}")
    return text


def rises(path: str) -> list[int]:
    """Indices i such that the i-th North step is followed by a North step."""
    out = []
    k = 0
    for pos, ch in enumerate(path):
        if ch == "N":
            k += 1
            if pos + 1 < len(path) and path[pos + 1] == "N":
                out.append(k)
    return out


def valleys(path: str) -> list[tuple[int, int]]:
    """Pairs (i, j) where the i-th East step is followed by the j-th North step."""
    out = []
    north = east = 0
    for pos, ch in enumerate(path):
        if ch == "N":
            north += 1
            if pos > 0 and path[pos - 1] == "E":
                out.append((east, north))
        else:
            east += 1
    return out


def is_ballot(path: str) -> bool:
    height = 0
    for ch in path:
        height += 1 if ch == "N" else -1
        if height < 0:
            return False
    return True


def is_dyck(path: str) -> bool:
    return is_ballot(path) and path.count("N") == path.count("E")


def is_square(path: str) -> bool:
    """True for members of L_{n,n} (as many North as East steps)."""
    return path.count("N") == path.count("E")


def east_before_north(path: str) -> list[int]:
    """b_i = number of East steps before the i-th North step."""
    out = []
    east = 0
    for ch in path:
        if ch == "N":
            out.append(east)
        else:
            east += 1
    return out


def area_vector_A(path: str) -> tuple[int, ...]:
    if not is_dyck(path):
        raise ValueError(f"not a Dyck path: {path}")
    return tuple(i - b for i, b in enumerate(east_before_north(path)))


def area_vector_C(path: str) -> tuple[int, ...]:
    if not is_square(path):
        raise ValueError(f"not in L(n,n): {path}")
    return tuple(i - b for i, b in enumerate(east_before_north(path), 1))


def path_from_area_vector_C(a: Sequence[int]) -> str:
    """Rebuild the path of L_{n,n} with the given type C area vector."""
    n = len(a)
    cols = [i - ai for i, ai in enumerate(a, 1)]
    prev = 0
    for c in cols:
        if c < prev or c > n:
            raise ValueError(f"invalid type C area vector {tuple(a)}")
        prev = c
    steps = []
    east = 0
    for c in cols:
        steps.append("E" * (c - east))
        steps.append("N")
        east = c
    steps.append("E" * (n - east))
    return "".join(steps)


def staircase_row_length(r: int, n: int) -> int:
    """Number of boxes in row r of the ballot staircase of half-length n."""
    return max(0, min(r - 1, 2 * n + 1 - r))


def ballot_boxes(path: str) -> list[tuple[int, int]]:
    """Boxes (column, row) of the staircase lying below a ballot path.

    Row r holds the boxes of columns ``b_r + 1 .. min(r - 1, 2n + 1 - r)``
    where ``b_r`` counts the East steps before the r-th North step. Rows
    above the final height of the path contribute nothing.
    """
    if len(path) % 2:
        raise ValueError("ballot paths have even length")
    n = len(path) // 2
    boxes = []
    for r, b in enumerate(east_before_north(path), 1):
        for c in range(b + 1, staircase_row_length(r, n) + 1):
            boxes.append((c, r))
    return boxes


def ballot_area(path: str) -> int:
    return len(ballot_boxes(path))


def reverse_swap(path: str) -> str:
    """Reverse the step word and exchange N with E."""
    return path[::-1].translate(str.maketrans("NE", "EN"))


def _walk(length: int, max_north: int, max_east: int, ballot: bool) -> Iterator[str]:
    # N sorts before E, so emitting N first yields lexicographic order
    buf: list[str] = []

    def rec(north: int, east: int) -> Iterator[str]:
        if north + east == length:
            yield "".join(buf)
            return
        if north < max_north:
            buf.append("N")
            yield from rec(north + 1, east)
            buf.pop()
        if east < max_east and (not ballot or east < north):
            buf.append("E")
            yield from rec(north, east + 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_L(n: int) -> Iterator[str]:
    """All paths of L_{n,n} in lexicographic order (N < E)."""
    return _walk(2 * n, n, n, ballot=False)


def enumerate_D(n: int) -> Iterator[str]:
    return _walk(2 * n, n, n, ballot=True)


def enumerate_B(n: int) -> Iterator[str]:
    return _walk(2 * n, 2 * n, 2 * n, ballot=True)

"""Zeta maps of types A and C, their labelled versions, and the sweep map.

The type C map reads the area vector in stages i = n, n-1, ..., 0. Each
stage makes a left-to-right pass (E for every entry -i-1, N for every
entry -i, in the order met) followed by a right-to-left pass (E for
every entry i+1, N for every entry i). An entry v > 0 therefore emits N
at stage v and E at stage v-1, an entry v < 0 emits N at stage -v and E
at stage -v-1, and an entry 0 emits N twice at stage 0: the output
always has exactly 2n steps, so no explicit stopping test is needed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from .labelled import DiagonalPath, VerticalPath, validate_diagonal_C, validate_vertical_C
from .paths import area_vector_A, area_vector_C, rises, valleys


def zeta_A(path: str) -> str:
    a = area_vector_A(path)
    n = len(a)
    steps = []
    for i in range(n + 1):
        for x in a:
            if x == i - 1:
                steps.append("E")
            elif x == i:
                steps.append("N")
    return "".join(steps)


def zeta_C(path: str) -> str:
    a = area_vector_C(path)
    n = len(a)
    steps = []
    for i in range(n, -1, -1):
        for x in a:
            if x == -i - 1:
                steps.append("E")
            elif x == -i:
                steps.append("N")
        for x in reversed(a):
            if x == i + 1:
                steps.append("E")
            elif x == i:
                steps.append("N")
    assert len(steps) == 2 * n
    return "".join(steps)


def zeta_labelled_A(v: VerticalPath) -> DiagonalPath:
    a = area_vector_A(v.path)
    labels = []
    for i in range(len(a) + 1):
        labels.extend(s for x, s in zip(a, v.labels) if x == i)
    return DiagonalPath(zeta_A(v.path), tuple(labels))


def zeta_labelled_C(v: VerticalPath) -> DiagonalPath:
    a = area_vector_C(v.path)
    n = len(a)
    rows = list(zip(a, v.labels))
    head = []
    for i in range(n, 0, -1):
        head.extend(s for x, s in reversed(rows) if x == i)
        head.extend(-s for x, s in rows if x == -i + 1)
    word = head + [-s for s in reversed(head)]
    return DiagonalPath(zeta_C(v.path), tuple(word))


# -- sweep -------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepLabelling:
    labels: tuple[int, ...]
    keyed: tuple[tuple[str, int], ...]   # (step, sort key), in step order


def sweep_labels(path: str) -> SweepLabelling:
    n = len(path) // 2
    labels = [0]
    for s in path[:-1]:
        labels.append(labels[-1] + (2 * n + 1 if s == "N" else -2 * n))
    keyed = []
    for k, lab in enumerate(labels):
        if lab < 0:
            keyed.append((path[k], lab))
        elif lab > 0:
            keyed.append((path[k - 1], -lab))
        else:
            keyed.append((path[-1], -n))
    keys = [key for _, key in keyed]
    if len(set(keys)) != len(keys):
        raise AssertionError(f"sweep keys collide for {path}: {keys}")
    return SweepLabelling(tuple(labels), tuple(keyed))


def sweep(path: str) -> str:
    keyed = sweep_labels(path).keyed
    return "".join(step for step, _ in sorted(keyed, key=lambda p: p[1]))


# -- rises, valleys and the valley description ---------------------------------

def rise_labels(v: VerticalPath) -> Counter:
    s = v.labels
    return Counter((s[i - 1], s[i]) for i in rises(v.path))


def valley_labels(d: DiagonalPath) -> tuple[Counter, int | None]:
    """Valley labels (w_i, w_j) and the label of the final East step, if any."""
    w = d.labels
    vl = Counter((w[i - 1], w[j - 1]) for i, j in valleys(d.path))
    final = w[d.path.count("E") - 1] if d.path[-1] == "E" else None
    return vl, final


def _canon(pair: tuple[int, int]) -> tuple[int, int]:
    a, b = pair
    return min((a, b), (-b, -a))


def check_valley_characterization(v: VerticalPath, d: DiagonalPath) -> bool:
    """Valley (a, b) of d  <->  rise (b, a) or (-a, -b) of v, as multisets;
    d ends with an East step under label a  <->  v starts with N labelled a."""
    vl, final = valley_labels(d)
    want = Counter(_canon((y, x)) for (x, y), c in rise_labels(v).items() for _ in range(c))
    have = Counter(_canon(p) for p, c in vl.items() for _ in range(c))
    if want != have:
        return False
    start = v.labels[0] if v.path[0] == "N" else None
    return final == start


def is_zeta_image_valid(d: DiagonalPath) -> bool:
    return validate_diagonal_C(d.path, d.labels)


def is_zeta_source_valid(v: VerticalPath) -> bool:
    return validate_vertical_C(v.path, v.labels)

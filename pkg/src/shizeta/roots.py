"""Root data of types A_{n-1} and C_n, the root poset and its antichains.

Roots are stored structurally. A ``Root`` is one of

* ``e_i - e_j`` (kind ``"minus"``), with i < j in type A and i > j in type C,
* ``e_i + e_j`` (kind ``"plus"``, type C only, i > j),
* ``2e_i`` (kind ``"double"``, type C only).

Group elements are windows ``(s_1, ..., s_n)``: a permutation of 1..n in
type A, a signed permutation in type C. The window acts linearly by
``w(e_i) = sign(s_i) e_{|s_i|}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .paths import is_ballot, is_dyck, valleys

_ROOT_RE = re.compile(r"^e(\d+)([+-])e(\d+)$|^2e(\d+)$")


@dataclass(frozen=True, order=True)
class Root:
    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in ("minus", "plus", "double"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind != "double" and self.i == self.j:
            raise ValueError("e_i -/+ e_i is not a root here")

    @classmethod
    def parse(cls, text: str) -> "Root":
        m = _ROOT_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse root {text!r}")
        if m.group(4):
            return cls("double", int(m.group(4)))
        kind = "minus" if m.group(2) == "-" else "plus"
        return cls(kind, int(m.group(1)), int(m.group(3)))

    def __str__(self) -> str:
        if self.kind == "double":
            return f"2e{self.i}"
        return f"e{self.i}{'-' if self.kind == 'minus' else '+'}e{self.j}"

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        if self.kind == "double":
            v[self.i - 1] = 2
        else:
            v[self.i - 1] += 1
            v[self.j - 1] += -1 if self.kind == "minus" else 1
        return tuple(v)


def root_from_vector(v: Sequence[int]) -> tuple[int, Root]:
    """Return (sign, positive root) with ``v = sign * root``; type C conventions.

    Vectors of the form e_a - e_b are reported with respect to type C
    positivity (a > b); callers in type A flip as needed.
    """
    nz = [(k + 1, x) for k, x in enumerate(v) if x]
    if len(nz) == 1:
        (k, x), = nz
        if abs(x) != 2:
            raise ValueError(f"not a root: {v}")
        return (1 if x > 0 else -1), Root("double", k)
    if len(nz) != 2:
        raise ValueError(f"not a root: {v}")
    (lo, x), (hi, y) = nz
    if abs(x) != 1 or abs(y) != 1:
        raise ValueError(f"not a root: {v}")
    if x == y:
        return x, Root("plus", hi, lo)
    return y, Root("minus", hi, lo)


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    n: int

    def __post_init__(self):
        if self.type_label not in ("A", "C"):
            raise ValueError(f"unsupported type {self.type_label!r}")
        if self.n < 1:
            raise ValueError("rank parameter must be positive")

    def __str__(self) -> str:
        rank = self.n - 1 if self.type_label == "A" else self.n
        return f"{self.type_label}{rank}"

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(positive_roots(self.type_label, self.n))

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.n
        if self.type_label == "A":
            return tuple(Root("minus", i, i + 1) for i in range(1, n))
        return (Root("double", 1),) + tuple(Root("minus", i + 1, i) for i in range(1, n))

    @cached_property
    def highest_root(self) -> Root | None:
        if self.type_label == "A":
            return Root("minus", 1, self.n) if self.n > 1 else None
        return Root("double", self.n)

    def is_positive(self, root: Root) -> bool:
        return root in self._positive_set

    @cached_property
    def _positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    def group(self) -> Iterable[tuple[int, ...]]:
        """All Weyl group elements as windows, in lexicographic order."""
        perms = itertools.permutations(range(1, self.n + 1))
        if self.type_label == "A":
            yield from perms
            return
        for p in perms:
            for signs in itertools.product((-1, 1), repeat=self.n):
                yield tuple(s * x for s, x in zip(signs, p))


def positive_roots(kind: str, n: int) -> list[Root]:
    if kind == "A":
        return [Root("minus", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if kind == "C":
        out = []
        for i in range(1, n + 1):
            for j in range(1, i):
                out.append(Root("minus", i, j))
                out.append(Root("plus", i, j))
            out.append(Root("double", i))
        return out
    raise ValueError(f"unsupported type {kind!r}")


def simple_coefficients(rs: RootSystem, v: Sequence[int]) -> list[Fraction]:
    """Coordinates of the vector v in the simple-root basis of rs.

    Type A (basis e_k - e_{k+1}): c_k = x_1 + ... + x_k.
    Type C (basis 2e_1, e_{k+1} - e_k): c_k = x_{k+1} + ... + x_n for k >= 1
    and c_0 = (x_1 + ... + x_n) / 2.
    """
    n = rs.n
    if rs.type_label == "A":
        if sum(v) != 0:
            raise ValueError("type A vectors live in the sum-zero hyperplane")
        return [Fraction(sum(v[:k])) for k in range(1, n)]
    tails = [Fraction(sum(v[k:])) for k in range(1, n)]
    return [Fraction(sum(v), 2)] + tails


def leq_root_poset(rs: RootSystem, alpha: Root, beta: Root) -> bool:
    a, b = alpha.vector(rs.n), beta.vector(rs.n)
    diff = [y - x for x, y in zip(a, b)]
    return all(c >= 0 and c.denominator == 1 for c in simple_coefficients(rs, diff))


def is_antichain(rs: RootSystem, roots: Iterable[Root]) -> bool:
    roots = list(roots)
    if len(set(roots)) != len(roots):
        return False
    for a, b in itertools.combinations(roots, 2):
        if leq_root_poset(rs, a, b) or leq_root_poset(rs, b, a):
            return False
    return True


def antichains(rs: RootSystem) -> list[frozenset[Root]]:
    """Brute-force list of all antichains, by growing incomparable sets."""
    roots = rs.positive_roots
    comparable = {
        (a, b): leq_root_poset(rs, a, b) or leq_root_poset(rs, b, a)
        for a in roots for b in roots
    }
    out = []

    def rec(start: int, chosen: list[Root]):
        out.append(frozenset(chosen))
        for k in range(start, len(roots)):
            r = roots[k]
            if all(not comparable[r, c] for c in chosen):
                chosen.append(r)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def format_antichain(roots: Iterable[Root]) -> str:
    return "[" + ",".join(str(r) for r in sorted(roots)) + "]"


def parse_antichain(text: str) -> frozenset[Root]:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"antichain must be bracketed: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return frozenset()
    return frozenset(Root.parse(tok) for tok in body.split(","))


# -- path <-> antichain ------------------------------------------------------

def antichain_of_dyck(path: str) -> frozenset[Root]:
    if not is_dyck(path):
        raise ValueError(f"not a Dyck path: {path}")
    return frozenset(Root("minus", i, j) for i, j in valleys(path))


def antichain_of_ballot(path: str) -> frozenset[Root]:
    if not (is_ballot(path) and len(path) % 2 == 0):
        raise ValueError(f"not a ballot path: {path}")
    n = len(path) // 2
    out = set()
    for p, q in valleys(path):
        i = n + 1 - p
        if q <= n:
            out.add(Root("minus", i, n + 1 - q))
        else:
            out.add(Root("plus", i, q - n))
    if path[-1] == "E":
        out.add(Root("double", n + 1 - path.count("E")))
    return frozenset(out)


def _path_with_valleys(vs: list[tuple[int, int]], north: int, east: int) -> str:
    steps = []
    x = y = 0
    for p, q in vs:
        steps.append("N" * (q - 1 - y) + "E" * (p - x) + "N")
        x, y = p, q
    steps.append("N" * (north - y) + "E" * (east - x))
    return "".join(steps)


def dyck_of_antichain(rs: RootSystem, A: Iterable[Root]) -> str:
    A = frozenset(A)
    if rs.type_label != "A":
        raise ValueError("dyck_of_antichain needs a type A root system")
    if not all(rs.is_positive(r) for r in A) or not is_antichain(rs, A):
        raise ValueError(f"not an antichain of {rs}: {format_antichain(A)}")
    vs = sorted((r.i, r.j) for r in A)
    path = _path_with_valleys(vs, rs.n, rs.n)
    if antichain_of_dyck(path) != A:
        raise ValueError(f"no Dyck path realises {format_antichain(A)}")
    return path


def ballot_of_antichain(rs: RootSystem, A: Iterable[Root]) -> str:
    A = frozenset(A)
    if rs.type_label != "C":
        raise ValueError("ballot_of_antichain needs a type C root system")
    if not all(rs.is_positive(r) for r in A) or not is_antichain(rs, A):
        raise ValueError(f"not an antichain of {rs}: {format_antichain(A)}")
    n = rs.n
    vs = []
    final_east = None
    for r in A:
        if r.kind == "minus":
            vs.append((n + 1 - r.i, n + 1 - r.j))
        elif r.kind == "plus":
            vs.append((n + 1 - r.i, r.j + n))
        else:
            final_east = n + 1 - r.i
    vs.sort()
    if final_east is None:
        east = vs[-1][0] if vs else 0
    else:
        east = final_east
    path = _path_with_valleys(vs, 2 * n - east, east)
    if len(path) != 2 * n or not is_ballot(path) or antichain_of_ballot(path) != A:
        raise ValueError(f"no ballot path realises {format_antichain(A)}")
    return path


# -- group action --------------------------------------------------------------

def act_vector(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(v)
    for k, x in enumerate(v):
        if x:
            s = w[k]
            out[abs(s) - 1] += x if s > 0 else -x
    return tuple(out)


def act(rs: RootSystem, w: Sequence[int], alpha: Root) -> tuple[int, Root]:
    """Apply w to a positive root; returns (sign, positive root)."""
    if len(w) != rs.n:
        raise ValueError("group element and root system have different rank")
    sign, root = root_from_vector(act_vector(w, alpha.vector(rs.n)))
    if rs.type_label == "A":
        # type A positivity is e_i - e_j with i < j, the reverse of type C
        return -sign, Root("minus", root.j, root.i)
    return sign, root


def compose(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Window of u*v (apply v first)."""
    return tuple((1 if x > 0 else -1) * u[abs(x) - 1] for x in v)


def inverse(w: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(w)
    for k, s in enumerate(w, 1):
        out[abs(s) - 1] = k if s > 0 else -k
    return tuple(out)


def is_group_element(rs: RootSystem, w: Sequence[int]) -> bool:
    if len(w) != rs.n or sorted(abs(x) for x in w) != list(range(1, rs.n + 1)):
        return False
    return rs.type_label == "C" or all(x > 0 for x in w)


def is_shi_pair(rs: RootSystem, A: Iterable[Root], w: Sequence[int]) -> bool:
    A = list(A)
    if not is_group_element(rs, w):
        return False
    if not all(rs.is_positive(r) for r in A) or not is_antichain(rs, A):
        return False
    return all(act(rs, w, r)[0] > 0 for r in A)


def shi_pairs(rs: RootSystem) -> list[tuple[frozenset[Root], tuple[int, ...]]]:
    """All valid pairs (A, w), by brute force over antichains and the group."""
    group = list(rs.group())
    out = []
    for A in antichains(rs):
        for w in group:
            if all(act(rs, w, r)[0] > 0 for r in A):
                out.append((A, w))
    return out

"""Shi arrangement regions by exact sign-vector search.

Hyperplanes are ordered with all level-0 hyperplanes first and then all
level-1 hyperplanes, roots in ``positive_roots`` order within each level.
A region is stored as its sign string over that order ('+' means
``<x, alpha> > d``) together with a rational witness point.

Separation from the origin: a level-1 hyperplane separates R from 0 when
R lies on its '+' side, a level-0 hyperplane when R lies on its '-' side.
Hence coheight(R) = #{alpha : 0 < <x, alpha> < 1 on R}.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .labelled import (
    DiagonalPath,
    diagonal_A_to_shi_pair,
    diagonal_C_to_shi_pair,
    enumerate_diagonal_A,
    enumerate_diagonal_C,
    shi_pair_to_diagonal_A,
    shi_pair_to_diagonal_C,
)
from .lp import feasible
from .roots import Root, RootSystem, act, antichains, format_antichain, inverse, shi_pairs
from .statistics import area_prime_A, area_prime_C


@dataclass(frozen=True)
class Hyperplane:
    root: Root
    level: int

    def __str__(self) -> str:
        return f"<x,{self.root}>={self.level}"


@dataclass(frozen=True)
class GeometryConfig:
    box_scale: Fraction = Fraction(1)

    def bound(self, rs: RootSystem) -> Fraction:
        return 4 * (rs.n + 1) * Fraction(self.box_scale)


@dataclass(frozen=True)
class Region:
    rs: RootSystem
    signs: str
    witness: tuple[Fraction, ...]

    def sign(self, root: Root, level: int) -> str:
        k = self.rs.positive_roots.index(root)
        return self.signs[k + level * len(self.rs.positive_roots)]


def shi_hyperplanes(rs: RootSystem) -> list[Hyperplane]:
    return [Hyperplane(r, d) for d in (0, 1) for r in rs.positive_roots]


def _dot(v: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(v, x)), Fraction(0))


def _strict(v: tuple[int, ...], level: int, sign: str):
    # '+': v.x > level ; '-': -v.x > -level
    if sign == "+":
        return (v, level)
    return (tuple(-a for a in v), -level)


def _equalities(rs: RootSystem):
    if rs.type_label == "A":
        return [((1,) * rs.n, 0)]
    return []


def _constraints(rs: RootSystem, signs: str, skip: int | None = None):
    hs = shi_hyperplanes(rs)
    return [
        _strict(h.root.vector(rs.n), h.level, s)
        for k, (h, s) in enumerate(zip(hs, signs))
        if k != skip
    ]


def enumerate_regions(rs: RootSystem, config: GeometryConfig = GeometryConfig()) -> list[Region]:
    """Depth-first search over sign vectors with exact feasibility pruning.

    Each branch reuses the parent witness when it already lies strictly on
    the branch side; only the other side needs a feasibility query.
    Level-1 signs are forced to '-' once the level-0 sign is '-'.
    """
    hs = shi_hyperplanes(rs)
    nroots = len(rs.positive_roots)
    bound = config.bound(rs)
    eqs = _equalities(rs)
    vectors = [h.root.vector(rs.n) for h in hs]
    start = feasible([], eqs, bound=bound, dim=rs.n)
    out: list[Region] = []

    def rec(k: int, signs: list[str], cons: list, witness):
        if k == len(hs):
            out.append(Region(rs, "".join(signs), witness))
            return
        if hs[k].level == 1 and signs[k - nroots] == "-":
            signs.append("-")
            cons.append(_strict(vectors[k], 1, "-"))
            rec(k + 1, signs, cons, witness)
            cons.pop()
            signs.pop()
            return
        val = _dot(vectors[k], witness) - hs[k].level
        for s in "+-":
            c = _strict(vectors[k], hs[k].level, s)
            if (val > 0 and s == "+") or (val < 0 and s == "-"):
                w = witness
            else:
                w = feasible(cons + [c], eqs, bound=bound, dim=rs.n)
                if w is None:
                    continue
            signs.append(s)
            cons.append(c)
            rec(k + 1, signs, cons, w)
            cons.pop()
            signs.pop()

    if start is not None:
        rec(0, [], [], start)
    out.sort(key=lambda r: r.signs)
    return out


def coheight(region: Region) -> int:
    n = len(region.rs.positive_roots)
    return sum(1 for k in range(n) if region.signs[k] == "+" and region.signs[k + n] == "-")


def chamber_of(region: Region) -> tuple[int, ...]:
    """Group element w with w^{-1}(witness) in the dominant chamber."""
    x = region.witness
    n = region.rs.n
    if any(v == 0 for v in x) and region.rs.type_label == "C":
        raise ValueError("witness lies on a coordinate hyperplane")
    if region.rs.type_label == "A":
        order = sorted(range(n), key=lambda k: -x[k])
        return tuple(k + 1 for k in order)
    order = sorted(range(n), key=lambda k: abs(x[k]))
    return tuple((k + 1) if x[k] > 0 else -(k + 1) for k in order)


def is_dominant_point(rs: RootSystem, y: Sequence[Fraction]) -> bool:
    if rs.type_label == "A":
        return all(a > b for a, b in zip(y, y[1:]))
    return y[0] > 0 and all(a < b for a, b in zip(y, y[1:]))


@lru_cache(maxsize=None)
def floors(region: Region, config: GeometryConfig = GeometryConfig()) -> tuple[Hyperplane, ...]:
    """Level-1 walls on whose far side the region lies.

    A hyperplane is a wall when the region's closure meets it in a facet:
    the system with that constraint made an equality and every other
    constraint kept strict must be feasible.
    """
    rs = region.rs
    hs = shi_hyperplanes(rs)
    nroots = len(rs.positive_roots)
    out = []
    for k in range(nroots, 2 * nroots):
        if region.signs[k] != "+":
            continue
        eq = _equalities(rs) + [(hs[k].root.vector(rs.n), 1)]
        w = feasible(_constraints(rs, region.signs, skip=k), eq, bound=config.bound(rs), dim=rs.n)
        if w is not None:
            out.append(hs[k])
    return tuple(out)


def region_to_shi_pair(region: Region, config: GeometryConfig = GeometryConfig()):
    rs = region.rs
    w = chamber_of(region)
    w_inv = inverse(w)
    A = set()
    for h in floors(region, config):
        sign, root = act(rs, w_inv, h.root)
        if sign < 0:
            raise AssertionError(f"floor {h} pulls back to a negative root")
        A.add(root)
    return frozenset(A), w


def region_report(region: Region, config: GeometryConfig = GeometryConfig()) -> dict:
    A, w = region_to_shi_pair(region, config)
    return {
        "signs": region.signs,
        "witness": [str(v) for v in region.witness],
        "coheight": coheight(region),
        "chamber": list(w),
        "floors": [str(h.root) for h in floors(region, config)],
        "antichain": format_antichain(A),
    }


@dataclass
class GeometryReport:
    type_label: str
    n: int
    regions: int = 0
    expected_regions: int = 0
    dominant: int = 0
    antichains: int = 0
    matches: int = 0
    coheights: dict = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return json.dumps(d, sort_keys=True)


def expected_region_count(rs: RootSystem) -> int:
    if rs.type_label == "C":
        return (2 * rs.n + 1) ** rs.n
    return (rs.n + 1) ** (rs.n - 1)


def verify_region_bijection(rs: RootSystem, config: GeometryConfig = GeometryConfig()) -> GeometryReport:
    """Match every region to a diagonally labelled path and compare statistics."""
    rep = GeometryReport(rs.type_label, rs.n)
    regions = enumerate_regions(rs, config)
    rep.regions = len(regions)
    rep.expected_regions = expected_region_count(rs)
    if rep.regions != rep.expected_regions:
        rep.mismatches.append(f"region count {rep.regions} != {rep.expected_regions}")

    if rs.type_label == "C":
        to_path, to_pair, stat = shi_pair_to_diagonal_C, diagonal_C_to_shi_pair, area_prime_C
        labelled = list(enumerate_diagonal_C(rs.n))
    else:
        to_path, to_pair, stat = shi_pair_to_diagonal_A, diagonal_A_to_shi_pair, area_prime_A
        labelled = list(enumerate_diagonal_A(rs.n))

    valid_pairs = set(shi_pairs(rs))
    all_antichains = set(antichains(rs))
    rep.antichains = len(all_antichains)
    identity = tuple(range(1, rs.n + 1))

    seen_pairs = {}
    dominant_floors = []
    matched: dict[DiagonalPath, str] = {}
    for region in regions:
        A, w = region_to_shi_pair(region, config)
        if not is_dominant_point(rs, [_dot(_perm_matrix_row(w, k), region.witness)
                                      for k in range(rs.n)]):
            rep.mismatches.append(f"{region.signs}: chamber {w} does not make witness dominant")
        if w == identity:
            dominant_floors.append(A)
        if (A, w) not in valid_pairs:
            rep.mismatches.append(f"{region.signs}: ({format_antichain(A)}, {w}) is not a Shi pair")
            continue
        if (A, w) in seen_pairs:
            rep.mismatches.append(f"{region.signs}: pair shared with {seen_pairs[A, w]}")
            continue
        seen_pairs[A, w] = region.signs
        d = to_path(A, w)
        if to_pair(d) != (A, w):
            rep.mismatches.append(f"{region.signs}: path encoding does not round-trip")
        matched[d] = region.signs
        if coheight(region) != stat(d):
            rep.mismatches.append(
                f"{region.signs}: coheight {coheight(region)} != area' {stat(d)} of {d}"
            )
        else:
            rep.matches += 1

    if set(seen_pairs) != valid_pairs:
        rep.mismatches.append(
            f"{len(valid_pairs - set(seen_pairs))} Shi pairs have no region"
        )
    if set(matched) != set(labelled):
        rep.mismatches.append("regions do not cover every diagonally labelled path")
    rep.dominant = len(dominant_floors)
    if set(dominant_floors) != all_antichains or len(dominant_floors) != len(all_antichains):
        rep.mismatches.append("floor sets of dominant regions are not exactly the antichains")
    rep.coheights = {str(k): v for k, v in sorted(Counter(coheight(r) for r in regions).items())}
    return rep


def _perm_matrix_row(w: Sequence[int], k: int) -> tuple[int, ...]:
    # k-th coordinate of w^{-1}(x) is sign(w_k) * x_{|w_k|}
    row = [0] * len(w)
    row[abs(w[k]) - 1] = 1 if w[k] > 0 else -1
    return tuple(row)

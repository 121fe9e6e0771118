"""Exhaustive verification checks behind ``shizeta verify``.

Each check runs at one size n and returns a ``CheckResult``. Checks that
scan a large family split it into ``jobs`` interleaved shards; shard
results are merged in shard order so the report does not depend on the
worker count.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .geometry import GeometryConfig, enumerate_regions, verify_region_bijection
from .labelled import (
    enumerate_diagonal_A,
    enumerate_diagonal_C,
    enumerate_vertical_A,
    enumerate_vertical_C,
    validate_diagonal_A,
    validate_diagonal_C,
)
from .paths import ballot_area, enumerate_B, enumerate_D, enumerate_L, is_ballot, reverse_swap
from .roots import RootSystem
from .statistics import (
    area_prime_A,
    area_prime_C,
    dinv_A,
    dinv_C,
    dinv_prime_A,
    dinv_prime_C,
)
from .zeta import check_valley_characterization, sweep, zeta_A, zeta_C, zeta_labelled_A, zeta_labelled_C

BOUNDS = {
    "counts": 5,
    "zeta-bijection": 8,
    "labelled-zeta": 5,
    "sweep-eq": 8,
    "valleys": 5,
    "dyck-compat": 6,
    "distribution": 5,
    "ballot-area": 7,
    "geometry-C": 3,
    "geometry-A": 4,
}


@dataclass
class CheckResult:
    name: str
    n: int
    ok: bool
    checked: int
    details: dict = field(default_factory=dict)
    counterexample: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _shard(iterable, shard: int, nshards: int):
    return itertools.islice(iterable, shard, None, nshards)


def _run_sharded(fn: Callable, n: int, jobs: int) -> list:
    if jobs <= 1:
        return [fn(n, 0, 1)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(fn, n, k, jobs) for k in range(jobs)]
        return [f.result() for f in futures]


def _result(name, n, checked, failures, **details) -> CheckResult:
    return CheckResult(name, n, not failures, checked, details, failures[0] if failures else None)


# -- individual checks ---------------------------------------------------------

def check_counts(n: int, jobs: int = 1) -> CheckResult:
    expected = (2 * n + 1) ** n
    v = sum(1 for _ in enumerate_vertical_C(n))
    d = sum(1 for _ in enumerate_diagonal_C(n))
    failures = [] if v == d == expected else [f"vertical {v}, diagonal {d}, expected {expected}"]
    return _result("counts", n, v + d, failures, vertical=v, diagonal=d, expected=expected)


def _scan_unlabelled(n, shard, nshards):
    images, failures = [], []
    for p in _shard(enumerate_L(n), shard, nshards):
        b = zeta_C(p)
        images.append(b)
        if not (is_ballot(b) and len(b) == 2 * n):
            failures.append(f"{p}: image {b} is not a ballot path")
        elif ballot_area(b) != dinv_C(p):
            failures.append(f"{p}: area {ballot_area(b)} != dinv {dinv_C(p)}")
    return images, failures


def check_zeta_bijection(n: int, jobs: int = 1) -> CheckResult:
    parts = _run_sharded(_scan_unlabelled, n, jobs)
    images = [b for imgs, _ in parts for b in imgs]
    failures = sorted(f for _, fs in parts for f in fs)
    if len(set(images)) != len(images):
        failures.append("zeta_C is not injective")
    if set(images) != set(enumerate_B(n)):
        failures.append("zeta_C is not onto B_n")
    return _result("zeta-bijection", n, len(images), failures, size=comb(2 * n, n))


def _scan_labelled(n, shard, nshards):
    images, failures = [], []
    for v in _shard(enumerate_vertical_C(n), shard, nshards):
        d = zeta_labelled_C(v)
        images.append(d)
        if not validate_diagonal_C(d.path, d.labels):
            failures.append(f"{v}: image {d} is not a valid diagonal labelling")
        elif dinv_prime_C(v) != area_prime_C(d):
            failures.append(f"{v}: dinv' {dinv_prime_C(v)} != area' {area_prime_C(d)}")
    return images, failures


def check_labelled_zeta(n: int, jobs: int = 1) -> CheckResult:
    parts = _run_sharded(_scan_labelled, n, jobs)
    images = [d for imgs, _ in parts for d in imgs]
    failures = sorted(f for _, fs in parts for f in fs)
    if len(set(images)) != len(images):
        failures.append("labelled zeta is not injective")
    if set(images) != set(enumerate_diagonal_C(n)):
        failures.append("labelled zeta is not onto the diagonal labellings")
    return _result("labelled-zeta", n, len(images), failures)


def _scan_sweep(n, shard, nshards):
    checked, failures = 0, []
    for p in _shard(enumerate_L(n), shard, nshards):
        checked += 1
        if sweep(p) != zeta_C(p):
            failures.append(f"{p}: sweep {sweep(p)} != zeta {zeta_C(p)}")
    return checked, failures


def check_sweep(n: int, jobs: int = 1) -> CheckResult:
    parts = _run_sharded(_scan_sweep, n, jobs)
    failures = sorted(f for _, fs in parts for f in fs)
    return _result("sweep-eq", n, sum(c for c, _ in parts), failures)


def _scan_valleys(n, shard, nshards):
    checked, failures = 0, []
    for v in _shard(enumerate_vertical_C(n), shard, nshards):
        checked += 1
        if not check_valley_characterization(v, zeta_labelled_C(v)):
            failures.append(f"{v}: valley labels do not match rise labels")
    return checked, failures


def check_valleys(n: int, jobs: int = 1) -> CheckResult:
    parts = _run_sharded(_scan_valleys, n, jobs)
    failures = sorted(f for _, fs in parts for f in fs)
    return _result("valleys", n, sum(c for c, _ in parts), failures)


def check_dyck_compat(n: int, jobs: int = 1) -> CheckResult:
    failures = []
    checked = 0
    for p in enumerate_D(n):
        checked += 1
        if zeta_C(p) != reverse_swap(zeta_A(p)):
            failures.append(f"{p}: zeta_C {zeta_C(p)} != reversed zeta {reverse_swap(zeta_A(p))}")
        if dinv_C(p) != dinv_A(p):
            failures.append(f"{p}: dinv_C {dinv_C(p)} != dinv_A {dinv_A(p)}")
    images = []
    for v in enumerate_vertical_A(n):
        checked += 1
        d = zeta_labelled_A(v)
        images.append(d)
        if not validate_diagonal_A(d.path, d.labels):
            failures.append(f"{v}: image {d} invalid")
        elif dinv_prime_A(v) != area_prime_A(d):
            failures.append(f"{v}: dinv' {dinv_prime_A(v)} != area' {area_prime_A(d)}")
    if set(images) != set(enumerate_diagonal_A(n)) or len(set(images)) != len(images):
        failures.append("type A labelled zeta is not a bijection")
    return _result("dyck-compat", n, checked, failures, parking_functions=len(images))


def check_distribution(n: int, jobs: int = 1) -> CheckResult:
    failures = []
    polys = {}
    for label, vert, diag in (
        ("C", Counter(dinv_prime_C(v) for v in enumerate_vertical_C(n)),
         Counter(area_prime_C(d) for d in enumerate_diagonal_C(n))),
        ("A", Counter(dinv_prime_A(v) for v in enumerate_vertical_A(n)),
         Counter(area_prime_A(d) for d in enumerate_diagonal_A(n))),
    ):
        polys[label] = {str(k): c for k, c in sorted(vert.items())}
        if vert != diag:
            failures.append(f"type {label}: dinv' polynomial {dict(vert)} != area' {dict(diag)}")
    return _result("distribution", n, 4, failures, **polys)


def _point_in_polygon(x: Fraction, y: Fraction, poly: list[tuple[int, int]]) -> bool:
    inside = False
    for (x1, y1), (x2, y2) in zip(poly, poly[1:] + poly[:1]):
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * Fraction(x2 - x1, y2 - y1)
            if x < xc:
                inside = not inside
    return inside


def ballot_area_by_polygon(path: str) -> int:
    """Count unit boxes below a ballot path by point-in-polygon tests.

    The staircase is the triangle with corners (0,0), (n+1/2, n+1/2) and
    (0, 2n+1); a box counts when all four corners lie in that closed
    triangle and its centre lies right of the path polygon.
    """
    n = len(path) // 2
    pts = [(0, 0)]
    for s in path:
        x, y = pts[-1]
        pts.append((x, y + 1) if s == "N" else (x + 1, y))
    top = pts[-1][1]
    far = 2 * n + 1
    # region right of the path, up to the path's final height
    right = pts + [(far, top), (far, 0)]
    count = 0
    for c in range(1, n + 1):
        for r in range(1, 2 * n + 1):
            corners = [(c - 1, r - 1), (c, r - 1), (c - 1, r), (c, r)]
            if not all(px <= py and px + py <= 2 * n + 1 for px, py in corners):
                continue
            cx, cy = Fraction(2 * c - 1, 2), Fraction(2 * r - 1, 2)
            if _point_in_polygon(cx, cy, right):
                count += 1
    return count


def check_ballot_area(n: int, jobs: int = 1) -> CheckResult:
    failures = []
    checked = 0
    for b in enumerate_B(n):
        checked += 1
        if ballot_area(b) != ballot_area_by_polygon(b):
            failures.append(f"{b}: staircase {ballot_area(b)} != polygon {ballot_area_by_polygon(b)}")
    return _result("ballot-area", n, checked, failures)


def check_geometry(type_label: str, n: int, box_scale=1) -> CheckResult:
    rs = RootSystem(type_label, n)
    config = GeometryConfig(Fraction(box_scale))
    rep = verify_region_bijection(rs, config)
    failures = list(rep.mismatches)
    doubled = len(enumerate_regions(rs, GeometryConfig(2 * Fraction(box_scale))))
    if doubled != rep.regions:
        failures.append(f"region count changes with the box: {rep.regions} vs {doubled}")
    return _result(
        f"geometry-{type_label}", n, rep.regions, failures,
        regions=rep.regions, expected=rep.expected_regions, dominant=rep.dominant,
        antichains=rep.antichains, matches=rep.matches, coheights=rep.coheights,
        regions_doubled_box=doubled,
    )


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "counts": check_counts,
    "zeta-bijection": check_zeta_bijection,
    "labelled-zeta": check_labelled_zeta,
    "sweep-eq": check_sweep,
    "valleys": check_valleys,
    "dyck-compat": check_dyck_compat,
    "distribution": check_distribution,
    "ballot-area": check_ballot_area,
}


def run_check(name: str, n: int, type_label: str | None = None, jobs: int = 1,
              box_scale=1) -> list[CheckResult]:
    """Run one named check (or ``all``); raises ValueError when n is out of bounds."""
    if name == "all":
        out = []
        for key in CHECKS:
            if n <= BOUNDS[key]:
                out.extend(run_check(key, n, jobs=jobs))
        for t in ("C", "A"):
            if n <= BOUNDS[f"geometry-{t}"] and (t == "C" or n >= 2):
                out.append(check_geometry(t, n, box_scale))
        return out
    if name == "geometry":
        types = [type_label] if type_label else ["C", "A"]
        out = []
        for t in types:
            if n > BOUNDS[f"geometry-{t}"]:
                raise ValueError(f"n={n}: geometry check for type {t} is bounded by n <= {BOUNDS[f'geometry-{t}']}")
            out.append(check_geometry(t, n, box_scale))
        return out
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}")
    if n > BOUNDS[name]:
        raise ValueError(f"n={n}: check {name} is bounded by n <= {BOUNDS[name]}")
    return [CHECKS[name](n, jobs=jobs)]


import json

import pytest

from oracles import brute_B, shapely_ballot_boxes
from shizeta.verify import BOUNDS, CHECKS, ballot_area_by_polygon, run_check


def test_polygon_oracle_agrees_with_shapely():
    for n in range(1, 5):
        for b in brute_B(n):
            assert ballot_area_by_polygon(b) == len(shapely_ballot_boxes(b))


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_checks_pass_small(name):
    (res,) = run_check(name, 2)
    assert res.ok, res.counterexample
    assert json.loads(res.to_json())["ok"] is True


def test_counts_n4():
    (res,) = run_check("counts", 4)
    assert res.ok and res.details == {"vertical": 6561, "diagonal": 6561, "expected": 6561}


def test_sweep_n5_covers_all_paths():
    (res,) = run_check("sweep-eq", 5)
    assert res.ok and res.checked == 252


def test_sharding_is_deterministic():
    one = run_check("zeta-bijection", 4, jobs=1)[0]
    two = run_check("zeta-bijection", 4, jobs=2)[0]
    assert one.to_json() == two.to_json()


def test_geometry_check():
    (res,) = run_check("geometry", 2, "C")
    assert res.ok
    assert res.details["regions"] == res.details["regions_doubled_box"] == 25


def test_all_n3():
    results = run_check("all", 3)
    assert all(r.ok for r in results)
    names = {r.name for r in results}
    assert set(CHECKS) <= names and {"geometry-C", "geometry-A"} <= names


def test_bounds_enforced():
    with pytest.raises(ValueError, match="bounded"):
        run_check("labelled-zeta", BOUNDS["labelled-zeta"] + 1)
    with pytest.raises(ValueError, match="unknown"):
        run_check("nope", 2)

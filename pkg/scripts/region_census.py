"""Tabulate Shi regions by coheight next to the area' distribution.

    python scripts/region_census.py --type C --n 3
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from shizeta.geometry import GeometryConfig, coheight, enumerate_regions
from shizeta.labelled import enumerate_diagonal_A, enumerate_diagonal_C
from shizeta.roots import RootSystem
from shizeta.statistics import area_prime_A, area_prime_C


@dataclass
class CensusConfig:
    type_label: str = "C"
    n: int = 2
    box_scale: Fraction = Fraction(1)


def census(cfg: CensusConfig) -> dict:
    rs = RootSystem(cfg.type_label, cfg.n)
    regions = enumerate_regions(rs, GeometryConfig(cfg.box_scale))
    by_coheight = Counter(coheight(r) for r in regions)
    if cfg.type_label == "C":
        by_area = Counter(area_prime_C(d) for d in enumerate_diagonal_C(cfg.n))
    else:
        by_area = Counter(area_prime_A(d) for d in enumerate_diagonal_A(cfg.n))
    keys = sorted(set(by_coheight) | set(by_area))
    return {
        "root_system": str(rs),
        "regions": len(regions),
        "table": [{"k": k, "coheight": by_coheight[k], "area_prime": by_area[k]} for k in keys],
        "equal": by_coheight == by_area,
    }


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--type", choices=("A", "C"), default="C")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--box-scale", type=Fraction, default=Fraction(1))
    a = p.parse_args()
    print(json.dumps(census(CensusConfig(a.type, a.n, a.box_scale)), indent=2))

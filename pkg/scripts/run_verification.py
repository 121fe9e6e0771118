"""Run every verification check up to its bound and write a JSON-lines report.

    python scripts/run_verification.py --out results/verification.jsonl --jobs 4
"""

from __future__ import annotations

import argparse
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from shizeta.verify import BOUNDS, CHECKS, check_geometry

log = logging.getLogger("verify")


@dataclass
class VerificationConfig:
    out: Path = Path("results/verification.jsonl")
    jobs: int = 1
    max_n: int | None = None  # cap below the per-check bounds, for quick runs


def main(cfg: VerificationConfig) -> int:
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    failures = 0
    with cfg.out.open("w") as fh:
        plan = [(name, n) for name in CHECKS for n in range(1, BOUNDS[name] + 1)]
        plan += [(f"geometry-{t}", n) for t in "CA" for n in range(1 if t == "C" else 2, BOUNDS[f"geometry-{t}"] + 1)]
        for name, n in plan:
            if cfg.max_n is not None and n > cfg.max_n:
                continue
            t0 = time.perf_counter()
            if name.startswith("geometry"):
                res = check_geometry(name[-1], n)
            else:
                res = CHECKS[name](n, jobs=cfg.jobs)
            res.details["seconds"] = round(time.perf_counter() - t0, 3)
            fh.write(res.to_json() + "\n")
            failures += not res.ok
            log.info("%-15s n=%d %s (%d objects, %.2fs)", name, n, "ok" if res.ok else "FAIL",
                     res.checked, res.details["seconds"])
    log.info("wrote %s; %d failures", cfg.out, failures)
    return 1 if failures else 0


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=VerificationConfig.out)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None)
    a = p.parse_args()
    raise SystemExit(main(VerificationConfig(a.out, a.jobs, a.max_n)))

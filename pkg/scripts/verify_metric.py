"""Compare the closed-form length with BFS distances on balls of L_n and Z_k wr Z.

    python3 scripts/verify_metric.py --moduli 2 3 4 5 --radius 8 --workers 4
"""

import argparse
import time
from dataclasses import dataclass, field

from lamplighter.finite_group import cyclic_group
from lamplighter.oracle import lamplighter_model, verify_metric_formula, wreath_model


@dataclass
class Config:
    moduli: list = field(default_factory=lambda: [2, 3, 4, 5])
    radius: int = 8
    workers: int = 1
    wreath: bool = True


def main(cfg: Config) -> int:
    failed = 0
    for n in cfg.moduli:
        models = [lamplighter_model(n)]
        if cfg.wreath:
            models.append(wreath_model(cyclic_group(n), f"Z_{n}"))
        for model in models:
            start = time.perf_counter()
            report = verify_metric_formula(model, cfg.radius, workers=cfg.workers)
            print(*report.lines(), f"seconds={time.perf_counter() - start:.2f}")
            failed += not report.ok
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--moduli", type=int, nargs="+", default=Config().moduli)
    p.add_argument("--radius", type=int, default=Config.radius)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-wreath", dest="wreath", action="store_false")
    raise SystemExit(main(Config(**vars(p.parse_args()))))

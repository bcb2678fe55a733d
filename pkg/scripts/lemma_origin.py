"""Minimum length of cursor-at-origin elements with lamps lit at +n and -n."""

import argparse
from dataclasses import dataclass, field

from lamplighter.elements import LnParams
from lamplighter.phenomena import check_lemma_origin


@dataclass
class Config:
    moduli: list = field(default_factory=lambda: [2, 3, 5])
    max_n: int = 3
    trials: int = 2000
    seed: int = 0


def main(cfg: Config) -> int:
    ok = True
    for k in cfg.moduli:
        for n in range(1, cfg.max_n + 1):
            r = check_lemma_origin(LnParams(k), n, trials=cfg.trials, seed=cfg.seed)
            print(*r.lines(prefix=f"modulus={k} "))
            ok &= r.holds
    return 0 if ok else 1


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--moduli", type=int, nargs="+", default=Config().moduli)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--seed", type=int, default=Config.seed)
    raise SystemExit(main(Config(**vars(p.parse_args()))))

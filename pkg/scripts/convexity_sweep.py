"""In-ball distance between w_n t and w_n t^-1 for growing n, next to the 2r - 1 bound."""

import argparse
import time
from dataclasses import dataclass

from lamplighter.elements import LnParams
from lamplighter.phenomena import convexity_witness


@dataclass
class Config:
    modulus: int = 2
    max_n: int = 3


def main(cfg: Config) -> None:
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        r = convexity_witness(LnParams(cfg.modulus), n)
        print(*r.lines(prefix=f"modulus={cfg.modulus} "), f"seconds={time.perf_counter() - start:.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--modulus", type=int, default=Config.modulus)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(**vars(p.parse_args())))

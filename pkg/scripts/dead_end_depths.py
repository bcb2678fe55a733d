"""Tabulate lengths and escape depths of the d_m family and its lifts to Z_k wr Z."""

import argparse
from dataclasses import dataclass, field

from lamplighter.elements import LnParams
from lamplighter.finite_group import cyclic_group
from lamplighter.oracle import escape_depth, wreath_model
from lamplighter.phenomena import check_dead_end, dead_end_family_d_m
from lamplighter.wreath import lift_dead_end_family, wreath_length_D


@dataclass
class Config:
    moduli: list = field(default_factory=lambda: [2, 3, 4])
    max_m: int = 2
    max_depth: int = 10
    # (k, a): lift a in Z_k
    lifts: list = field(default_factory=lambda: [(5, 2), (6, 3)])


def main(cfg: Config) -> None:
    print("family\tgroup\tm\tlength\tdead_end\tdepth")
    for n in cfg.moduli:
        for m in range(1, cfg.max_m + 1):
            r = check_dead_end(dead_end_family_d_m(LnParams(n), m), cfg.max_depth)
            print(f"d_m\tL_{n}\t{m}\t{r.length}\t{r.is_dead_end}\t{r.depth}")
    for k, a in cfg.lifts:
        G = cyclic_group(k)
        model = wreath_model(G, f"Z_{k}")
        for m in range(1, cfg.max_m + 1):
            e = lift_dead_end_family(G, a, m)
            print(f"lift a={a}\tZ_{k} wr Z\t{m}\t{wreath_length_D(e)}\t-\t"
                  f"{escape_depth(model, e, cfg.max_depth)}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--moduli", type=int, nargs="+", default=Config().moduli)
    p.add_argument("--max-m", type=int, default=Config.max_m)
    p.add_argument("--max-depth", type=int, default=Config.max_depth)
    main(Config(**vars(p.parse_args())))

"""Dead ends, seesaw words and convexity witnesses, with verdict reports.

Every report renders as ``key=value`` lines so the CLI can print it verbatim.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .elements import SHIFT, GenLetter, LnElement, LnParams, apply_gen
from .metric import word_length_D
from .oracle import (
    CayleyModel,
    Depth,
    escape_depth,
    in_ball_shortest_path,
    lamplighter_model,
    wreath_model,
)
from .wreath import WreathElement

__all__ = [
    "DeadEndReport",
    "SeesawReport",
    "ConvexityReport",
    "LemmaOriginReport",
    "model_for",
    "dead_end_family_d_m",
    "dead_end_length",
    "check_dead_end",
    "seesaw_family_w_n",
    "check_seesaw",
    "seesaw_holds",
    "reducing_letters",
    "convexity_witness",
    "check_lemma_origin",
    "DEFAULT_MAX_DEPTH",
]

DEFAULT_MAX_DEPTH = 12

T = GenLetter(SHIFT, 1)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def model_for(e) -> CayleyModel:
    if isinstance(e, LnElement):
        return lamplighter_model(e.params)
    if isinstance(e, WreathElement):
        return wreath_model(e.group)
    raise TypeError(f"no Cayley model for {type(e).__name__}")


# -- dead ends ---------------------------------------------------------------

def dead_end_family_d_m(params: LnParams, m: int) -> LnElement:
    """Every lamp in [-m, m] at the state a^h farthest from off, cursor at 0."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return LnElement(params, tuple((p, params.h) for p in range(-m, m + 1)), 0)


def dead_end_length(params: LnParams, m: int) -> int:
    return 4 * m + params.h * (2 * m + 1)


@dataclass
class DeadEndReport:
    element: object
    length: int
    is_dead_end: bool
    neighbor_lengths: dict
    depth: Optional[Depth] = None

    def lines(self, prefix: str = "") -> list:
        depth = "none" if self.depth is None else str(self.depth)
        nbrs = ",".join(f"{g}:{d}" for g, d in self.neighbor_lengths.items())
        return [f"{prefix}length={self.length} dead_end={_flag(self.is_dead_end)} depth={depth}",
                f"neighbors={nbrs}"]


def check_dead_end(e, max_depth: int = DEFAULT_MAX_DEPTH) -> DeadEndReport:
    model = model_for(e)
    length = model.length(e)
    nbrs = {str(g): model.length(model.apply(e, g)) for g in model.letters}
    dead = all(d <= length for d in nbrs.values())
    depth = escape_depth(model, e, max_depth) if dead else None
    return DeadEndReport(e, length, dead, nbrs, depth)


# -- seesaw words --------------------------------------------------------------

def seesaw_family_w_n(params: LnParams, n: int, e1: int = 1, e2: int = 1) -> LnElement:
    """Lamps at +n and -n in the given states, cursor at 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if e1 % params.n == 0 or e2 % params.n == 0:
        raise ValueError("seesaw lamp states must be nontrivial")
    return LnElement.from_lamps(params, {n: e1, -n: e2}, 0)


def reducing_letters(model: CayleyModel, e) -> list:
    n = model.length(e)
    return [g for g in model.letters if model.length(model.apply(e, g)) < n]


def _pivot_unique(model: CayleyModel, x, pivot: GenLetter) -> bool:
    n = model.length(x)
    return all(model.length(model.apply(x, h)) >= n for h in model.letters if h.name != pivot.name)


def seesaw_holds(model: CayleyModel, w, pivot: GenLetter, k: int) -> bool:
    """Both conditions of the seesaw definition for swing ``k``, read literally."""
    if k < 1:
        raise ValueError(f"swing must be >= 1, got {k}")
    n = model.length(w)
    g, g_inv = GenLetter(pivot.name, 1), GenLetter(pivot.name, -1)
    if model.length(model.apply(w, g)) != n - 1 or model.length(model.apply(w, g_inv)) != n - 1:
        return False
    if not _pivot_unique(model, w, pivot):
        return False
    for step in (g, g_inv):
        x = w
        for _ in range(1, k):
            if not _pivot_unique(model, x, pivot):
                return False
            y = model.apply(x, step)
            if model.length(y) != model.length(x) - 1:
                return False
            x = y
    return True


@dataclass
class SeesawReport:
    element: object
    length: int
    pivot: GenLetter
    swing_checked: int
    holds: bool
    max_swing: int

    def lines(self, prefix: str = "") -> list:
        return [f"{prefix}length={self.length} pivot={self.pivot} swing_checked={self.swing_checked} "
                f"holds={_flag(self.holds)} max_swing={self.max_swing}"]


def check_seesaw(e, pivot: GenLetter = T, k: int = 1) -> SeesawReport:
    model = model_for(e)
    holds = seesaw_holds(model, e, pivot, k)
    # holds(k) implies holds(k - 1); every extra step drops the length, so the scan terminates
    max_swing = 0
    while max_swing <= model.length(e) and seesaw_holds(model, e, pivot, max_swing + 1):
        max_swing += 1
    return SeesawReport(e, model.length(e), pivot, k, holds, max_swing)


# -- convexity ---------------------------------------------------------------

@dataclass
class ConvexityReport:
    n: int
    pair: tuple
    pair_lengths: tuple
    ball_radius: int
    free_distance: int
    in_ball_distance: Optional[int]
    mac_bound: int
    lower_bound: int

    @property
    def violates_mac(self) -> Optional[bool]:
        if self.in_ball_distance is None:
            return None
        return self.in_ball_distance > self.mac_bound

    def lines(self, prefix: str = "") -> list:
        dist = "none" if self.in_ball_distance is None else str(self.in_ball_distance)
        viol = "unknown" if self.violates_mac is None else _flag(self.violates_mac)
        return [f"{prefix}witness={self.n} pair_lengths={self.pair_lengths[0]},{self.pair_lengths[1]} "
                f"ball_radius={self.ball_radius} free_distance={self.free_distance} "
                f"in_ball_distance={dist} lower_bound={self.lower_bound} "
                f"mac_bound={self.mac_bound} violates_mac={viol}"]


def convexity_witness(params: LnParams, n: int, run_search: bool = True) -> ConvexityReport:
    """The pair w_n t, w_n t^-1 and, optionally, their distance inside B(4n+1)."""
    w = seesaw_family_w_n(params, n)
    left, right = apply_gen(w, T), apply_gen(w, T.inverse())
    lengths = (word_length_D(left), word_length_D(right))
    radius = 4 * n + 1
    model = lamplighter_model(params)
    free = in_ball_shortest_path(model, sum(lengths), left, right)
    inside = in_ball_shortest_path(model, radius, left, right) if run_search else None
    return ConvexityReport(n, (left, right), lengths, radius, free, inside,
                           2 * radius - 1, 8 * n + 2)


@dataclass
class LemmaOriginReport:
    n: int
    bound: int
    checked: int
    minimum: int
    argmin: LnElement

    @property
    def holds(self) -> bool:
        return self.minimum >= self.bound

    def lines(self, prefix: str = "") -> list:
        return [f"{prefix}n={self.n} checked={self.checked} minimum={self.minimum} "
                f"bound={self.bound} holds={_flag(self.holds)} argmin={self.argmin}"]


def _origin_configs(params: LnParams, n: int):
    lit = range(1, params.n)
    inner = range(params.n)
    for end_states in itertools.product(lit, repeat=2):
        for mid in itertools.product(inner, repeat=2 * n - 1):
            lamps = dict(zip(range(-n + 1, n), mid))
            lamps[-n], lamps[n] = end_states
            yield LnElement.from_lamps(params, lamps, 0)


def check_lemma_origin(params: LnParams, n: int, trials: int = 1000, seed: int = 0,
                       exhaustive_limit: int = 2) -> LemmaOriginReport:
    """Minimum length over cursor-at-origin elements with lamps lit at both +n and -n.

    Exhaustive over configurations supported in [-n, n] when n <= exhaustive_limit,
    plus ``trials`` random configurations with extra lamps anywhere in [-3n, 3n].
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    best = None
    checked = 0

    def consider(e):
        nonlocal best, checked
        checked += 1
        d = word_length_D(e)
        if best is None or d < best[0]:
            best = (d, e)

    if n <= exhaustive_limit:
        for e in _origin_configs(params, n):
            consider(e)
    for _ in range(trials):
        lamps = {p: rng.randrange(params.n) for p in rng.sample(range(-3 * n, 3 * n + 1), rng.randint(0, 4))}
        lamps[n] = rng.randrange(1, params.n)
        lamps[-n] = rng.randrange(1, params.n)
        consider(LnElement.from_lamps(params, lamps, 0))
    if best is None:
        raise ValueError("nothing checked: raise trials or exhaustive_limit")
    return LemmaOriginReport(n, 4 * n + 2, checked, best[0], best[1])

"""Exact word length, normal forms and geodesics in L_n over the generators {a, t}.

The length of an element is the total lamp cost plus the length of the
shortest cursor tour that starts at 0, reaches both extreme lit positions and
parks at the final cursor.  Two tours are candidates: right-first
(0 -> R -> -L -> m) and left-first (0 -> -L -> R -> m).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .elements import LAMP, SHIFT, GenLetter, LnElement, LnParams

__all__ = [
    "RIGHT_FIRST",
    "LEFT_FIRST",
    "NormalForm",
    "GeodesicSchedule",
    "lamp_cost",
    "lamp_exponent",
    "extents",
    "tour_costs",
    "tour_path",
    "minimal_sides",
    "word_length_D",
    "normal_form",
    "emit_geodesic",
    "enumerate_schedules",
    "enumerate_geodesics",
    "revisited_positions",
]

RIGHT_FIRST = "rf"
LEFT_FIRST = "lf"
SIDES = (RIGHT_FIRST, LEFT_FIRST)

_T = GenLetter(SHIFT, 1)
_T_INV = GenLetter(SHIFT, -1)


# -- tour geometry, shared with the wreath module ---------------------------

def extents(positions: Iterable[int]) -> tuple[int, int]:
    """(R, L): rightmost lit extent and leftmost lit extent, both clamped at 0."""
    positions = list(positions)
    if not positions:
        return 0, 0
    return max(0, max(positions)), max(0, -min(positions))


def tour_costs(R: int, L: int, m: int) -> tuple[int, int]:
    """Cursor-move counts of the right-first and left-first tours."""
    return 2 * R + L + abs(m + L), 2 * L + R + abs(m - R)


def tour_path(side: str, R: int, L: int, m: int) -> list[int]:
    """Positions occupied by the cursor, one entry per unit of time.

    Consecutive entries always differ, so every index is its own maximal
    visit interval.
    """
    if side == RIGHT_FIRST:
        turns = [0, R, -L, m]
    elif side == LEFT_FIRST:
        turns = [0, -L, R, m]
    else:
        raise ValueError(f"unknown side {side!r}")
    path = [0]
    for target in turns[1:]:
        step = 1 if target > path[-1] else -1
        path.extend(range(path[-1] + step, target + step, step) if target != path[-1] else ())
    return path


def minimal_sides(costs: tuple[int, int]) -> tuple[str, ...]:
    rf, lf = costs
    if rf == lf:
        return SIDES
    return (RIGHT_FIRST,) if rf < lf else (LEFT_FIRST,)


def visit_indices(path: Sequence[int]) -> dict[int, list[int]]:
    visits: dict[int, list[int]] = {}
    for i, pos in enumerate(path):
        visits.setdefault(pos, []).append(i)
    return visits


def schedule_word(path: Sequence[int], drops: dict[int, Sequence[GenLetter]]) -> tuple:
    """Walk ``path``, emitting ``drops[i]`` while the cursor sits at index ``i``."""
    word = []
    for i, pos in enumerate(path):
        word.extend(drops.get(i, ()))
        if i + 1 < len(path):
            word.append(_T if path[i + 1] > pos else _T_INV)
    return tuple(word)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` non-negative summands."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# -- lamplighter metric ------------------------------------------------------

def lamp_exponent(params: LnParams, state: int) -> int:
    """Signed exponent e with |e| minimal and a^e reaching ``state``; +h when n is even and state = h."""
    if not 1 <= state < params.n:
        raise ValueError(f"lamp state {state} outside [1, {params.n - 1}]")
    return state if state <= params.h else state - params.n


def lamp_cost(params: LnParams, state: int) -> int:
    return abs(lamp_exponent(params, state))


@dataclass(frozen=True)
class NormalForm:
    side: str
    nonneg_terms: tuple
    neg_terms: tuple
    R: int
    L: int
    cursor: int
    cost: int

    @property
    def terms(self) -> tuple:
        if self.side == RIGHT_FIRST:
            return self.nonneg_terms + self.neg_terms
        return self.neg_terms + self.nonneg_terms

    def __str__(self) -> str:
        terms = ",".join(f"({p},{e})" for p, e in self.terms)
        return (f"side={self.side} terms=[{terms}] R={self.R} L={self.L} "
                f"m={self.cursor} cost={self.cost}")


@dataclass(frozen=True)
class GeodesicSchedule:
    """A geodesic spelling plus, per lit position, the exponent applied at each visit."""

    side: str
    letters: tuple
    choices: dict = field(default_factory=dict, compare=False, hash=False)


def _lamp_total(e: LnElement) -> int:
    return sum(lamp_cost(e.params, s) for _, s in e.lamps)


def word_length_D(e: LnElement) -> int:
    R, L = extents(p for p, _ in e.lamps)
    return _lamp_total(e) + min(tour_costs(R, L, e.cursor))


def normal_form(e: LnElement, side: str = RIGHT_FIRST) -> NormalForm:
    R, L = extents(p for p, _ in e.lamps)
    rf, lf = tour_costs(R, L, e.cursor)
    exps = [(p, lamp_exponent(e.params, s)) for p, s in e.lamps]
    nonneg = tuple((p, x) for p, x in exps if p >= 0)
    neg = tuple((p, x) for p, x in reversed(exps) if p < 0)
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    moves = rf if side == RIGHT_FIRST else lf
    return NormalForm(side, nonneg, neg, R, L, e.cursor, _lamp_total(e) + moves)


def _side_setup(e: LnElement):
    R, L = extents(p for p, _ in e.lamps)
    return R, L, minimal_sides(tour_costs(R, L, e.cursor))


def revisited_positions(e: LnElement, side: str) -> list[int]:
    """Lit positions that the side's canonical tour occupies in two or more intervals."""
    R, L = extents(p for p, _ in e.lamps)
    visits = visit_indices(tour_path(side, R, L, e.cursor))
    return [p for p, _ in e.lamps if len(visits[p]) >= 2]


def emit_geodesic(e: LnElement) -> tuple:
    R, L, sides = _side_setup(e)
    side = sides[0]
    path = tour_path(side, R, L, e.cursor)
    visits = visit_indices(path)
    drops = {}
    for p, s in e.lamps:
        x = lamp_exponent(e.params, s)
        drops[visits[p][0]] = (GenLetter(LAMP, 1 if x > 0 else -1),) * abs(x)
    return schedule_word(path, drops)


def enumerate_schedules(e: LnElement) -> Iterator[GeodesicSchedule]:
    """All first/second/split visit assignments on every minimal side.

    A lamp whose minimal exponent is x and which the tour visits k times
    contributes every same-sign composition of |x| into k parts.
    """
    R, L, sides = _side_setup(e)
    for side in sides:
        path = tour_path(side, R, L, e.cursor)
        visits = visit_indices(path)
        per_lamp = []
        for p, s in e.lamps:
            x = lamp_exponent(e.params, s)
            per_lamp.append((p, x, visits[p], list(compositions(abs(x), len(visits[p])))))
        for picks in itertools.product(*(opts for *_, opts in per_lamp)):
            drops: dict[int, tuple] = {}
            choices = {}
            for (p, x, idx, _), split in zip(per_lamp, picks):
                letter = GenLetter(LAMP, 1 if x > 0 else -1)
                for i, amount in zip(idx, split):
                    if amount:
                        drops[i] = (letter,) * amount
                choices[p] = tuple(amount if x > 0 else -amount for amount in split)
            yield GeodesicSchedule(side, schedule_word(path, drops), choices)


def enumerate_geodesics(e: LnElement) -> set:
    return {sched.letters for sched in enumerate_schedules(e)}

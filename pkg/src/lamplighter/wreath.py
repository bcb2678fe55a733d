"""The wreath product G wr Z for a finite group G given by a table.

Same cursor picture as the lamplighter: each integer position holds an
element of G (identity slots are not stored) and the G-generators
right-multiply the slot under the cursor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .elements import SHIFT, GenLetter, LnElement, LnParams
from .finite_group import FiniteGroupTable, group_geodesic, group_geodesics, is_dead_end_in_group
from .metric import (
    extents,
    minimal_sides,
    schedule_word,
    tour_costs,
    tour_path,
    visit_indices,
)

__all__ = [
    "WreathElement",
    "wreath_identity",
    "wreath_apply",
    "eval_wreath_word",
    "wreath_length_D",
    "wreath_emit_geodesic",
    "wreath_enumerate_geodesics",
    "lift_dead_end_family",
    "ln_to_wreath",
    "wreath_to_ln",
]

MAX_SPLIT_SLOTS = 4


@dataclass(frozen=True)
class WreathElement:
    group: FiniteGroupTable
    slots: tuple = ()
    cursor: int = 0

    def __post_init__(self):
        prev = None
        for pos, x in self.slots:
            if not 0 < x < self.group.order:
                raise ValueError(f"slot value {x} at {pos} is the identity or out of range")
            if prev is not None and pos <= prev:
                raise ValueError("slot positions must be strictly ascending")
            prev = pos

    @classmethod
    def from_slots(cls, group: FiniteGroupTable, slots: dict, cursor: int = 0) -> WreathElement:
        return cls(group, tuple(sorted((p, x) for p, x in slots.items() if x)), cursor)

    def slot(self, pos: int) -> int:
        for p, x in self.slots:
            if p == pos:
                return x
        return 0

    def __str__(self) -> str:
        body = ",".join(f"{p}:{x}" for p, x in self.slots)
        return f"slots={{{body}}} cursor={self.cursor}"


def wreath_identity(G: FiniteGroupTable) -> WreathElement:
    return WreathElement(G)


def wreath_apply(e: WreathElement, g: GenLetter) -> WreathElement:
    if g.name == SHIFT:
        return WreathElement(e.group, e.slots, e.cursor + g.sign)
    G = e.group
    x = G.mul[e.slot(e.cursor)][G.letter_index(g)]
    slots = [(p, y) for p, y in e.slots if p != e.cursor]
    if x:
        slots.append((e.cursor, x))
        slots.sort()
    return WreathElement(G, tuple(slots), e.cursor)


def eval_wreath_word(G: FiniteGroupTable, word) -> WreathElement:
    e = wreath_identity(G)
    for g in word:
        e = wreath_apply(e, g)
    return e


def wreath_length_D(e: WreathElement) -> int:
    R, L = extents(p for p, _ in e.slots)
    return sum(e.group.lengths[x] for _, x in e.slots) + min(tour_costs(R, L, e.cursor))


def wreath_emit_geodesic(e: WreathElement) -> tuple:
    """Cheaper tour (right-first on ties), each slot spelled by its BFS geodesic on first visit."""
    R, L = extents(p for p, _ in e.slots)
    side = minimal_sides(tour_costs(R, L, e.cursor))[0]
    path = tour_path(side, R, L, e.cursor)
    visits = visit_indices(path)
    drops = {visits[p][0]: group_geodesic(e.group, x) for p, x in e.slots}
    return schedule_word(path, drops)


def _word_splits(word: tuple, parts: int):
    if parts == 1:
        yield (word,)
        return
    for cut in range(len(word) + 1):
        for rest in _word_splits(word[cut:], parts - 1):
            yield (word[:cut],) + rest


def wreath_enumerate_geodesics(e: WreathElement, max_slots: int = MAX_SPLIT_SLOTS) -> set:
    """Geodesics from splitting every G-geodesic of each slot across its tour visits.

    Exponential in the number of slots, so refused above ``max_slots``.
    """
    if len(e.slots) > max_slots:
        raise ValueError(f"{len(e.slots)} slots exceeds split-enumeration limit {max_slots}")
    R, L = extents(p for p, _ in e.slots)
    out = set()
    for side in minimal_sides(tour_costs(R, L, e.cursor)):
        path = tour_path(side, R, L, e.cursor)
        visits = visit_indices(path)
        per_slot = []
        for p, x in e.slots:
            idx = visits[p]
            options = [split for w in group_geodesics(e.group, x)
                       for split in _word_splits(w, len(idx))]
            per_slot.append((idx, options))
        for picks in itertools.product(*(opts for _, opts in per_slot)):
            drops = {}
            for (idx, _), split in zip(per_slot, picks):
                for i, piece in zip(idx, split):
                    if piece:
                        drops[i] = piece
            out.add(schedule_word(path, drops))
    return out


def lift_dead_end_family(G: FiniteGroupTable, a: int, m: int) -> WreathElement:
    """The dead end element a placed at every position in [-m, m], cursor at 0."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0 <= a < G.order or a == 0 or not is_dead_end_in_group(G, a):
        raise ValueError(f"element {a} is not a dead end in G")
    return WreathElement(G, tuple((p, a) for p in range(-m, m + 1)), 0)


def _check_cyclic(G: FiniteGroupTable, n: int) -> None:
    cyclic = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    if G.order != n or G.generators != (("a", 1),) or G.mul != cyclic:
        raise ValueError("group is not cyclic_group(n) with generator a = 1")


def ln_to_wreath(e: LnElement, G: FiniteGroupTable) -> WreathElement:
    """Identify L_n with Z_n wr Z: lamp state s <-> slot element s = a^s."""
    _check_cyclic(G, e.params.n)
    return WreathElement(G, e.lamps, e.cursor)


def wreath_to_ln(e: WreathElement) -> LnElement:
    params = LnParams(e.group.order)
    _check_cyclic(e.group, params.n)
    return LnElement(params, e.slots, e.cursor)

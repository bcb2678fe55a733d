"""Finite groups given by multiplication tables, with BFS word lengths.

Table file format (``wreath-group-table v1``)::

    wreath-group-table v1
    order N
    gen <name> <index>
    table
    <N rows of N indices>        # row i, column j holds i*j

Index 0 is the identity; ``#`` starts a comment.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .elements import SHIFT, GenLetter

__all__ = [
    "FiniteGroupTable",
    "GroupTableError",
    "build_group",
    "load_group_file",
    "parse_group_text",
    "format_group_text",
    "cyclic_group",
    "group_from_spec",
    "group_geodesic",
    "group_geodesics",
    "eval_group_word",
    "is_dead_end_in_group",
]

HEADER = "wreath-group-table v1"
FULL_ASSOCIATIVITY_LIMIT = 256
ASSOCIATIVITY_SAMPLES = 10_000

_NAME = re.compile(r"^[a-z][a-z0-9_]*$")


class GroupTableError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    order: int
    mul: tuple  # tuple of row tuples
    generators: tuple  # ((name, index), ...)
    inverses: tuple
    lengths: tuple
    geodesic_parent: tuple  # (predecessor index, GenLetter) per element; None at identity

    @property
    def letters(self) -> tuple:
        """The closed generating set as letters, each generator then its inverse."""
        return tuple(GenLetter(name, s) for name, _ in self.generators for s in (1, -1))

    def letter_index(self, g: GenLetter) -> int:
        for name, idx in self.generators:
            if name == g.name:
                return idx if g.sign == 1 else self.inverses[idx]
        raise ValueError(f"unknown generator {g.name!r}")

    def gen_names(self) -> tuple:
        return tuple(name for name, _ in self.generators)


def _check_axioms(mul: Sequence[Sequence[int]], N: int, rng: random.Random) -> None:
    if len(mul) != N or any(len(row) != N for row in mul):
        raise GroupTableError(f"table is not {N}x{N}")
    full = set(range(N))
    for i, row in enumerate(mul):
        if set(row) != full:
            raise GroupTableError(f"row {i} is not a permutation of 0..{N - 1}")
    for j in range(N):
        if {mul[i][j] for i in range(N)} != full:
            raise GroupTableError(f"column {j} is not a permutation of 0..{N - 1}")
    for i in range(N):
        if mul[0][i] != i or mul[i][0] != i:
            raise GroupTableError("index 0 is not a two-sided identity")
    if N <= FULL_ASSOCIATIVITY_LIMIT:
        triples = ((x, y, z) for x in range(N) for y in range(N) for z in range(N))
    else:
        triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N))
                   for _ in range(ASSOCIATIVITY_SAMPLES))
    for x, y, z in triples:
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            raise GroupTableError(f"associativity fails at ({x}, {y}, {z})")


def build_group(mul: Sequence[Sequence[int]], generators: Sequence[tuple[str, int]],
                seed: int = 0) -> FiniteGroupTable:
    """Validate a table and compute word lengths and BFS parents over gens and inverses."""
    N = len(mul)
    if N < 1:
        raise GroupTableError("order must be at least 1")
    mul = tuple(tuple(int(x) for x in row) for row in mul)
    _check_axioms(mul, N, random.Random(seed))
    seen = set()
    for name, idx in generators:
        if not _NAME.match(name) or name == SHIFT:
            raise GroupTableError(f"bad generator name {name!r} (lowercase, not {SHIFT!r})")
        if name in seen:
            raise GroupTableError(f"duplicate generator name {name!r}")
        if not 0 <= idx < N:
            raise GroupTableError(f"generator {name!r} index {idx} out of range")
        seen.add(name)
    inverses = tuple(row.index(0) for row in mul)

    lengths = [-1] * N
    parent: list = [None] * N
    lengths[0] = 0
    queue = deque([0])
    letters = [(GenLetter(name, s), idx if s == 1 else inverses[idx])
               for name, idx in generators for s in (1, -1)]
    while queue:
        x = queue.popleft()
        for letter, g in letters:
            y = mul[x][g]
            if lengths[y] < 0:
                lengths[y] = lengths[x] + 1
                parent[y] = (x, letter)
                queue.append(y)
    if min(lengths) < 0:
        raise GroupTableError(
            f"generating set does not generate G: reached {sum(l >= 0 for l in lengths)} of {N} elements")
    return FiniteGroupTable(N, mul, tuple((n, int(i)) for n, i in generators), inverses,
                            tuple(lengths), tuple(parent))


def parse_group_text(text: str) -> FiniteGroupTable:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != HEADER:
        raise GroupTableError(f"missing header {HEADER!r}")
    order = None
    gens = []
    rows = None
    for k, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if parts[0] == "order" and len(parts) == 2 and order is None:
            try:
                order = int(parts[1])
            except ValueError:
                raise GroupTableError(f"bad order line {line!r}") from None
        elif parts[0] == "gen" and len(parts) == 3:
            try:
                gens.append((parts[1], int(parts[2])))
            except ValueError:
                raise GroupTableError(f"bad gen line {line!r}") from None
        elif parts == ["table"]:
            rows = lines[k + 1:]
            break
        else:
            raise GroupTableError(f"unexpected line {line!r}")
    if order is None:
        raise GroupTableError("missing order line")
    if rows is None:
        raise GroupTableError("missing table section")
    try:
        mul = [[int(x) for x in row.split()] for row in rows]
    except ValueError:
        raise GroupTableError("non-integer entry in table") from None
    if len(mul) != order:
        raise GroupTableError(f"expected {order} table rows, found {len(mul)}")
    return build_group(mul, gens)


def load_group_file(path) -> FiniteGroupTable:
    return parse_group_text(Path(path).read_text())


def format_group_text(G: FiniteGroupTable) -> str:
    out = [HEADER, f"order {G.order}"]
    out += [f"gen {name} {idx}" for name, idx in G.generators]
    out.append("table")
    out += [" ".join(map(str, row)) for row in G.mul]
    return "\n".join(out) + "\n"


def cyclic_group(k: int) -> FiniteGroupTable:
    if k < 2:
        raise ValueError(f"cyclic group order must be >= 2, got {k}")
    return build_group([[(i + j) % k for j in range(k)] for i in range(k)], [("a", 1)])


def group_from_spec(spec: str) -> FiniteGroupTable:
    """``cyclic:<k>`` or a path to a table file."""
    if spec.startswith("cyclic:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise GroupTableError(f"bad cyclic group spec {spec!r}") from None
        return cyclic_group(k)
    return load_group_file(spec)


def eval_group_word(G: FiniteGroupTable, word) -> int:
    x = 0
    for g in word:
        x = G.mul[x][G.letter_index(g)]
    return x


def group_geodesic(G: FiniteGroupTable, x: int) -> tuple:
    letters = []
    while x != 0:
        x, g = G.geodesic_parent[x]
        letters.append(g)
    return tuple(reversed(letters))


def group_geodesics(G: FiniteGroupTable, x: int) -> list:
    """Every geodesic word for ``x``, sorted."""
    if x == 0:
        return [()]
    out = []
    for g in G.letters:
        # x = y * g with |y| = |x| - 1
        y = G.mul[x][G.letter_index(g.inverse())]
        if G.lengths[y] == G.lengths[x] - 1:
            out.extend(w + (g,) for w in group_geodesics(G, y))
    return sorted(set(out))


def is_dead_end_in_group(G: FiniteGroupTable, x: int) -> bool:
    n = G.lengths[x]
    return all(G.lengths[G.mul[x][G.letter_index(g)]] <= n for g in G.letters)

"""Brute-force ground truth on Cayley graphs.

Nothing here uses the closed-form length for ball enumeration: distances come
from breadth-first search over generator edges only.  The closed form is used
only where noted (in-ball membership and escape detection), and is itself
checked against the BFS ball by :func:`verify_metric_formula`.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TextIO

from .elements import LAMP, SHIFT, GenLetter, LnElement, LnParams, apply_gen
from .finite_group import FiniteGroupTable
from .metric import word_length_D
from .wreath import WreathElement, wreath_apply, wreath_length_D

log = logging.getLogger(__name__)

__all__ = [
    "CayleyModel",
    "lamplighter_model",
    "wreath_model",
    "BallIndex",
    "BallTooLarge",
    "Depth",
    "MetricReport",
    "enumerate_ball",
    "distance",
    "verify_metric_formula",
    "in_ball_shortest_path",
    "graph_distance",
    "bfs_geodesics",
    "escape_depth",
    "is_dead_end",
    "dump_ball",
    "load_ball",
    "sphere_tsv",
    "encode",
    "DEFAULT_NODE_CAP",
]

DEFAULT_NODE_CAP = 50_000_000
DUMP_HEADER = "# lamplighter-ball v1"


class BallTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class CayleyModel:
    """A group element type with its closed generating set and closed-form length."""

    name: str
    identity: object
    letters: tuple
    apply: Callable
    length: Callable

    def neighbors(self, e) -> list:
        return [self.apply(e, g) for g in self.letters]


_LN_LETTERS = (GenLetter(LAMP, 1), GenLetter(LAMP, -1), GenLetter(SHIFT, 1), GenLetter(SHIFT, -1))


def lamplighter_model(params: LnParams | int) -> CayleyModel:
    if isinstance(params, int):
        params = LnParams(params)
    return CayleyModel(f"L_{params.n}", LnElement(params), _LN_LETTERS, apply_gen, word_length_D)


def wreath_model(G: FiniteGroupTable, name: str = "G") -> CayleyModel:
    letters = G.letters + (GenLetter(SHIFT, 1), GenLetter(SHIFT, -1))
    return CayleyModel(f"{name} wr Z", WreathElement(G), letters, wreath_apply, wreath_length_D)


def encode(e) -> str:
    """Canonical text key: ``p:s,p:s,...@cursor`` with positions ascending."""
    entries = e.lamps if isinstance(e, LnElement) else e.slots
    return ",".join(f"{p}:{s}" for p, s in entries) + f"@{e.cursor}"


@dataclass
class BallIndex:
    model: CayleyModel
    radius: int
    distances: dict
    sphere_sizes: list

    def __contains__(self, e) -> bool:
        return e in self.distances

    def __len__(self) -> int:
        return len(self.distances)

    def sphere(self, r: int) -> list:
        return [e for e, d in self.distances.items() if d == r]


def _expand(model: CayleyModel, chunk: list) -> list:
    return [model.neighbors(e) for e in chunk]


def _chunks(seq: list, k: int) -> list:
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def enumerate_ball(model: CayleyModel, radius: int, cap: int = DEFAULT_NODE_CAP,
                   workers: int = 1) -> BallIndex:
    """Exact ball of ``radius`` by level-synchronous BFS.

    With ``workers > 1`` each frontier is expanded in chunks on a thread pool
    and merged in chunk order, so the result (including dict order) does not
    depend on the worker count.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    distances = {model.identity: 0}
    frontier = [model.identity]
    spheres = [1]
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        for r in range(1, radius + 1):
            if pool is None:
                expanded = _expand(model, frontier)
            else:
                parts = pool.map(lambda c: _expand(model, c), _chunks(frontier, workers))
                expanded = list(itertools.chain.from_iterable(parts))
            nxt = []
            for nbrs in expanded:
                for y in nbrs:
                    if y not in distances:
                        distances[y] = r
                        nxt.append(y)
            if len(distances) > cap:
                raise BallTooLarge(f"ball of radius {radius} exceeds {cap} nodes (at radius {r})")
            spheres.append(len(nxt))
            frontier = nxt
            log.debug("radius %d: sphere %d, ball %d", r, len(nxt), len(distances))
    finally:
        if pool is not None:
            pool.shutdown()
    return BallIndex(model, radius, distances, spheres)


def distance(b: BallIndex, e) -> Optional[int]:
    """BFS distance of ``e``, or None when ``e`` lies outside the ball."""
    return b.distances.get(e)


@dataclass
class MetricReport:
    model: str
    radius: int
    checked: int
    mismatches: int
    first_mismatch: Optional[tuple] = None  # (element, bfs distance, formula)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def lines(self) -> list:
        out = [f"model={self.model} radius={self.radius} checked={self.checked} "
               f"mismatches={self.mismatches}"]
        if self.first_mismatch is not None:
            e, bfs, formula = self.first_mismatch
            out.append(f"first_mismatch={encode(e)} bfs={bfs} formula={formula}")
        return out


def _grow(model: CayleyModel, dist: dict, frontier: list, r: int) -> list:
    nxt = []
    for x in frontier:
        for y in model.neighbors(x):
            if y not in dist:
                dist[y] = r
                nxt.append(y)
    return nxt


def graph_distance(model: CayleyModel, source, target, limit: int) -> Optional[int]:
    """Cayley-graph distance by bidirectional BFS, or None if it exceeds ``limit``.

    Uses generator edges only, never the closed-form length.
    """
    if source == target:
        return 0
    fwd, bwd = {source: 0}, {target: 0}
    f_front, b_front = [source], [target]
    rf = rb = 0
    best = None
    while rf + rb < limit and (f_front or b_front):
        # grow the smaller side; the generating set is symmetric so both directions use right multiplication
        if f_front and (len(f_front) <= len(b_front) or not b_front):
            rf += 1
            f_front = _grow(model, fwd, f_front, rf)
            hits = [fwd[y] + bwd[y] for y in f_front if y in bwd]
        else:
            rb += 1
            b_front = _grow(model, bwd, b_front, rb)
            hits = [fwd[y] + bwd[y] for y in b_front if y in fwd]
        if hits:
            best = min(hits)
            break
    return best if best is not None and best <= limit else None


def bfs_geodesics(ball: BallIndex, e) -> set:
    """Every geodesic word for ``e``, read off the BFS distance layers of ``ball``."""
    model = ball.model
    d = ball.distances.get(e)
    if d is None:
        raise ValueError("element is outside the ball")
    if d == 0:
        return {()}
    out = set()
    for g in model.letters:
        y = model.apply(e, g.inverse())
        if ball.distances.get(y) == d - 1:
            out.update(w + (g,) for w in bfs_geodesics(ball, y))
    return out


def verify_metric_formula(model: CayleyModel, radius: int, ball: Optional[BallIndex] = None,
                          **kwargs) -> MetricReport:
    if ball is None:
        ball = enumerate_ball(model, radius, **kwargs)
    bad = 0
    first = None
    for e, d in ball.distances.items():
        f = model.length(e)
        if f != d:
            bad += 1
            if first is None:
                first = (e, d, f)
    return MetricReport(model.name, radius, len(ball), bad, first)


def in_ball_shortest_path(model: CayleyModel, radius: int, source, target,
                          cap: int = DEFAULT_NODE_CAP) -> Optional[int]:
    """Shortest path length from ``source`` to ``target`` through elements of length <= radius.

    Membership uses the closed-form length, so only the component reachable
    from ``source`` is materialised.  Returns None if the target is not
    reachable inside the ball.
    """
    for name, e in (("source", source), ("target", target)):
        if model.length(e) > radius:
            raise ValueError(f"{name} has length {model.length(e)} > radius {radius}")
    if source == target:
        return 0
    seen = {source}
    frontier = [source]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for x in frontier:
            for y in model.neighbors(x):
                if y in seen or model.length(y) > radius:
                    continue
                if y == target:
                    return steps
                seen.add(y)
                nxt.append(y)
        if len(seen) > cap:
            raise BallTooLarge(f"in-ball search exceeded {cap} nodes")
        frontier = nxt
    return None


@dataclass(frozen=True)
class Depth:
    """Escape depth: exact, or a lower bound when the search budget ran out."""

    value: int
    exact: bool = True

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def is_dead_end(model: CayleyModel, e) -> bool:
    n = model.length(e)
    return all(model.length(y) <= n for y in model.neighbors(e))


def escape_depth(model: CayleyModel, e, max_steps: int) -> Depth:
    """One less than the shortest word x_1..x_s with |e x_1..x_s| > |e|.

    Searches words of length up to ``max_steps``; if none escapes the result
    is ``Depth(max_steps, exact=False)``.
    """
    if not is_dead_end(model, e):
        raise ValueError("element is not a dead end")
    base = model.length(e)
    seen = {e}
    frontier = [e]
    for s in range(1, max_steps + 1):
        nxt = []
        for x in frontier:
            for y in model.neighbors(x):
                if y in seen:
                    continue
                if model.length(y) > base:
                    return Depth(s - 1)
                seen.add(y)
                nxt.append(y)
        frontier = nxt
    return Depth(max_steps, exact=False)


def sphere_tsv(b: BallIndex) -> str:
    return "".join(f"{r}\t{c}\n" for r, c in enumerate(b.sphere_sizes))


def dump_ball(b: BallIndex, fh: TextIO) -> None:
    """Line-based dump ``<encoded element> <distance>``, sorted by distance then key."""
    fh.write(f"{DUMP_HEADER} model={b.model.name.replace(' ', '_')} radius={b.radius}\n")
    rows = sorted((d, encode(e)) for e, d in b.distances.items())
    for d, key in rows:
        fh.write(f"{key} {d}\n")


def load_ball(lines: Iterable[str]) -> dict:
    """Read a dump back as ``{encoded element: distance}``."""
    out = {}
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, d = line.rsplit(" ", 1)
        out[key] = int(d)
    return out

"""Elements of the lamplighter groups L_n = Z_n wr Z and the word grammar.

An element is a finitely supported lamp configuration on the integers plus a
cursor position.  Words are tuples of signed letters; the text grammar is a
whitespace-separated token list where lowercase names a generator, uppercase
its inverse, and an optional ``^k`` suffix repeats it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "LnParams",
    "GenLetter",
    "Word",
    "LnElement",
    "WordSyntaxError",
    "parse_word",
    "format_word",
    "inverse_word",
    "apply_gen",
    "eval_word",
    "identity",
    "invert",
    "mirror",
    "LAMP",
    "SHIFT",
]

LAMP = "a"
SHIFT = "t"

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(.*))?$")


class WordSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class LnParams:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"lamp modulus must be an integer >= 2, got {self.n!r}")

    @property
    def h(self) -> int:
        return self.n // 2


@dataclass(frozen=True, order=True)
class GenLetter:
    name: str
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> GenLetter:
        return GenLetter(self.name, -self.sign)

    def __str__(self) -> str:
        return self.name if self.sign == 1 else self.name.upper()


Word = tuple  # tuple[GenLetter, ...]


def parse_word(text: str, alphabet: Iterable[str] = (LAMP, SHIFT)) -> Word:
    """Parse ``text`` into a word over the lowercase generator names in ``alphabet``.

    ``g^k`` expands to ``|k|`` copies of ``g`` (or of its inverse when ``k < 0``);
    an uppercase token stands for the inverse, so ``T^-2`` is ``t t``.
    """
    names = set(alphabet)
    letters = []
    for token in text.split():
        match = _TOKEN.match(token)
        if match is None:
            raise WordSyntaxError(f"malformed token {token!r}")
        head, exp_text = match.groups()
        if head.lower() in names and head == head.lower():
            sign = 1
        elif head.lower() in names and head == head.upper():
            sign = -1
        else:
            raise WordSyntaxError(f"unknown generator {head!r}")
        exp = 1
        if exp_text is not None:
            try:
                exp = int(exp_text)
            except ValueError:
                raise WordSyntaxError(f"malformed exponent in {token!r}") from None
            if exp == 0:
                raise WordSyntaxError(f"zero exponent in {token!r}")
        sign *= 1 if exp > 0 else -1
        letters.extend([GenLetter(head.lower(), sign)] * abs(exp))
    return tuple(letters)


def format_word(word: Iterable[GenLetter]) -> str:
    return " ".join(str(g) for g in word)


def inverse_word(word: Iterable[GenLetter]) -> Word:
    return tuple(g.inverse() for g in reversed(tuple(word)))


@dataclass(frozen=True)
class LnElement:
    """A lamp configuration (sorted ``(position, state)`` pairs, states in
    ``[1, n-1]``) together with the cursor position."""

    params: LnParams
    lamps: tuple = ()
    cursor: int = 0

    def __post_init__(self):
        n = self.params.n
        prev = None
        for pos, state in self.lamps:
            if not 1 <= state < n:
                raise ValueError(f"lamp state {state} at {pos} outside [1, {n - 1}]")
            if prev is not None and pos <= prev:
                raise ValueError("lamp positions must be strictly ascending")
            prev = pos

    @classmethod
    def from_lamps(cls, params: LnParams, lamps: Mapping[int, int], cursor: int = 0) -> LnElement:
        """Build from any position -> state mapping; states are reduced mod n
        and off lamps dropped."""
        reduced = {p: s % params.n for p, s in lamps.items()}
        return cls(params, tuple(sorted((p, s) for p, s in reduced.items() if s)), cursor)

    @property
    def lamp_map(self) -> dict:
        return dict(self.lamps)

    def state(self, pos: int) -> int:
        for p, s in self.lamps:
            if p == pos:
                return s
        return 0

    def __str__(self) -> str:
        body = ",".join(f"{p}:{s}" for p, s in self.lamps)
        return f"lamps={{{body}}} cursor={self.cursor}"


def identity(params: LnParams) -> LnElement:
    return LnElement(params)


def _set_lamp(lamps: tuple, pos: int, state: int) -> tuple:
    out = [(p, s) for p, s in lamps if p != pos]
    if state:
        out.append((pos, state))
        out.sort()
    return tuple(out)


def apply_gen(e: LnElement, g: GenLetter) -> LnElement:
    if g.name == SHIFT:
        return LnElement(e.params, e.lamps, e.cursor + g.sign)
    if g.name == LAMP:
        state = (e.state(e.cursor) + g.sign) % e.params.n
        return LnElement(e.params, _set_lamp(e.lamps, e.cursor, state), e.cursor)
    raise ValueError(f"{g.name!r} is not a lamplighter generator")


def eval_word(params: LnParams, word: Iterable[GenLetter]) -> LnElement:
    # direct fold over a dict; apply_gen rebuilds the tuple on every letter
    n = params.n
    lamps: dict = {}
    cursor = 0
    for g in word:
        if g.name == SHIFT:
            cursor += g.sign
        elif g.name == LAMP:
            s = (lamps.get(cursor, 0) + g.sign) % n
            if s:
                lamps[cursor] = s
            else:
                lamps.pop(cursor, None)
        else:
            raise ValueError(f"{g.name!r} is not a lamplighter generator")
    return LnElement(params, tuple(sorted(lamps.items())), cursor)


def invert(e: LnElement) -> LnElement:
    n, m = e.params.n, e.cursor
    return LnElement(e.params, tuple((p - m, n - s) for p, s in e.lamps), -m)


def mirror(e: LnElement) -> LnElement:
    return LnElement(e.params, tuple((-p, s) for p, s in reversed(e.lamps)), -e.cursor)

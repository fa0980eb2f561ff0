"""Multi-state characters over a species set.

A character is a partition of (a subset of) the species into state blocks;
state ``j`` of a character is its ``j``-th block in file order.

File syntax, one character per line::

    # comment
    species: a,b,c,d        (optional header)
    c1 = ab|cd              (single-letter species)
    c2: x1,x2|x3            (comma-separated tokens)

Blocks are split letter by letter unless the file uses commas anywhere in a
block or declares a multi-letter species in the header.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class CharacterDataError(ValueError):
    """Malformed or inconsistent character data."""


_HEADER_RE = re.compile(r"^species\s*:\s*(.*)$")
_LINE_RE = re.compile(r"^([^\s=:|,#]+)\s*[=:]\s*(.*)$")
_TOKEN_RE = re.compile(r"^[^\s=:|,#]+$")


@dataclass(frozen=True)
class Character:
    name: str
    blocks: tuple[frozenset[str], ...]

    def __post_init__(self):
        if not _TOKEN_RE.match(self.name):
            raise CharacterDataError(f"invalid character name {self.name!r}")
        if not self.blocks:
            raise CharacterDataError(f"character {self.name!r} has no blocks")
        seen: set[str] = set()
        for block in self.blocks:
            if not block:
                raise CharacterDataError(f"character {self.name!r} has an empty block")
            overlap = seen & block
            if overlap:
                raise CharacterDataError(
                    f"overlapping blocks in character {self.name!r}: {sorted(overlap)}"
                )
            seen |= block

    @property
    def n_states(self) -> int:
        return len(self.blocks)

    @property
    def species(self) -> frozenset[str]:
        return frozenset().union(*self.blocks)

    @property
    def is_trivial(self) -> bool:
        return sum(1 for b in self.blocks if len(b) > 1) <= 1

    def is_r_states(self, r: int) -> bool:
        return self.n_states <= r

    def state_of(self, species: str) -> int | None:
        for j, block in enumerate(self.blocks):
            if species in block:
                return j
        return None


@dataclass(frozen=True)
class CharacterSet:
    universe: tuple[str, ...]
    characters: tuple[Character, ...]

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise CharacterDataError("duplicate species in universe")
        names = [c.name for c in self.characters]
        dup = {n for n in names if names.count(n) > 1}
        if dup:
            raise CharacterDataError(f"duplicate character name(s): {sorted(dup)}")
        known = set(self.universe)
        for c in self.characters:
            outside = c.species - known
            if outside:
                raise CharacterDataError(
                    f"character {c.name!r} uses species outside the universe: {sorted(outside)}"
                )

    @classmethod
    def from_blocks(
        cls,
        characters: Iterable[tuple[str, Sequence[Iterable[str]]]],
        universe: Iterable[str] | None = None,
    ) -> CharacterSet:
        chars = tuple(
            Character(name, tuple(frozenset(b) for b in blocks)) for name, blocks in characters
        )
        if universe is None:
            universe = _first_seen(chars)
        return cls(tuple(universe), chars)

    def __len__(self) -> int:
        return len(self.characters)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.characters]

    def __getitem__(self, name: str) -> Character:
        for c in self.characters:
            if c.name == name:
                return c
        raise CharacterDataError(f"unknown character {name!r}")

    def is_full(self, c: Character) -> bool:
        return c.species == frozenset(self.universe)

    def max_states(self) -> int:
        return max((c.n_states for c in self.characters), default=0)


def _first_seen(chars: Iterable[Character]) -> tuple[str, ...]:
    order: dict[str, None] = {}
    for c in chars:
        for block in c.blocks:
            for s in sorted(block):
                order.setdefault(s, None)
    return tuple(order)


def _split_block(text: str, comma_mode: bool, where: str) -> list[str]:
    text = text.strip()
    if not text:
        raise CharacterDataError(f"{where}: empty block")
    if comma_mode:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = [ch for ch in text if not ch.isspace()]
    for t in tokens:
        if not t:
            raise CharacterDataError(f"{where}: empty species token")
        if not _TOKEN_RE.match(t):
            raise CharacterDataError(f"{where}: invalid species token {t!r}")
    if len(set(tokens)) != len(tokens):
        raise CharacterDataError(f"{where}: species repeated inside a block")
    return tokens


def parse_characters(text: str) -> CharacterSet:
    header: list[str] | None = None
    raw: list[tuple[int, str, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER_RE.match(line)
        if m:
            if header is not None:
                raise CharacterDataError(f"line {lineno}: second species header")
            header = [t.strip() for t in m.group(1).split(",") if t.strip()]
            for t in header:
                if not _TOKEN_RE.match(t):
                    raise CharacterDataError(f"line {lineno}: invalid species token {t!r}")
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise CharacterDataError(f"line {lineno}: cannot parse {line!r}")
        raw.append((lineno, m.group(1), m.group(2).split("|")))

    comma_mode = any("," in b for _, _, blocks in raw for b in blocks) or any(
        len(t) > 1 for t in header or []
    )
    chars = []
    seen_names: set[str] = set()
    for lineno, name, blocks in raw:
        if name in seen_names:
            raise CharacterDataError(f"line {lineno}: duplicate character name {name!r}")
        seen_names.add(name)
        where = f"line {lineno} ({name})"
        parsed = [frozenset(_split_block(b, comma_mode, where)) for b in blocks]
        try:
            chars.append(Character(name, tuple(parsed)))
        except CharacterDataError as exc:
            raise CharacterDataError(f"line {lineno}: {exc}") from None

    if header is not None:
        known = set(header)
        for c in chars:
            outside = c.species - known
            if outside:
                raise CharacterDataError(
                    f"character {c.name!r} uses species outside the declared universe: "
                    f"{sorted(outside)}"
                )
        universe = tuple(header)
    else:
        universe = _first_seen(chars)
    return CharacterSet(universe, tuple(chars))


def serialize_characters(cs: CharacterSet) -> str:
    letters = all(len(s) == 1 for s in cs.universe)
    lines = []
    if cs.universe != _first_seen(cs.characters) or not letters:
        lines.append("species: " + ",".join(cs.universe))
    sep = "" if letters else ","
    for c in cs.characters:
        blocks = "|".join(sep.join(sorted(b)) for b in c.blocks)
        lines.append(f"{c.name} = {blocks}")
    return "\n".join(lines) + "\n"


def restrict(cs: CharacterSet, names: Sequence[str]) -> CharacterSet:
    """Keep only the named characters, in the order given."""
    return CharacterSet(cs.universe, tuple(cs[name] for name in names))


def k_subsets(cs: CharacterSet, k: int) -> Iterator[CharacterSet]:
    n = len(cs.characters)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    for idx in itertools.combinations(range(n), k):
        yield CharacterSet(cs.universe, tuple(cs.characters[i] for i in idx))

"""Group elements, generators and words for the lamplighter group Z_2 wr Z.

An element is a finite set of lit bulb positions together with a cursor
position. Two generating sets are supported: the wreath set ``{a, t}`` and
the automata set ``{t, ta}``.

Compact word alphabet::

    a  toggle the bulb under the cursor
    t  cursor one step right          T  cursor one step left
    r  ta: step right, toggle there   R  (ta)^-1: toggle here, step left
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

MAX_POSITION = 2**30


class Generator(Enum):
    A = "a"
    T = "t"
    T_INV = "T"
    TA = "r"
    TA_INV = "R"

    @property
    def letter(self) -> str:
        return self.value

    @property
    def inverse(self) -> "Generator":
        return _INVERSES[self]

    @property
    def shift(self) -> int:
        """Net cursor displacement."""
        return _SHIFTS[self]

    def __str__(self) -> str:
        return _PRETTY[self]


_INVERSES = {
    Generator.A: Generator.A,
    Generator.T: Generator.T_INV,
    Generator.T_INV: Generator.T,
    Generator.TA: Generator.TA_INV,
    Generator.TA_INV: Generator.TA,
}
_SHIFTS = {
    Generator.A: 0,
    Generator.T: 1,
    Generator.T_INV: -1,
    Generator.TA: 1,
    Generator.TA_INV: -1,
}
_PRETTY = {
    Generator.A: "a",
    Generator.T: "t",
    Generator.T_INV: "t^-1",
    Generator.TA: "ta",
    Generator.TA_INV: "(ta)^-1",
}


class GenSet(str, Enum):
    WREATH = "wreath"
    AUTOMATA = "automata"

    @property
    def generators(self) -> tuple[Generator, ...]:
        """The generating set X (without inverses)."""
        if self is GenSet.WREATH:
            return (Generator.A, Generator.T)
        return (Generator.T, Generator.TA)

    @property
    def letters(self) -> tuple[Generator, ...]:
        """X together with X^-1, duplicates removed."""
        if self is GenSet.WREATH:
            return (Generator.A, Generator.T, Generator.T_INV)
        return (Generator.T, Generator.T_INV, Generator.TA, Generator.TA_INV)

    def __str__(self) -> str:
        return self.value


class Flavor(str, Enum):
    RIGHT_FIRST = "right-first"
    LEFT_FIRST = "left-first"

    def __str__(self) -> str:
        return self.value


def _check_position(p: int) -> None:
    if abs(p) > MAX_POSITION:
        raise ValueError(f"position {p} exceeds supported range +/-2^30")


@dataclass(frozen=True, order=True)
class GroupElement:
    """Lit bulbs (stored sorted, without duplicates) and a cursor position."""

    bulbs: tuple[int, ...] = ()
    cursor: int = 0

    def __post_init__(self):
        bulbs = tuple(sorted(set(int(p) for p in self.bulbs)))
        for p in bulbs:
            _check_position(p)
        _check_position(self.cursor)
        object.__setattr__(self, "bulbs", bulbs)
        object.__setattr__(self, "cursor", int(self.cursor))

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls((), 0)

    @property
    def is_identity(self) -> bool:
        return not self.bulbs and self.cursor == 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def inverse(self) -> "GroupElement":
        return invert(self)

    def literal(self) -> str:
        bulbs = ",".join(str(p) for p in self.bulbs) or "none"
        return f"bulbs={bulbs};cursor={self.cursor}"

    @classmethod
    def parse(cls, text: str) -> "GroupElement":
        """Parse the canonical literal ``bulbs=1,-2;cursor=3``."""
        m = re.fullmatch(r"\s*bulbs=([^;]*);\s*cursor=([+-]?\d+)\s*", text)
        if m is None:
            raise ValueError(f"malformed element literal: {text!r}")
        return cls(parse_bulbs(m.group(1)), int(m.group(2)))

    def to_mask(self, offset: int) -> int:
        """Bit ``p + offset`` is set for every lit bulb ``p``."""
        mask = 0
        for p in self.bulbs:
            if p + offset < 0:
                raise ValueError(f"offset {offset} too small for bulb {p}")
            mask |= 1 << (p + offset)
        return mask

    @classmethod
    def from_mask(cls, mask: int, cursor: int, offset: int) -> "GroupElement":
        bulbs = []
        bit = 0
        while mask:
            if mask & 1:
                bulbs.append(bit - offset)
            mask >>= 1
            bit += 1
        return cls(tuple(bulbs), cursor)

    def __str__(self) -> str:
        return self.literal()


def parse_bulbs(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "none"):
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed bulb list: {text!r}") from None


@dataclass(frozen=True)
class Word:
    letters: tuple[Generator, ...]
    genset: GenSet

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        allowed = self.genset.letters
        for g in self.letters:
            if g not in allowed:
                raise ValueError(f"letter {g.letter!r} not in the {self.genset} generating set")

    @classmethod
    def parse(cls, text: str, genset: GenSet | str) -> "Word":
        genset = GenSet(genset)
        letters = []
        for ch in text.replace(" ", ""):
            try:
                letters.append(Generator(ch))
            except ValueError:
                raise ValueError(f"unknown letter {ch!r} in word {text!r}") from None
        return cls(tuple(letters), genset)

    @classmethod
    def from_powers(cls, powers: Iterable[tuple[Generator, int]], genset: GenSet | str) -> "Word":
        """Build ``g1^n1 g2^n2 ...``; negative exponents use the inverse letter."""
        letters: list[Generator] = []
        for g, n in powers:
            letters.extend([g if n >= 0 else g.inverse] * abs(n))
        return cls(tuple(letters), GenSet(genset))

    def inverse(self) -> "Word":
        return Word(tuple(g.inverse for g in reversed(self.letters)), self.genset)

    def __add__(self, other: "Word") -> "Word":
        if other.genset is not self.genset:
            raise ValueError("cannot concatenate words over different generating sets")
        return Word(self.letters + other.letters, self.genset)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(g.letter for g in self.letters)


@dataclass(frozen=True)
class NormalForm:
    """Index data of the right-/left-first normal forms.

    ``pos`` holds the positive bulbs, ``nonpos`` holds ``j`` for each lit bulb
    at ``-j <= 0`` and ``r`` is the cursor. Both flavors share this data; the
    flavor only fixes the letter order produced by :meth:`word`.
    """

    pos: tuple[int, ...] = ()
    nonpos: tuple[int, ...] = ()
    r: int = 0
    flavor: Flavor = Flavor.RIGHT_FIRST

    def __post_init__(self):
        object.__setattr__(self, "pos", tuple(self.pos))
        object.__setattr__(self, "nonpos", tuple(self.nonpos))
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        if any(i <= 0 for i in self.pos) or any(b <= a for a, b in zip(self.pos, self.pos[1:])):
            raise ValueError(f"pos indices must be positive and strictly increasing: {self.pos}")
        if any(j < 0 for j in self.nonpos) or any(
            b <= a for a, b in zip(self.nonpos, self.nonpos[1:])
        ):
            raise ValueError(
                f"nonpos indices must be nonnegative and strictly increasing: {self.nonpos}"
            )

    @property
    def m(self) -> int:
        return len(self.pos)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.nonpos)

    def word(self) -> Word:
        """The normal form spelled out in wreath letters, ``a_k = t^k a t^-k``."""
        right = [(Generator.T, i) for i in self.pos]
        left = [(Generator.T, -j) for j in self.nonpos]
        conj = right + left if self.flavor is Flavor.RIGHT_FIRST else left + right
        powers: list[tuple[Generator, int]] = []
        for g, k in conj:
            powers += [(g, k), (Generator.A, 1), (g, -k)]
        powers.append((Generator.T, self.r))
        return Word.from_powers(powers, GenSet.WREATH)


def apply_generator(e: GroupElement, g: Generator) -> GroupElement:
    bulbs = set(e.bulbs)
    c = e.cursor
    if g is Generator.A:
        bulbs ^= {c}
    elif g is Generator.T:
        c += 1
    elif g is Generator.T_INV:
        c -= 1
    elif g is Generator.TA:
        c += 1
        bulbs ^= {c}
    else:
        bulbs ^= {c}
        c -= 1
    return GroupElement(tuple(bulbs), c)


def step_mask(g: Generator, mask: int, cursor: int, offset: int) -> tuple[int, int]:
    """:func:`apply_generator` on the bit-mask representation."""
    if g is Generator.T:
        return mask, cursor + 1
    if g is Generator.T_INV:
        return mask, cursor - 1
    if g is Generator.A:
        return mask ^ (1 << (cursor + offset)), cursor
    if g is Generator.TA:
        return mask ^ (1 << (cursor + 1 + offset)), cursor + 1
    return mask ^ (1 << (cursor + offset)), cursor - 1


def evaluate(word: Word | Sequence[Generator]) -> GroupElement:
    bulbs: set[int] = set()
    c = 0
    for g in word:
        if g is Generator.A:
            bulbs ^= {c}
        elif g is Generator.TA:
            c += 1
            bulbs ^= {c}
        elif g is Generator.TA_INV:
            bulbs ^= {c}
            c -= 1
        else:
            c += g.shift
    return GroupElement(tuple(bulbs), c)


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    shifted = {p + x.cursor for p in y.bulbs}
    return GroupElement(tuple(set(x.bulbs) ^ shifted), x.cursor + y.cursor)


def invert(x: GroupElement) -> GroupElement:
    return GroupElement(tuple(p - x.cursor for p in x.bulbs), -x.cursor)


def to_normal_form(e: GroupElement, flavor: Flavor | str = Flavor.RIGHT_FIRST) -> NormalForm:
    pos = tuple(p for p in e.bulbs if p > 0)
    nonpos = tuple(sorted(-p for p in e.bulbs if p <= 0))
    return NormalForm(pos, nonpos, e.cursor, Flavor(flavor))


def from_normal_form(nf: NormalForm) -> GroupElement:
    return GroupElement(nf.pos + tuple(-j for j in nf.nonpos), nf.r)


def cursor_of_word(word: Word | Sequence[Generator]) -> int:
    return sum(g.shift for g in word)


def prefix_states(word: Word | Sequence[Generator]) -> list[GroupElement]:
    states = [GroupElement.identity()]
    for g in word:
        states.append(apply_generator(states[-1], g))
    return states

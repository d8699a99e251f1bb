"""Dead ends, their depth, seesaw elements and the seesaw-like family w_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .core import GenSet, Generator, GroupElement, apply_generator
from .metrics import _extremes, distance, length_value
from .oracle import BallTable, build_ball, escape_depth

LengthFn = Callable[[GroupElement], int]


@dataclass(frozen=True)
class DeadEndReport:
    is_dead_end: bool
    length: int
    depth: int
    closed_form_depth: int | None = None


@dataclass(frozen=True)
class SeesawReport:
    element: GroupElement
    generator: Generator
    swing: int
    holds: bool
    failing_condition: int | None = None


@dataclass(frozen=True)
class SeesawLikeReport:
    k: int
    condition1: bool
    condition2: bool
    condition3: bool
    details: dict = field(default_factory=dict, compare=False)
    divergence: tuple[tuple[int, int], ...] = ()

    @property
    def holds(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3

    @property
    def divergence_ok(self) -> bool:
        return all(d == 2 * s for s, d in self.divergence)


def _length_fn(genset: GenSet, length: LengthFn | None) -> LengthFn:
    if length is not None:
        return length
    return lambda x: length_value(x, genset)


def is_dead_end(e: GroupElement, genset: GenSet | str) -> bool:
    genset = GenSet(genset)
    n = length_value(e, genset)
    return all(length_value(apply_generator(e, g), genset) <= n for g in genset.letters)


def closed_form_depth(e: GroupElement, genset: GenSet | str) -> int | None:
    """Depth ``2 min(i_m, j_l + 1)`` for automata dead ends with the cursor at 0."""
    if GenSet(genset) is not GenSet.AUTOMATA or e.cursor != 0:
        return None
    m, l, i_m, j_l = _extremes(e.bulbs)
    if m == 0 or l == 0:
        return None
    return 2 * min(i_m, j_l + 1)


def dead_end_depth(e: GroupElement, genset: GenSet | str) -> DeadEndReport:
    genset = GenSet(genset)
    depth = escape_depth(e, genset)
    return DeadEndReport(
        is_dead_end=depth > 0,
        length=length_value(e, genset),
        depth=depth,
        closed_form_depth=closed_form_depth(e, genset),
    )


def make_dm(m: int, pattern=None) -> GroupElement:
    """Bulbs at ``m`` and ``-m+1``, cursor at 0, ``pattern`` lit in between.

    ``pattern=None`` lights every intermediate bulb.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if pattern is None:
        pattern = range(-m + 2, m)
    pattern = set(pattern)
    bad = [p for p in pattern if not -m + 1 < p < m]
    if bad:
        raise ValueError(f"pattern positions {sorted(bad)} outside ({-m + 1}, {m})")
    return GroupElement(tuple(pattern | {m, -m + 1}), 0)


def make_wk(k: int) -> GroupElement:
    if k < 1:
        raise ValueError("k must be positive")
    return GroupElement((k, -k + 1), 0)


def _power(e: GroupElement, g: Generator, n: int) -> GroupElement:
    for _ in range(n):
        e = apply_generator(e, g)
    return e


def is_seesaw(
    e: GroupElement,
    g: Generator,
    k: int,
    genset: GenSet | str,
    length: LengthFn | None = None,
) -> SeesawReport:
    """Test the three seesaw conditions for swing ``k`` with respect to ``g``.

    Conditions (2) and (3) quantify over every letter except the one being
    repeated; the reversing letter only ever lengthens there, so this agrees
    with excluding the whole pair ``g^{+-1}``.
    """
    genset = GenSet(genset)
    if k < 1:
        raise ValueError("swing must be positive")
    if g not in genset.letters:
        raise ValueError(f"{g} is not a generator of the {genset} set")
    size = _length_fn(genset, length)
    n = size(e)
    ginv = g.inverse

    def report(holds: bool, cond: int | None = None) -> SeesawReport:
        return SeesawReport(e, g, k, holds, cond)

    if size(apply_generator(e, g)) != n - 1 or size(apply_generator(e, ginv)) != n - 1:
        return report(False, 1)
    for x in genset.letters:
        if x not in (g, ginv) and size(apply_generator(e, x)) < n:
            return report(False, 1)

    for cond, step in ((2, g), (3, ginv)):
        cur, cur_len = e, n
        for l in range(1, k + 1):
            nxt = apply_generator(cur, step)
            nxt_len = size(nxt)
            if nxt_len != cur_len - 1:
                return report(False, cond)
            cur, cur_len = nxt, nxt_len
            if l <= k - 1:
                for x in genset.letters:
                    if x is not step and size(apply_generator(cur, x)) < cur_len:
                        return report(False, cond)
    return report(True)


def seesaw_scan(
    genset: GenSet | str,
    radius: int,
    min_swing: int = 1,
    ball: BallTable | None = None,
    length: LengthFn | None = None,
) -> list[SeesawReport]:
    """Every seesaw element of the ball with swing >= ``min_swing``.

    ``g`` ranges over X only: testing ``g^-1`` swaps conditions (2) and (3)
    and gives the same verdict. The reported swing is the largest that holds.
    """
    genset = GenSet(genset)
    if ball is None:
        ball = build_ball(genset, radius)
    found = []
    for e, _, _ in sorted(ball.elements()):
        for g in genset.generators:
            rep = is_seesaw(e, g, min_swing, genset, length)
            if not rep.holds:
                continue
            k = min_swing
            # swing cannot exceed the length
            while k < ball.radius and is_seesaw(e, g, k + 1, genset, length).holds:
                k += 1
            found.append(SeesawReport(e, g, k, True))
    return found


def seesaw_like_check(k: int) -> SeesawLikeReport:
    """Exhaustively verify the seesaw-like conditions for ``w_k``."""
    if k < 1:
        raise ValueError("k must be positive")
    gs = GenSet.AUTOMATA
    w = make_wk(k)
    n = length_value(w, gs)
    right = (Generator.T, Generator.TA)
    left = (Generator.T_INV, Generator.TA_INV)

    cond1 = all(length_value(apply_generator(w, x), gs) == n - 1 for x in right + left)

    def family_ok(forward, backward) -> tuple[bool, int]:
        checked = 0
        for l in range(1, k + 1):
            for seq in product(forward, repeat=l):
                x = w
                for g in seq:
                    x = apply_generator(x, g)
                checked += 1
                if length_value(x, gs) != n - l:
                    return False, checked
                if l <= k - 1:
                    for h in backward:
                        if length_value(apply_generator(x, h), gs) != n - l + 1:
                            return False, checked
        return True, checked

    cond2, checked2 = family_ok(right, left)
    cond3, checked3 = family_ok(left, right)
    details = {
        "length": n,
        "right_trace": [length_value(_power(w, Generator.T, s), gs) for s in range(k + 1)],
        "left_trace": [length_value(_power(w, Generator.T_INV, s), gs) for s in range(k + 1)],
        "sequences_checked": checked2 + checked3,
    }
    divergence = tuple(
        (s, distance(_power(w, Generator.T, s), _power(w, Generator.T_INV, s), gs))
        for s in range(1, k + 1)
    )
    return SeesawLikeReport(k, cond1, cond2, cond3, details, divergence)

"""Closed-form word lengths, canonical geodesics and geodesic counting."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    GenSet,
    Generator,
    GroupElement,
    Word,
    invert,
    multiply,
    prefix_states,
    step_mask,
)

DEFAULT_COUNT_BUDGET = 32


class Branch(str, Enum):
    RIGHT_FIRST = "right-first"
    LEFT_FIRST = "left-first"
    BOTH = "both"
    SINGLE_SIDE = "single-side"

    def __str__(self) -> str:
        return self.value


class BudgetExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class LengthReport:
    value: int
    branch: Branch
    genset: GenSet


@dataclass(frozen=True)
class GeodesicCountReport:
    count: int
    u: int
    cursor_at_origin: bool


def _extremes(bulbs) -> tuple[int, int, int, int]:
    """(m, l, i_m, j_l) with i_m = 0 when m = 0 and j_l = 0 when l = 0."""
    m = l = i_m = j_l = 0
    for p in bulbs:
        if p > 0:
            m += 1
            i_m = max(i_m, p)
        else:
            l += 1
            j_l = max(j_l, -p)
    return m, l, i_m, j_l


def _branch_terms(genset: GenSet, i_m: int, j_l: int, r: int) -> tuple[int, int]:
    """Cursor travel of the (left-first, right-first) sweeps."""
    if genset is GenSet.WREATH:
        left = j_l
    else:
        # lighting the bulb at -j needs a visit to -j-1
        left = j_l + 1
    return 2 * left + i_m + abs(r - i_m), 2 * i_m + left + abs(r + left)


def _closed_form(genset: GenSet, m: int, l: int, i_m: int, j_l: int, r: int) -> tuple[int, Branch]:
    if genset is GenSet.AUTOMATA and l == 0:
        return i_m + abs(r - i_m), Branch.SINGLE_SIDE
    lf, rf = _branch_terms(genset, i_m, j_l, r)
    value = min(lf, rf)
    if genset is GenSet.WREATH:
        value += m + l
    if m == 0 or l == 0:
        branch = Branch.SINGLE_SIDE
    elif lf == rf:
        branch = Branch.BOTH
    else:
        branch = Branch.RIGHT_FIRST if rf < lf else Branch.LEFT_FIRST
    return value, branch


def wreath_length(e: GroupElement) -> LengthReport:
    value, branch = _closed_form(GenSet.WREATH, *_extremes(e.bulbs), e.cursor)
    return LengthReport(value, branch, GenSet.WREATH)


def automata_length(e: GroupElement) -> LengthReport:
    value, branch = _closed_form(GenSet.AUTOMATA, *_extremes(e.bulbs), e.cursor)
    return LengthReport(value, branch, GenSet.AUTOMATA)


def length(e: GroupElement, genset: GenSet | str) -> LengthReport:
    if GenSet(genset) is GenSet.WREATH:
        return wreath_length(e)
    return automata_length(e)


def length_value(e: GroupElement, genset: GenSet | str) -> int:
    return length(e, genset).value


def mask_length(mask: int, cursor: int, offset: int, genset: GenSet) -> int:
    """Closed-form length of the element whose bulb ``p`` is bit ``p + offset``.

    ``offset`` must be nonnegative.
    """
    right = mask >> (offset + 1)
    left = mask & ((1 << (offset + 1)) - 1)
    i_m = right.bit_length()
    j_l = offset - ((left & -left).bit_length() - 1) if left else 0
    value, _ = _closed_form(
        genset, right.bit_count(), left.bit_count(), i_m, j_l, cursor
    )
    return value


def distance(x: GroupElement, y: GroupElement, genset: GenSet | str) -> int:
    return length_value(multiply(invert(x), y), genset)


def trajectory(e: GroupElement, genset: GenSet | str) -> list[int]:
    """Cursor positions visited by the canonical geodesic, starting at 0.

    The sweep order follows the cheaper branch; ties go right-first.
    """
    genset = GenSet(genset)
    _, l, i_m, j_l = _extremes(e.bulbs)
    r = e.cursor
    if genset is GenSet.AUTOMATA and l == 0:
        waypoints = [0, i_m, r]
    else:
        lf, rf = _branch_terms(genset, i_m, j_l, r)
        left = -j_l if genset is GenSet.WREATH else -(j_l + 1)
        if rf <= lf:
            waypoints = [0, i_m, left, r]
        else:
            waypoints = [0, left, i_m, r]
    path = [0]
    for target in waypoints[1:]:
        here = path[-1]
        step = 1 if target > here else -1
        path.extend(range(here + step, target + step, step))
    return path


def build_geodesic(e: GroupElement, genset: GenSet | str) -> Word:
    """Canonical minimal-length word for ``e``.

    Each lit bulb is toggled on the first opportunity along :func:`trajectory`.
    """
    genset = GenSet(genset)
    path = trajectory(e, genset)
    lit = set(e.bulbs)
    done: set[int] = set()
    letters: list[Generator] = []
    if genset is GenSet.WREATH:
        for k, p in enumerate(path):
            if p in lit and p not in done:
                letters.append(Generator.A)
                done.add(p)
            if k + 1 < len(path):
                letters.append(Generator.T if path[k + 1] > p else Generator.T_INV)
    else:
        # a step between n-1 and n can toggle bulb n
        for p, q in zip(path, path[1:]):
            site = max(p, q)
            toggle = site in lit and site not in done
            if toggle:
                done.add(site)
            if q > p:
                letters.append(Generator.TA if toggle else Generator.T)
            else:
                letters.append(Generator.TA_INV if toggle else Generator.T_INV)
    return Word(tuple(letters), genset)


def doubly_visited(e: GroupElement, genset: GenSet | str) -> int:
    """Number of bulb sites whose toggle can be placed on two different visits.

    Automata set: bulb n is toggled while crossing between n-1 and n, so a site
    counts when that crossing happens at least twice. Wreath set: only lit
    bulbs carry a choice (an unlit bulb toggled twice costs two extra letters),
    counted when the cursor stands there at least twice.
    """
    genset = GenSet(genset)
    path = trajectory(e, genset)
    visits: dict[int, int] = {}
    if genset is GenSet.WREATH:
        for p in path:
            visits[p] = visits.get(p, 0) + 1
        return sum(1 for p in e.bulbs if visits.get(p, 0) >= 2)
    for p, q in zip(path, path[1:]):
        site = max(p, q)
        visits[site] = visits.get(site, 0) + 1
    return sum(1 for c in visits.values() if c >= 2)


def count_geodesics(
    e: GroupElement, genset: GenSet | str, budget: int = DEFAULT_COUNT_BUDGET
) -> GeodesicCountReport:
    """Exact number of geodesic words for ``e``.

    Walks from the identity, only stepping to neighbours one unit closer to
    ``e`` (closed-form distance), memoized per state.
    """
    genset = GenSet(genset)
    n = length_value(e, genset)
    if n > budget:
        raise BudgetExceededError(f"length {n} exceeds geodesic-count budget {budget}")
    offset = n + 2 + max((abs(p) for p in e.bulbs), default=0)
    target = e.to_mask(offset)
    target_cursor = e.cursor
    letters = genset.letters
    memo: dict[tuple[int, int], int] = {}

    def remaining(mask: int, cursor: int) -> int:
        # |x^-1 e|: bulbs of x xor e, seen from x's cursor
        return mask_length(mask ^ target, target_cursor - cursor, offset + cursor, genset)

    def count(mask: int, cursor: int, left: int) -> int:
        if left == 0:
            return 1
        key = (mask, cursor)
        if key in memo:
            return memo[key]
        total = 0
        for g in letters:
            m2, c2 = step_mask(g, mask, cursor, offset)
            if remaining(m2, c2) == left - 1:
                total += count(m2, c2, left - 1)
        memo[key] = total
        return total

    return GeodesicCountReport(count(0, 0, n), doubly_visited(e, genset), e.cursor == 0)


def check_left_light(word: Word) -> bool:
    """Whether every lit bulb n of the result had the cursor at n-1 at some prefix."""
    if word.genset is not GenSet.AUTOMATA:
        raise ValueError("check_left_light needs a word over the automata generating set")
    states = prefix_states(word)
    cursors = {s.cursor for s in states}
    return all(n - 1 in cursors for n in states[-1].bulbs)

"""Exhaustive breadth-first search over the Cayley graphs.

The ball tables here are ground truth for the closed-form lengths: distances
and shortest-path counts come from plain layered BFS, never from a formula.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Iterator, TextIO

from .core import GenSet, GroupElement, step_mask
from .metrics import length_value, mask_length

MAX_RADIUS_ENV = "LAMPLIGHTER_MAX_RADIUS"
DEFAULT_MAX_RADIUS = {GenSet.WREATH: 14, GenSet.AUTOMATA: 14}


class ResourceLimitError(RuntimeError):
    pass


class OutOfBallError(LookupError):
    pass


def max_radius(genset: GenSet) -> int:
    env = os.environ.get(MAX_RADIUS_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_RADIUS[genset]


@dataclass(frozen=True)
class EncodedElement:
    """Bit window over positions ``-(radius+1) .. radius+1`` plus the cursor."""

    window: int
    cursor: int
    radius: int

    @property
    def offset(self) -> int:
        return self.radius + 1

    @property
    def key(self) -> int:
        return (self.window << _cursor_bits(self.radius)) | (self.cursor + self.offset)

    @classmethod
    def encode(cls, e: GroupElement, radius: int) -> "EncodedElement":
        off = radius + 1
        if any(abs(p) > off for p in e.bulbs) or abs(e.cursor) > off:
            raise OutOfBallError(f"{e} does not fit the radius-{radius} window")
        return cls(e.to_mask(off), e.cursor, radius)

    @classmethod
    def from_key(cls, key: int, radius: int) -> "EncodedElement":
        bits = _cursor_bits(radius)
        return cls(key >> bits, (key & ((1 << bits) - 1)) - (radius + 1), radius)

    def decode(self) -> GroupElement:
        return GroupElement.from_mask(self.window, self.cursor, self.offset)


def _cursor_bits(radius: int) -> int:
    return (2 * radius + 2).bit_length()


@dataclass
class BallTable:
    genset: GenSet
    radius: int
    entries: dict[int, tuple[int, int]] = field(repr=False)
    spheres: list[int]

    def __len__(self) -> int:
        return len(self.entries)

    def _key(self, e: GroupElement) -> int:
        return EncodedElement.encode(e, self.radius).key

    def __contains__(self, e: GroupElement) -> bool:
        try:
            return self._key(e) in self.entries
        except OutOfBallError:
            return False

    def lookup(self, e: GroupElement) -> tuple[int, int]:
        """(distance, shortest-path count) of ``e``."""
        try:
            return self.entries[self._key(e)]
        except KeyError:
            raise OutOfBallError(f"{e} is not in the radius-{self.radius} ball") from None

    def elements(self) -> Iterator[tuple[GroupElement, int, int]]:
        """Yield ``(element, distance, path_count)`` in BFS order."""
        for key, (d, count) in self.entries.items():
            yield EncodedElement.from_key(key, self.radius).decode(), d, count


def build_ball(genset: GenSet | str, radius: int, limit: int | None = None) -> BallTable:
    """Layered BFS from the identity out to ``radius``."""
    genset = GenSet(genset)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    limit = max_radius(genset) if limit is None else limit
    if radius > limit:
        raise ResourceLimitError(
            f"radius {radius} exceeds the configured maximum {limit} "
            f"(set {MAX_RADIUS_ENV} to raise it)"
        )
    off = radius + 1
    bits = _cursor_bits(radius)
    low = (1 << bits) - 1
    letters = genset.letters

    start = off  # identity: empty window, cursor 0
    entries = {start: (0, 1)}
    layer = {start: 1}
    spheres = [1]
    for d in range(1, radius + 1):
        nxt: dict[int, int] = {}
        for key, paths in layer.items():
            mask, cursor = key >> bits, (key & low) - off
            for g in letters:
                m2, c2 = step_mask(g, mask, cursor, off)
                k2 = (m2 << bits) | (c2 + off)
                if k2 in entries:
                    continue
                nxt[k2] = nxt.get(k2, 0) + paths
        for key in sorted(nxt):
            entries[key] = (d, nxt[key])
        layer = nxt
        spheres.append(len(nxt))
    return BallTable(genset, radius, entries, spheres)


def oracle_length(ball: BallTable, e: GroupElement) -> int:
    return ball.lookup(e)[0]


def oracle_geodesic_count(ball: BallTable, e: GroupElement) -> int:
    return ball.lookup(e)[1]


def sphere_sizes(ball: BallTable) -> list[int]:
    return list(ball.spheres)


def write_sphere_csv(ball: BallTable, out: TextIO | None = None) -> str:
    """Write ``distance,size`` rows; returns the CSV text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["distance", "size"])
    for d, size in enumerate(ball.spheres):
        writer.writerow([d, size])
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def escape_depth(e: GroupElement, genset: GenSet | str) -> int:
    """Largest k such that no word of length <= k takes ``e`` farther out.

    BFS outward from ``e``; each visited element's length comes from the
    closed form. Stops at the first layer that contains a longer element,
    which always exists by distance ``2|e| + 1``.
    """
    genset = GenSet(genset)
    n = length_value(e, genset)
    reach = max([abs(p) for p in e.bulbs] + [abs(e.cursor)])
    off = reach + 2 * n + 3
    letters = genset.letters
    start = (e.to_mask(off), e.cursor)
    seen = {start}
    layer = [start]
    depth = 0
    while True:
        nxt = []
        for mask, cursor in layer:
            for g in letters:
                y = step_mask(g, mask, cursor, off)
                if y in seen:
                    continue
                if mask_length(y[0], y[1], off, genset) > n:
                    return depth
                seen.add(y)
                nxt.append(y)
        depth += 1
        layer = nxt


def bfs_distance(x: GroupElement, y: GroupElement, genset: GenSet | str, max_distance: int = 64) -> int:
    """Word distance by bidirectional BFS, independent of any formula."""
    genset = GenSet(genset)
    if x == y:
        return 0
    reach = max([abs(p) for p in x.bulbs + y.bulbs] + [abs(x.cursor), abs(y.cursor)])
    off = reach + max_distance + 2
    letters = genset.letters
    a = (x.to_mask(off), x.cursor)
    b = (y.to_mask(off), y.cursor)
    dist_a, dist_b = {a: 0}, {b: 0}
    front_a, front_b = [a], [b]
    da = db = 0
    while da + db < max_distance:
        # grow the smaller frontier
        if len(front_a) <= len(front_b):
            front, dist, other, da = front_a, dist_a, dist_b, da + 1
            level = da
        else:
            front, dist, other, db = front_b, dist_b, dist_a, db + 1
            level = db
        nxt = []
        best = None
        for mask, cursor in front:
            for g in letters:
                s = step_mask(g, mask, cursor, off)
                if s in dist:
                    continue
                dist[s] = level
                nxt.append(s)
                if s in other:
                    total = level + other[s]
                    best = total if best is None else min(best, total)
        if best is not None:
            return best
        if front is front_a:
            front_a = nxt
        else:
            front_b = nxt
    raise ResourceLimitError(f"no path of length <= {max_distance} between {x} and {y}")

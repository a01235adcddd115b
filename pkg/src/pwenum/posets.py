"""Partial orders on coordinate positions 1..n, and level structures.

Positions are 1-based to match codeword coordinates.  A poset stores its
declared cover pairs plus the full down-set of every position, so ideal
closures and position weights reduce to set unions and cardinalities.

A LevelStructure is just an ordered partition of the coordinates into
contiguous blocks; it carries no order by itself.  level_partition() reads
one off a hierarchical poset.
"""

from __future__ import annotations

from dataclasses import dataclass


class Poset:
    """Partial order over positions 1..n given by cover pairs (lower, upper)."""

    __slots__ = ("n", "covers", "down")

    def __init__(self, n: int, covers=()):
        if n < 1:
            raise ValueError(f"poset size must be positive, got {n}")
        covers = tuple((int(a), int(b)) for a, b in covers)
        for a, b in covers:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"cover pair ({a}, {b}) out of range 1..{n}")
            if a == b:
                raise ValueError(f"cover pair ({a}, {a}) relates a position to itself")
        below = {p: set() for p in range(1, n + 1)}
        for a, b in covers:
            below[b].add(a)
        down: dict[int, frozenset[int]] = {}
        state = dict.fromkeys(range(1, n + 1), 0)  # 0 new, 1 active, 2 done
        for root in range(1, n + 1):
            if state[root]:
                continue
            stack = [(root, iter(below[root]))]
            state[root] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for child in it:
                    if state[child] == 1:
                        raise ValueError("cover relation contains a cycle")
                    if state[child] == 0:
                        state[child] = 1
                        stack.append((child, iter(below[child])))
                        advanced = True
                        break
                if not advanced:
                    acc = {node}
                    for child in below[node]:
                        acc |= down[child]
                    down[node] = frozenset(acc)
                    state[node] = 2
                    stack.pop()
        self.n = n
        self.covers = covers
        self.down = down

    def ideal_closure(self, positions) -> frozenset[int]:
        """Smallest ideal containing the given positions (union of down-sets)."""
        out: set[int] = set()
        for p in positions:
            if not 1 <= p <= self.n:
                raise ValueError(f"position {p} out of range 1..{self.n}")
            out |= self.down[p]
        return frozenset(out)

    def weight(self, v) -> int:
        """Size of the smallest ideal containing the support of v."""
        if len(v) != self.n:
            raise ValueError(f"word length {len(v)} does not match poset size {self.n}")
        return len(self.ideal_closure(i + 1 for i, x in enumerate(v) if x))

    def dual(self) -> Poset:
        """Same positions with the order reversed."""
        return Poset(self.n, tuple((b, a) for a, b in self.covers))

    def leq(self, a: int, b: int) -> bool:
        return a in self.down[b]

    def _relation(self):
        return tuple(sorted((a, b) for b in self.down for a in self.down[b]))

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self.down == other.down

    def __hash__(self):
        return hash((self.n, self._relation()))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.covers)})"


def antichain(n: int) -> Poset:
    return Poset(n)


def chain(n: int) -> Poset:
    return Poset(n, tuple((i, i + 1) for i in range(1, n)))


def leveled(sizes) -> Poset:
    """Hierarchical poset: every position of a level below all of the next."""
    levels = LevelStructure(sizes)
    covers = []
    bounds = levels.bounds()
    for (lo1, hi1), (lo2, hi2) in zip(bounds, bounds[1:]):
        covers.extend((a, b) for a in range(lo1, hi1 + 1) for b in range(lo2, hi2 + 1))
    return Poset(levels.n, covers)


def from_covers(n: int, pairs) -> Poset:
    return Poset(n, pairs)


def poset_from_json_obj(obj: dict) -> Poset:
    """Build from a JSON description such as {"kind": "chain", "n": 3}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("poset description must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "antichain":
        return antichain(obj["n"])
    if kind == "chain":
        return chain(obj["n"])
    if kind == "leveled":
        return leveled(obj["levels"])
    if kind == "cover":
        return from_covers(obj["n"], obj["covers"])
    raise ValueError(f"unknown poset kind {kind!r}")


@dataclass(frozen=True)
class LevelStructure:
    """Ordered partition of coordinates 1..n into contiguous blocks."""

    sizes: tuple[int, ...]

    def __init__(self, sizes):
        sizes = tuple(int(s) for s in sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError(f"level sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def count(self) -> int:
        return len(self.sizes)

    def bounds(self) -> list[tuple[int, int]]:
        """1-based inclusive (first, last) position per level."""
        out, start = [], 1
        for s in self.sizes:
            out.append((start, start + s - 1))
            start += s
        return out

    def level_of(self, position: int) -> int:
        """1-based level of a 1-based position."""
        for i, (lo, hi) in enumerate(self.bounds(), start=1):
            if lo <= position <= hi:
                return i
        raise ValueError(f"position {position} out of range 1..{self.n}")


def level_partition(obj) -> LevelStructure:
    """Level sizes of a hierarchical poset (or pass a LevelStructure through).

    The levels are the height classes; the poset must relate every position
    of one level to every position of the next, and each level must occupy
    a contiguous block of coordinates.
    """
    if isinstance(obj, LevelStructure):
        return obj
    poset: Poset = obj
    heights = {}
    for p in sorted(range(1, poset.n + 1), key=lambda x: len(poset.down[x])):
        strictly_below = poset.down[p] - {p}
        heights[p] = 1 + max((heights[x] for x in strictly_below), default=-1)
    top = max(heights.values())
    levels = [sorted(p for p, h in heights.items() if h == i) for i in range(top + 1)]
    for lower, upper in zip(levels, levels[1:]):
        for a in lower:
            for b in upper:
                if not poset.leq(a, b):
                    raise ValueError(
                        f"positions {a} and {b} sit in adjacent levels but are "
                        "incomparable; the poset is not hierarchical"
                    )
    for block in levels:
        if block[-1] - block[0] + 1 != len(block):
            raise ValueError(
                f"level positions {block} are not a contiguous coordinate block"
            )
    return LevelStructure(len(block) for block in levels)

"""Linear codes over a RingSpec, stored as explicit codeword sets.

Codes are built by spanning generators or by exhaustively scanning the
ambient space for the dual; both are exact and capped so a typo cannot
demand 4^30 codewords.  Codewords are tuples of element indices in
lexicographic order.
"""

from __future__ import annotations

import os
from itertools import product

from .errors import CapExceededError
from .posets import LevelStructure
from .rings import RingSpec

DEFAULT_CAP = 2**24


def enumeration_cap() -> int:
    """Default cap, overridable through the PWE_CAP environment variable."""
    raw = os.environ.get("PWE_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"PWE_CAP must be positive, got {cap}")
    return cap


class LinearCode:
    """A submodule of R^n with its generator list and full codeword set."""

    __slots__ = ("ring", "n", "generators", "words", "word_set")

    def __init__(self, ring: RingSpec, n: int, generators, words):
        self.ring = ring
        self.n = n
        self.generators = tuple(tuple(g) for g in generators)
        self.words = tuple(tuple(w) for w in words)
        self.word_set = frozenset(self.words)

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, word):
        return tuple(word) in self.word_set

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.ring == other.ring and self.n == other.n and self.word_set == other.word_set

    def __hash__(self):
        return hash((self.n, self.words))

    def __repr__(self):
        return f"LinearCode(n={self.n}, size={self.size}, over {self.ring!r})"

    def to_json_obj(self) -> dict:
        return {"length": self.n, "generators": [list(g) for g in self.generators]}


def _check_word(ring, n, w):
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"word length {len(w)} does not match code length {n}")
    for x in w:
        if not isinstance(x, int) or not 0 <= x < ring.q:
            raise ValueError(f"entry {x!r} is not an element index of {ring!r}")
    return w


def span(ring: RingSpec, n: int, generators, cap: int | None = None) -> LinearCode:
    """All R-linear combinations of the generators."""
    if cap is None:
        cap = enumeration_cap()
    gens = [_check_word(ring, n, g) for g in generators]
    if ring.q ** len(gens) > cap:
        raise CapExceededError(
            f"spanning {len(gens)} generators over q={ring.q} exceeds cap {cap}"
        )
    add, mul = ring.add_table, ring.mul_table
    words = {(0,) * n}
    for g in gens:
        scaled = [tuple(mul[r][x] for x in g) for r in range(ring.q)]
        words = {
            tuple(add[a][b] for a, b in zip(w, sg)) for w in words for sg in scaled
        }
    return LinearCode(ring, n, gens, sorted(words))


def inner_product(ring: RingSpec, u, v) -> int:
    """Coordinatewise product summed in the ring."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    add, mul = ring.add_table, ring.mul_table
    acc = 0
    for a, b in zip(u, v):
        acc = add[acc][mul[a][b]]
    return acc


def _greedy_generators(ring, words):
    """A small generating subset of an already-linear codeword set."""
    n = len(words[0]) if words else 0
    add, mul = ring.add_table, ring.mul_table
    spanned = {(0,) * n}
    gens = []
    for w in words:
        if w in spanned:
            continue
        gens.append(w)
        scaled = [tuple(mul[r][x] for x in w) for r in range(ring.q)]
        spanned = {
            tuple(add[a][b] for a, b in zip(s, sg)) for s in spanned for sg in scaled
        }
    return gens


def dual_code(code: LinearCode, cap: int | None = None) -> LinearCode:
    """Every word orthogonal to the code, by exhaustive scan of R^n.

    Checking the generators suffices: orthogonality to them is linear in
    the codeword.  The result stores a greedily-reduced generator list so
    that dualizing twice stays cheap.
    """
    if cap is None:
        cap = enumeration_cap()
    ring, n = code.ring, code.n
    if ring.q**n > cap:
        raise CapExceededError(f"scanning q^n = {ring.q}^{n} exceeds cap {cap}")
    add, mul = ring.add_table, ring.mul_table
    gen_rows = [[mul[x] for x in g] for g in code.generators]
    dual_words = []
    for v in product(range(ring.q), repeat=n):
        for rows in gen_rows:
            acc = 0
            for row, x in zip(rows, v):
                acc = add[acc][row[x]]
            if acc:
                break
        else:
            dual_words.append(v)
    return LinearCode(ring, n, _greedy_generators(ring, dual_words), dual_words)


def level_split(v, levels: LevelStructure):
    """Cut a word into its per-level blocks."""
    v = tuple(v)
    if len(v) != levels.n:
        raise ValueError(
            f"word length {len(v)} does not match level structure size {levels.n}"
        )
    out, start = [], 0
    for s in levels.sizes:
        out.append(v[start : start + s])
        start += s
    return tuple(out)

"""Finite commutative Frobenius rings as explicit index tables.

A ring of size q lives on element indices 0..q-1, with index 0 the additive
identity and index 1 the multiplicative identity.  Four constructions are
supported:

    Zm    integers modulo m
    GF    Galois field GF(p^k) with a supplied irreducible modulus
    F2u   F2[u]/(u^2), elements {0, 1, u, 1+u}
    F2v   F2[v]/(v^2 - v), elements {0, 1, v, 1+v}

Every ring carries a catalog additive character whose kernel contains no
nonzero ideal; that property is re-verified on construction because all the
dual-code identities downstream depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, root_power

MAX_RING_SIZE = 64

RING_KINDS = ("Zm", "GF", "F2u", "F2v")


class RingSpec:
    """A finite commutative ring given by total operation tables.

    Not constructed directly; use make_ring().  Immutable after
    construction; all tables are tuples of tuples indexed by element index.
    """

    def __init__(self, kind, q, add_table, mul_table, names, params):
        self.kind = kind
        self.q = q
        self.add_table = add_table
        self.mul_table = mul_table
        self.names = names
        self.params = dict(params)
        neg = [None] * q
        for a in range(q):
            for b in range(q):
                if add_table[a][b] == 0:
                    neg[a] = b
                    break
        if any(n is None for n in neg):
            raise ValueError("addition table has an element without an inverse")
        self.neg_table = tuple(neg)
        self.exponent = self._order_of_one()
        _verify_tables(self)

    def _order_of_one(self):
        acc, e = 1, 1
        while acc != 0:
            acc = self.add_table[acc][1]
            e += 1
            if e > self.q:
                raise ValueError("additive order of 1 exceeds the ring size")
        return e

    def _check_index(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"element index {a!r} out of range 0..{self.q - 1}")

    def add(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        self._check_index(a)
        self._check_index(b)
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        self._check_index(a)
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def element_name(self, a: int) -> str:
        self._check_index(a)
        return self.names[a]

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, **self.params}

    def __eq__(self, other):
        if not isinstance(other, RingSpec):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.q == other.q
            and self.add_table == other.add_table
            and self.mul_table == other.mul_table
        )

    def __hash__(self):
        return hash((self.kind, self.q))

    def __repr__(self):
        return f"RingSpec({self.kind}, q={self.q})"


def _verify_tables(ring):
    """Exhaustive axiom check; cheap at the q <= 64 scale this package allows."""
    q, add, mul = ring.q, ring.add_table, ring.mul_table
    rng = range(q)
    for a in rng:
        if add[0][a] != a or add[a][0] != a:
            raise ValueError("index 0 is not the additive identity")
        if mul[1][a] != a or mul[a][1] != a:
            raise ValueError("index 1 is not the multiplicative identity")
        for b in rng:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise ValueError("operation tables are not commutative")
    for a in rng:
        add_a, mul_a = add[a], mul[a]
        for b in rng:
            ab_add, ab_mul = add_a[b], mul_a[b]
            add_row, mul_row = add[ab_add], mul[ab_mul]
            add_b, mul_b = add[b], mul[b]
            for c in rng:
                if add_row[c] != add_a[add_b[c]]:
                    raise ValueError("addition is not associative")
                if mul_row[c] != mul_a[mul_b[c]]:
                    raise ValueError("multiplication is not associative")
                if mul_a[add_b[c]] != add[ab_mul][mul_a[c]]:
                    raise ValueError("multiplication does not distribute")
    e = ring.exponent
    if ring.q % e != 0:
        raise ValueError("additive exponent does not divide the ring size")
    for a in rng:
        acc = 0
        for _ in range(e):
            acc = add[acc][a]
        if acc != 0:
            raise ValueError("additive exponent does not annihilate the ring")


def _is_prime(p):
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _gf_poly_mod(poly, modulus, p):
    """Reduce a coefficient list modulo a monic modulus, over GF(p)."""
    poly = list(poly)
    k = len(modulus) - 1
    for i in range(len(poly) - 1, k - 1, -1):
        c = poly[i] % p
        if c:
            for j in range(k + 1):
                poly[i - k + j] = (poly[i - k + j] - c * modulus[j]) % p
    return [c % p for c in poly[:k]]


def _gf_is_irreducible(modulus, p, k):
    """Trial division by every monic polynomial of degree 1..k//2."""
    from itertools import product as iproduct

    for d in range(1, k // 2 + 1):
        for tail in iproduct(range(p), repeat=d):
            den = list(tail) + [1]
            rem = list(modulus)
            for i in range(len(rem) - 1, d - 1, -1):
                c = rem[i] % p
                if c:
                    for j in range(d + 1):
                        rem[i - d + j] = (rem[i - d + j] - c * den[j]) % p
            if not any(c % p for c in rem[:d]):
                return False
    return True


def _gf_name(coeffs):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            var = "a" if i == 1 else f"a^{i}"
            parts.append(var if c == 1 else f"{c}{var}")
    return "+".join(parts) if parts else "0"


def _make_zm(m):
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    add = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
    mul = tuple(tuple((a * b) % m for b in range(m)) for a in range(m))
    names = tuple(str(a) for a in range(m))
    return RingSpec("Zm", m, add, mul, names, {"m": m})


def _make_gf(p, k, modulus):
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    q = p**k
    if q > MAX_RING_SIZE:
        raise ValueError(f"ring size {q} exceeds the cap {MAX_RING_SIZE}")
    if modulus is None or len(modulus) != k + 1:
        raise ValueError(f"modulus must have {k + 1} coefficients, low to high")
    lead = modulus[-1] % p
    if lead == 0:
        raise ValueError("modulus leading coefficient vanishes mod p")
    inv_lead = pow(lead, p - 2, p) if lead != 1 else 1
    modulus = [c * inv_lead % p for c in modulus]
    if not _gf_is_irreducible(modulus, p, k):
        raise ValueError("modulus is reducible over GF(p)")

    def to_poly(i):
        out = []
        for _ in range(k):
            out.append(i % p)
            i //= p
        return out

    def to_index(poly):
        i = 0
        for c in reversed(poly):
            i = i * p + c
        return i

    polys = [to_poly(i) for i in range(q)]
    add = tuple(
        tuple(to_index([(x + y) % p for x, y in zip(polys[a], polys[b])]) for b in range(q))
        for a in range(q)
    )
    mul_rows = []
    for a in range(q):
        row = []
        for b in range(q):
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(polys[a]):
                if x:
                    for j, y in enumerate(polys[b]):
                        conv[i + j] += x * y
            red = _gf_poly_mod(conv, modulus, p)
            red.extend([0] * (k - len(red)))
            row.append(to_index(red))
        mul_rows.append(tuple(row))
    names = tuple(_gf_name(polys[a]) for a in range(q))
    return RingSpec(
        "GF", q, add, tuple(mul_rows), names, {"p": p, "k": k, "modulus": list(modulus)}
    )


def _make_f2_ext(square_of_gen, tag, gen_name):
    # elements a + b*g encoded as index a + 2b; g^2 is 0 (F2u) or g (F2v)
    def mul_pair(x, y):
        a, b = x & 1, x >> 1
        c, d = y & 1, y >> 1
        const = a * c
        lin = a * d + b * c
        if square_of_gen:  # g^2 = g
            lin += b * d
        return (const % 2) | ((lin % 2) << 1)

    add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
    mul = tuple(tuple(mul_pair(a, b) for b in range(4)) for a in range(4))
    names = ("0", "1", gen_name, f"1+{gen_name}")
    return RingSpec(tag, 4, add, mul, names, {})


def make_ring(kind: str, **params) -> RingSpec:
    """Build a catalog ring.

    Zm needs m; GF needs p, k and a modulus coefficient list (low to high);
    F2u and F2v take no parameters.
    """
    if kind == "Zm":
        m = params.pop("m")
        _reject_extra(params)
        if m > MAX_RING_SIZE:
            raise ValueError(f"ring size {m} exceeds the cap {MAX_RING_SIZE}")
        return _make_zm(m)
    if kind == "GF":
        p, k = params.pop("p"), params.pop("k")
        modulus = params.pop("modulus", None)
        _reject_extra(params)
        return _make_gf(p, k, modulus)
    if kind == "F2u":
        _reject_extra(params)
        return _make_f2_ext(False, "F2u", "u")
    if kind == "F2v":
        _reject_extra(params)
        return _make_f2_ext(True, "F2v", "v")
    raise ValueError(f"unknown ring kind {kind!r}; expected one of {RING_KINDS}")


def _reject_extra(params):
    if params:
        raise ValueError(f"unexpected ring parameters: {sorted(params)}")


def ring_from_json_obj(obj: dict) -> RingSpec:
    """Construct a ring from its JSON description, e.g. {"kind": "Zm", "m": 4}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("ring description must be an object with a 'kind' field")
    obj = dict(obj)
    return make_ring(obj.pop("kind"), **obj)


@dataclass(frozen=True)
class Character:
    """Additive character a -> zeta_e^{eps(a)}, e the additive exponent."""

    ring: RingSpec
    exponents: tuple[int, ...]

    def value(self, a: int) -> CycInt:
        return root_power(self.ring.exponent, self.exponents[a])


def default_character(ring: RingSpec) -> Character:
    """The catalog character of a ring, verified to be generating.

    Zm maps a to zeta_m^a; GF(p^k) maps a to zeta_p^{Tr(a)} via the absolute
    trace; the two four-element extensions of F2 read off the coefficient of
    the generator.
    """
    q = ring.q
    if ring.kind == "Zm":
        eps = tuple(range(q))
    elif ring.kind == "GF":
        p, k = ring.params["p"], ring.params["k"]
        mul = ring.mul_table
        eps = []
        for a in range(q):
            term, tr = a, a
            for _ in range(k - 1):
                nxt = term
                for _ in range(p - 1):
                    nxt = mul[nxt][term]
                term = nxt
                tr = ring.add_table[tr][term]
            if tr >= p:
                raise ValueError("trace landed outside the prime subfield")
            eps.append(tr)
        eps = tuple(eps)
    elif ring.kind in ("F2u", "F2v"):
        eps = (0, 0, 1, 1)
    else:
        raise ValueError(f"no catalog character for ring kind {ring.kind!r}")
    chi = Character(ring, eps)
    if not verify_generating_character(ring, chi):
        raise ValueError("catalog character failed the generating test")
    return chi


def verify_generating_character(ring: RingSpec, chi: Character) -> bool:
    """True iff no nonzero ideal sits inside the kernel of chi.

    It is enough to test principal ideals: every nonzero ideal contains a
    nonzero principal one.  Raises if the exponent map is not an additive
    character at all.
    """
    q, e = ring.q, ring.exponent
    eps = chi.exponents
    if len(eps) != q or eps[0] != 0 or any(not 0 <= x < e for x in eps):
        raise ValueError("exponent map is malformed")
    add = ring.add_table
    for a in range(q):
        row = add[a]
        for b in range(q):
            if (eps[a] + eps[b]) % e != eps[row[b]]:
                raise ValueError("exponent map violates additivity")
    mul = ring.mul_table
    for a in range(1, q):
        if all(eps[mul[r][a]] == 0 for r in range(q)):
            return False
    return True


def enumerate_ideals(ring: RingSpec) -> list[frozenset[int]]:
    """All ideals, as the closure of the principal ideals under ideal sum."""
    q, mul, add = ring.q, ring.mul_table, ring.add_table
    ideals = {frozenset(mul[r][a] for r in range(q)) for a in range(q)}
    changed = True
    while changed:
        changed = False
        current = list(ideals)
        for i, left in enumerate(current):
            for right in current[i:]:
                total = frozenset(add[x][y] for x in left for y in right)
                if total not in ideals:
                    ideals.add(total)
                    changed = True
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def _is_ideal(ring, subset):
    if 0 not in subset:
        return False
    add, mul = ring.add_table, ring.mul_table
    for a in subset:
        for b in subset:
            if add[a][b] not in subset:
                return False
        for r in range(ring.q):
            if mul[r][a] not in subset:
                return False
    return True


def character_ideal_sum(ring: RingSpec, chi: Character, ideal) -> CycInt:
    """Exact value of the character summed over an ideal.

    For a generating character this is 1 on the zero ideal and 0 on every
    larger one; the sum with the zero element removed is then -1.
    """
    ideal = frozenset(ideal)
    if not _is_ideal(ring, ideal):
        raise ValueError("subset is not an ideal")
    e = ring.exponent
    counts = [0] * e
    for a in ideal:
        counts[chi.exponents[a]] += 1
    return CycInt(e, counts)

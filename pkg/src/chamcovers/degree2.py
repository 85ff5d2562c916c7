"""Degree-two covers: weakly periodic bit vectors and their orbit census.

Over the two-element group, vectors fixed by the n-th hyperbolic power are
exactly the weakly n-periodic ones (h_{k+n} - h_k = h_n for all k), and each
is determined by its first n entries b = (h_1, ..., h_n) with b != 0.  The
whole bi-infinite vector follows from the closed form
h_{q*n+r} = h_r + q * h_n (indices taken over the integers, h_0 = 0), which
also makes every such vector fully 2n-periodic.  W_n is the set of these bit
tuples; W_n* keeps those whose minimal weak period is exactly n.

The parabolic letters act on bit tuples in closed form, so censuses never
need the general vector machinery (tests cross-check the two routes).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .groups import parse_group
from .vectors import EpVector, normalize

_Z2 = parse_group("Z2")

DEFAULT_ENUM_BOUND = 20
DEFAULT_CENSUS_BOUND = 16


@dataclass(frozen=True)
class WnElement:
    """A weakly n-periodic degree-two cover, keyed by bits (h_1, ..., h_n)."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.bits) != self.n:
            raise ValueError("bits must have length n >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")
        if not any(self.bits):
            raise ValueError("the zero tuple does not generate the group")

    def bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)


def _entry(bits: tuple[int, ...], j: int) -> int:
    """Entry j of the weakly n-periodic extension of bits, any integer j."""
    n = len(bits)
    q, r = divmod(j, n)
    base = 0 if r == 0 else bits[r - 1]
    return (base + q * bits[n - 1]) % 2


def expand(e: WnElement) -> EpVector:
    """The normalized vector of e: right period (h_1..h_2n), left (h_-1..h_-2n)."""
    n = e.n
    right = tuple(_Z2.elem(_entry(e.bits, j)) for j in range(1, 2 * n + 1))
    left = tuple(_Z2.elem(_entry(e.bits, -j)) for j in range(1, 2 * n + 1))
    return normalize(EpVector(_Z2, (), right, (), left))


def is_weakly_n_periodic(h: EpVector, n: int) -> bool:
    """Does h_{k+n} - h_k = h_n hold for every integer k?  (|G| must be 2.)"""
    if h.group.order != 2:
        raise ValueError("weak periodicity is defined over two-element groups")
    if n < 1:
        raise ValueError("n must be >= 1")
    h = normalize(h)
    zero = h.group.zero()
    ent = lambda k: zero if k == 0 else h.entry(k)
    span = max(len(h.right_prefix), len(h.left_prefix))
    span += 2 * max(len(h.right_period), len(h.left_period)) + 2 * n
    step = ent(n)
    return all(ent(k + n) - ent(k) == step for k in range(-span, span + 1))


def enumerate_wn(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[WnElement]:
    """All of W_n in lexicographic bit order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {bound}")
    return [
        WnElement(n, bits)
        for bits in itertools.product((0, 1), repeat=n)
        if any(bits)
    ]


def _min_weak_period(e: WnElement) -> int:
    """The least divisor m of n such that e's expansion is weakly m-periodic."""
    n = e.n
    values = [_entry(e.bits, j) for j in range(0, 2 * n + n + 1)]
    for m in range(1, n + 1):
        if n % m != 0:
            continue
        step = values[m]
        # Full 2n-periodicity reduces the all-k check to one 2n-window.
        if all((values[k + m] - values[k]) % 2 == step for k in range(2 * n)):
            return m
    return n


def enumerate_wn_star(n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[WnElement]:
    """Members of W_n whose minimal weak period is exactly n, in bit order."""
    return [e for e in enumerate_wn(n, bound) if _min_weak_period(e) == n]


@lru_cache(maxsize=None)
def _wn_star_count(n: int) -> int:
    total = 2**n - 1
    for m in range(1, n):
        if n % m == 0:
            total -= _wn_star_count(m)
    return total


def p1_bits(bits: tuple[int, ...]) -> tuple[int, ...]:
    """The P1 move on bit tuples: reverse below n and shear by h_n."""
    n = len(bits)
    hn = bits[n - 1]
    out = []
    for k in range(1, n):
        out.append((_entry(bits, n - k) + hn) % 2)
    out.append(hn)
    return tuple(out)


def p2_bits(bits: tuple[int, ...]) -> tuple[int, ...]:
    """The P2 move on bit tuples, via h'_k = h_{-1} + h_{-k-1}."""
    n = len(bits)
    hm1 = _entry(bits, -1)
    return tuple((hm1 + _entry(bits, -k - 1)) % 2 for k in range(1, n + 1))


def _orbit_of(bits: tuple[int, ...]) -> frozenset:
    seen = {bits}
    frontier = [bits]
    while frontier:
        nxt = []
        for b in frontier:
            for img in (p1_bits(b), p2_bits(b)):
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return frozenset(seen)


def count_closed_forms(n: int) -> dict:
    """Closed-form counts for W_n: census sizes and fixed-point counts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        striezel = 3 * 2 ** (n // 2 - 1) - 1
    else:
        striezel = 2 ** ((n + 1) // 2) - 1
    return {
        "wn_star": _wn_star_count(n),
        "fixed_p1": 2 ** ((n + 1) // 2) - 1,
        "fixed_p2": 2 ** (n // 2 + 1) - 1,
        "fixed_both": 1,
        "striezel_wn": striezel,
    }


def orbit_census(n: int, bound: int = DEFAULT_CENSUS_BOUND) -> dict:
    """Orbit decomposition of W_n* under the two parabolic moves.

    Orbits are sorted by their least member; each carries its size, its shape
    ("Striezel" when some member has a parabolic loop, else "Kranz"), and its
    members as bitstrings in lexicographic order.
    """
    if n > bound:
        raise ValueError(f"n={n} exceeds the census bound {bound}")
    star = {e.bits for e in enumerate_wn_star(n)}
    remaining = set(star)
    orbits = []
    while remaining:
        seed = min(remaining)
        orb = _orbit_of(seed)
        if not orb <= star:
            raise RuntimeError(
                "internal error: an orbit left W_n*, which is move-invariant"
            )
        remaining -= orb
        has_loop = any(p1_bits(b) == b or p2_bits(b) == b for b in orb)
        orbits.append(
            {
                "size": len(orb),
                "type": "Striezel" if has_loop else "Kranz",
                "members": ["".join(map(str, b)) for b in sorted(orb)],
            }
        )
    orbits.sort(key=lambda o: o["members"][0])
    return {
        "n": n,
        "wn_star": len(star),
        "striezel": sum(1 for o in orbits if o["type"] == "Striezel"),
        "kranz": sum(1 for o in orbits if o["type"] == "Kranz"),
        "orbits": orbits,
    }


def striezel_orbits(n: int) -> int:
    return orbit_census(n)["striezel"]


def kranz_orbits(n: int) -> int:
    return orbit_census(n)["kranz"]


def realize_rank(r: int) -> EpVector:
    """A vector whose projective symmetry group is free of rank exactly r.

    Returns the expansion of the least member of W_{r-1}* lying in an orbit
    with a parabolic loop; that orbit has r - 1 vertices, so the stabilizer
    is free of rank r.
    """
    if r < 2:
        raise ValueError("rank must be >= 2")
    n = r - 1
    for e in enumerate_wn_star(n):
        orb = _orbit_of(e.bits)
        if any(p1_bits(b) == b or p2_bits(b) == b for b in orb):
            return expand(e)
    raise RuntimeError(f"no loop-carrying orbit found in W_{n}*")

"""Eventually periodic bi-infinite vectors over a finite abelian group.

A vector assigns a group element h_k to every nonzero integer k (h_0 is
pinned to zero and never stored).  Each side is a finite prefix followed by a
repeating period; the left side is indexed outward, so left_prefix[0] is
h_{-1} and the left period repeats toward -infinity.  Entry k = 0 is not a
legal index for `entry`.

Serialization: ``L=<tail>;R=<tail>`` with ``tail := [word ["|"]] "(" word ")"``
and ``word := elem ("," elem)*``; an element is colon-joined residues.
Whitespace is forbidden.  Example: ``L=(0);R=1,1|(0)`` is the vector with
h_1 = h_2 = 1 and every other entry zero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .groups import FinAbGroup, GroupElem, automorphisms, parse_elem, span


class VectorParseError(ValueError):
    """Raised for a malformed vector spec string."""


@dataclass(frozen=True)
class EpVector:
    """One eventually periodic bi-infinite vector (not auto-normalized)."""

    group: FinAbGroup
    right_prefix: tuple[GroupElem, ...]
    right_period: tuple[GroupElem, ...]
    left_prefix: tuple[GroupElem, ...]
    left_period: tuple[GroupElem, ...]

    def __post_init__(self) -> None:
        if not self.right_period or not self.left_period:
            raise ValueError("periods must be nonempty")
        for word in (
            self.right_prefix,
            self.right_period,
            self.left_prefix,
            self.left_period,
        ):
            for e in word:
                if e.group != self.group:
                    raise ValueError("vector letter lives in a different group")

    def entry(self, k: int) -> GroupElem:
        """h_k for nonzero integer k."""
        if k == 0:
            raise ValueError("entry index 0 is pinned to zero and not stored")
        if k > 0:
            prefix, period = self.right_prefix, self.right_period
            pos = k
        else:
            prefix, period = self.left_prefix, self.left_period
            pos = -k
        if pos <= len(prefix):
            return prefix[pos - 1]
        return period[(pos - len(prefix) - 1) % len(period)]

    def letters(self) -> tuple[GroupElem, ...]:
        return (
            self.right_prefix + self.right_period + self.left_prefix + self.left_period
        )

    def key(self):
        """Total-order key: residue tuples of the four words."""
        return (
            tuple(e.residues for e in self.right_prefix),
            tuple(e.residues for e in self.right_period),
            tuple(e.residues for e in self.left_prefix),
            tuple(e.residues for e in self.left_period),
        )

    def __str__(self) -> str:
        return format_vector(self)


def _primitive_root(word: tuple[GroupElem, ...]) -> tuple[GroupElem, ...]:
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


def _absorb(prefix: list, period: list) -> tuple[list, list]:
    # Pull the tail of the prefix into the repeating part whenever the last
    # prefix letter matches the letter the period would place there.
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period.insert(0, period.pop())
    return prefix, period


def normalize(h: EpVector) -> EpVector:
    """The unique shortest representation of the same bi-infinite vector."""
    rper = list(_primitive_root(h.right_period))
    lper = list(_primitive_root(h.left_period))
    rpre, rper = _absorb(list(h.right_prefix), rper)
    lpre, lper = _absorb(list(h.left_prefix), lper)
    return EpVector(h.group, tuple(rpre), tuple(rper), tuple(lpre), tuple(lper))


def generates(h: EpVector) -> bool:
    """Do the letters of h generate the whole group?"""
    return span(h.group, set(h.letters())).index == 1


def is_periodic(h: EpVector) -> int | None:
    """Least p with h_{k+p} = h_k for every integer k, or None.

    Requires h normalized.  Full bi-infinite periodicity forces both prefixes
    to be empty; the only extra obstruction is the seam at zero (the shift by
    p must also map left entries onto right entries and h_{-p..} across h_0),
    which one window check around the origin decides.
    """
    if h.right_prefix or h.left_prefix:
        return None
    p = math.lcm(len(h.right_period), len(h.left_period))
    zero = h.group.zero()
    for k in range(-2 * p, 2 * p + 1):
        a = h.entry(k) if k != 0 else zero
        b = h.entry(k + p) if k + p != 0 else zero
        if a != b:
            return None
    return p


def apply_aut(phi, h: EpVector) -> EpVector:
    """Apply a group automorphism letterwise."""
    mapw = lambda w: tuple(phi(e) for e in w)
    return EpVector(
        h.group,
        mapw(h.right_prefix),
        mapw(h.right_period),
        mapw(h.left_prefix),
        mapw(h.left_period),
    )


@dataclass(frozen=True)
class VectorClass:
    """An orbit of vectors under letterwise group automorphisms.

    Stored as the lexicographically least normalized representative, so
    equality and hashing are representative equality.
    """

    representative: EpVector

    @property
    def group(self) -> FinAbGroup:
        return self.representative.group


def canonical_class(h: EpVector) -> VectorClass:
    """The automorphism class of h (requires generating letters)."""
    if not generates(h):
        raise ValueError("vector letters do not generate the group")
    best = None
    best_key = None
    for phi in automorphisms(h.group):
        img = normalize(apply_aut(phi, h))
        k = img.key()
        if best_key is None or k < best_key:
            best, best_key = img, k
    return VectorClass(best)


_TAIL_RE = re.compile(r"([0-9:,]*)(\|?)\(([0-9:,]*)\)")


def _parse_word(group: FinAbGroup, text: str, what: str) -> tuple[GroupElem, ...]:
    if text == "":
        return ()
    parts = text.split(",")
    try:
        return tuple(parse_elem(group, part) for part in parts)
    except ValueError as exc:
        raise VectorParseError(f"bad {what} in vector spec: {exc}") from exc


def _parse_tail(group: FinAbGroup, text: str, side: str):
    m = _TAIL_RE.fullmatch(text)
    if m is None:
        raise VectorParseError(f"malformed {side} tail: {text!r}")
    prefix_txt, _, period_txt = m.groups()
    if period_txt == "":
        raise VectorParseError(f"empty period in {side} tail: {text!r}")
    prefix = _parse_word(group, prefix_txt, f"{side} prefix")
    period = _parse_word(group, period_txt, f"{side} period")
    return prefix, period


def parse_vector(group: FinAbGroup, spec: str) -> EpVector:
    """Parse and normalize a vector spec like ``L=(0);R=1,1|(0)``."""
    m = re.fullmatch(r"L=([^;]*);R=(.*)", spec)
    if m is None:
        raise VectorParseError(f"malformed vector spec: {spec!r}")
    left_txt, right_txt = m.groups()
    lpre, lper = _parse_tail(group, left_txt, "left")
    rpre, rper = _parse_tail(group, right_txt, "right")
    return normalize(EpVector(group, rpre, rper, lpre, lper))


def _format_word(word: tuple[GroupElem, ...]) -> str:
    return ",".join(str(e) for e in word)


def _format_tail(prefix, period) -> str:
    if prefix:
        return f"{_format_word(prefix)}|({_format_word(period)})"
    return f"({_format_word(period)})"


def format_vector(h: EpVector) -> str:
    """Serialize h; parse_vector(group, format_vector(h)) == h when normalized."""
    return (
        f"L={_format_tail(h.left_prefix, h.left_period)};"
        f"R={_format_tail(h.right_prefix, h.right_period)}"
    )


def from_entries(group: FinAbGroup, entries: dict[int, GroupElem]) -> EpVector:
    """The normalized vector with the given nonzero-index entries, zero tails."""
    zero = group.zero()
    if 0 in entries:
        raise ValueError("index 0 is pinned to zero")
    hi = max((k for k in entries if k > 0), default=0)
    lo = max((-k for k in entries if k < 0), default=0)
    rpre = tuple(entries.get(k, zero) for k in range(1, hi + 1))
    lpre = tuple(entries.get(-k, zero) for k in range(1, lo + 1))
    return normalize(EpVector(group, rpre, (zero,), lpre, (zero,)))

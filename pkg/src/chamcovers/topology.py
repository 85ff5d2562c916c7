"""Topological ends of the covers encoded by eventually periodic vectors.

The number of ends equals the index of a subgroup G' generated by one
alternating sum over a window that contains both prefixes, together with all
pairwise differences of letters that repeat infinitely often on either side.
Over a two-element group the two possible outcomes split the covers into the
one-ended and two-ended homeomorphism types.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .groups import FinAbGroup, GroupElem, Subgroup, span
from .vectors import EpVector, from_entries, generates, normalize


class SurfaceKind(enum.Enum):
    LOCH_NESS = "LochNess"
    JACOBS_LADDER = "JacobsLadder"


@dataclass(frozen=True)
class EndsReport:
    """Accumulation data and the resulting end count for one vector."""

    right_acc: frozenset[GroupElem]
    left_acc: frozenset[GroupElem]
    n_window: int
    alt_sum: GroupElem
    g_prime: Subgroup
    ends: int
    d2_type: SurfaceKind | None


def accumulation_points(h: EpVector) -> tuple[frozenset, frozenset]:
    """Letters occurring infinitely often on the right and on the left."""
    h = normalize(h)
    return frozenset(h.right_period), frozenset(h.left_period)


def minimal_n(h: EpVector) -> int:
    """The least window bound N that clears both prefixes (always >= 1)."""
    h = normalize(h)
    return max(len(h.right_prefix), len(h.left_prefix)) + 1


def alt_sum(h: EpVector, n_window: int) -> GroupElem:
    """sum_{k=-N}^{N-1} (-1)^k h_k for N = n_window (h_0 contributes zero)."""
    total = h.group.zero()
    for k in range(-n_window, n_window):
        if k == 0:
            continue
        term = h.entry(k)
        total = total + (term if k % 2 == 0 else -term)
    return total


def end_subgroup(h: EpVector, n_window: int | None = None) -> Subgroup:
    """G': generated by the alternating sum and all accumulation differences.

    The result does not depend on n_window as long as it is at least
    minimal_n(h); passing a larger window is allowed (and tested).
    """
    h = normalize(h)
    if n_window is None:
        n_window = minimal_n(h)
    elif n_window < minimal_n(h):
        raise ValueError(
            f"window {n_window} does not clear the prefixes (need >= {minimal_n(h)})"
        )
    racc, lacc = accumulation_points(h)
    acc = racc | lacc
    gens = {alt_sum(h, n_window)}
    for a in acc:
        for b in acc:
            if a != b:
                gens.add(a - b)
    gens.discard(h.group.zero())
    return span(h.group, sorted(gens, key=lambda e: e.residues))


def num_ends(h: EpVector) -> int:
    """The number of topological ends of the cover encoded by h."""
    if not generates(h):
        raise ValueError("vector letters do not generate the group")
    return end_subgroup(h).index


def classify_d2(h: EpVector) -> SurfaceKind:
    """One-ended vs. two-ended type over a two-element group.

    Two ends occur exactly when both tails stabilize on the same letter and
    the finitely many exceptional entries (h_0 counts as an entry) sum to
    zero; everything else is one-ended.
    """
    if h.group.order != 2:
        raise ValueError("the two-type classification needs a two-element group")
    h = normalize(h)
    zero = h.group.zero()
    one = next(e for e in h.group.elements() if not e.is_zero())
    prefixes = h.left_prefix + h.right_prefix
    if h.right_period == (zero,) and h.left_period == (zero,):
        ones = sum(1 for e in prefixes if e == one)
        return SurfaceKind.JACOBS_LADDER if ones % 2 == 0 else SurfaceKind.LOCH_NESS
    if h.right_period == (one,) and h.left_period == (one,):
        zeros = sum(1 for e in prefixes if e == zero) + 1  # h_0 is zero
        return SurfaceKind.JACOBS_LADDER if zeros % 2 == 0 else SurfaceKind.LOCH_NESS
    return SurfaceKind.LOCH_NESS


def ends_report(h: EpVector) -> EndsReport:
    """The full end computation for one vector."""
    if not generates(h):
        raise ValueError("vector letters do not generate the group")
    h = normalize(h)
    n_window = minimal_n(h)
    racc, lacc = accumulation_points(h)
    g_prime = end_subgroup(h, n_window)
    kind = classify_d2(h) if h.group.order == 2 else None
    return EndsReport(
        right_acc=racc,
        left_acc=lacc,
        n_window=n_window,
        alt_sum=alt_sum(h, n_window),
        g_prime=g_prime,
        ends=g_prime.index,
        d2_type=kind,
    )


def construct_max_ends(group: FinAbGroup) -> EpVector:
    """A generating vector with the maximal end count |G|.

    Factor generators are planted at consecutive negative indices and one
    positive entry balances the alternating sum, so G' is trivial.  The
    construction is deterministic and verified before returning.
    """
    gens = group.factor_generators()
    entries: dict[int, GroupElem] = {}
    h1 = group.zero()
    for i, g in enumerate(gens, start=1):
        entries[-(i + 1)] = g
        h1 = h1 + (g if i % 2 == 1 else -g)
    if not h1.is_zero():
        entries[1] = h1
    h = from_entries(group, entries)
    if num_ends(h) != group.order:
        raise RuntimeError("internal error: constructed vector missed |G| ends")
    return h

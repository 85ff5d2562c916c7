"""Deciding whether a cover's symmetry group has finite index.

A vector has finite-index symmetry group exactly when some power of the
hyperbolic letter fixes it, and such fixed vectors satisfy a short list of
boundary relations over one window whose length is a common multiple of the
group order and the vector's one-sided period.  The decision procedure is:
a vector whose normalized form carries a nonempty prefix on either side is
not one-sided periodic and the index is infinite; otherwise the two boundary
relation families are checked over the window lcm(m, d), where m is the
minimal simultaneous one-sided period and d the group order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .vectors import EpVector, normalize


@dataclass(frozen=True)
class IndexVerdict:
    """Outcome of the finite-index decision.

    minimal_period is the minimal simultaneous one-sided period (present
    exactly when the verdict is finite); checked_window is the relation
    window that was verified (0 when the vector is not one-sided periodic);
    witness describes the first failed requirement on infinite verdicts.
    """

    finite: bool
    minimal_period: int | None
    checked_window: int
    witness: str | None


def _relations_hold(h: EpVector, window: int) -> str | None:
    """Check the boundary relations over `window`; return a witness or None."""
    two = lambda e: e.scale(2)
    for k in range(1, window):
        lhs = two(h.entry(window - k + 1)) - h.entry(window - k)
        rhs = two(h.entry(-k - 1)) - h.entry(-k)
        if lhs != rhs:
            return (
                f"boundary relation failed at k={k}: "
                f"2*h[{window - k + 1}]-h[{window - k}]={lhs} "
                f"but 2*h[{-k - 1}]-h[{-k}]={rhs}"
            )
    if h.entry(window) != h.entry(-1).scale(-2):
        return (
            f"corner relation failed: h[{window}]={h.entry(window)} "
            f"but -2*h[-1]={h.entry(-1).scale(-2)}"
        )
    if h.entry(-window) != h.entry(1).scale(-2):
        return (
            f"corner relation failed: h[{-window}]={h.entry(-window)} "
            f"but -2*h[1]={h.entry(1).scale(-2)}"
        )
    return None


def decide_finite_index(h: EpVector) -> IndexVerdict:
    """Decide finite vs. infinite index for the cover encoded by h."""
    h = normalize(h)
    if h.right_prefix or h.left_prefix:
        side = "right" if h.right_prefix else "left"
        return IndexVerdict(
            finite=False,
            minimal_period=None,
            checked_window=0,
            witness=f"not one-sided periodic: nonempty {side} prefix after normalization",
        )
    m = math.lcm(len(h.right_period), len(h.left_period))
    window = math.lcm(m, h.group.order)
    witness = _relations_hold(h, window)
    if witness is not None:
        return IndexVerdict(
            finite=False, minimal_period=None, checked_window=window, witness=witness
        )
    return IndexVerdict(
        finite=True, minimal_period=m, checked_window=window, witness=None
    )


def _one_sided_periodic(h: EpVector, period: int) -> bool:
    """h_{k+period} = h_k for all k >= 1 and h_{-k-period} = h_{-k} for all k >= 1."""
    span = max(len(h.right_prefix), len(h.left_prefix)) + math.lcm(
        len(h.right_period), len(h.left_period)
    )
    for k in range(1, span + 1):
        if h.entry(k + period) != h.entry(k):
            return False
        if h.entry(-k - period) != h.entry(-k):
            return False
    return True


def in_cn(h: EpVector, n: int) -> bool:
    """Membership in the n-th invariant family containing all H^n-fixed vectors.

    The four requirements, over the window dn = |G| * n: one-sided
    dn-periodicity on both sides, vanishing signed sum over one window, the
    boundary relation family, and the two corner relations.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    h = normalize(h)
    dn = h.group.order * n
    if not _one_sided_periodic(h, dn):
        return False
    total = h.group.zero()
    for j in range(1, dn + 1):
        total = total + (h.entry(-j) - h.entry(j))
    if not total.is_zero():
        return False
    return _relations_hold(h, dn) is None


def is_fixed_by_h_pow(h: EpVector, n: int, level: str = "vector") -> bool:
    """Is h fixed by the n-th power of the hyperbolic letter?

    level "vector" compares normalized vectors; level "class" compares
    automorphism classes.
    """
    from .action import act_h_pow
    from .vectors import canonical_class

    if n < 1:
        raise ValueError("n must be >= 1")
    if level not in ("vector", "class"):
        raise ValueError(f"unknown level: {level!r}")
    image = act_h_pow(h, n)
    if level == "vector":
        return image == normalize(h)
    return canonical_class(image) == canonical_class(h)

"""Closed-form actions of the lattice-surface symmetry letters on vectors.

The two parabolic letters P1 and P2, the central letter -I, the hyperbolic
letter H, and their inverses act on eventually periodic vectors entry by
entry.  Each action here synthesizes the output directly as prefix + period:
the output entries are affine in input entries and in the running sums
S(t) = sum_{j=1..t} (-h_j + h_{-j}), and S gains a constant drift per input
period, so the output is eventually periodic with period p * order(2 * drift)
(p = lcm of the input period lengths).  A second full output window is checked
against the first before the result is trusted.

Words are comma-separated tokens P1, P2, -I, H with optional integer
exponents (e.g. "P1^-2,H^3,P2"); the leftmost letter acts last.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .groups import FinAbGroup, GroupElem
from .vectors import EpVector, normalize


class WordParseError(ValueError):
    """Raised for a malformed word string."""


class GeneratorLetter(enum.Enum):
    P1 = "P1"
    P1_INV = "P1^-1"
    P2 = "P2"
    P2_INV = "P2^-1"
    NEG_ID = "-I"
    H = "H"
    H_INV = "H^-1"


_BASE_OF = {
    GeneratorLetter.P1: (GeneratorLetter.P1, 1),
    GeneratorLetter.P1_INV: (GeneratorLetter.P1, -1),
    GeneratorLetter.P2: (GeneratorLetter.P2, 1),
    GeneratorLetter.P2_INV: (GeneratorLetter.P2, -1),
    GeneratorLetter.NEG_ID: (GeneratorLetter.NEG_ID, 1),
    GeneratorLetter.H: (GeneratorLetter.H, 1),
    GeneratorLetter.H_INV: (GeneratorLetter.H, -1),
}

_TOKEN_OF = {
    GeneratorLetter.P1: "P1",
    GeneratorLetter.P2: "P2",
    GeneratorLetter.NEG_ID: "-I",
    GeneratorLetter.H: "H",
}


@dataclass(frozen=True)
class Word:
    """A product of letters with nonzero integer exponents, leftmost acts last."""

    letters: tuple[tuple[GeneratorLetter, int], ...]

    def inverse(self) -> "Word":
        return Word(tuple((ltr, -exp) for ltr, exp in reversed(self.letters)))


def simplify_word(letters) -> Word:
    """Normalize to base letters, merge adjacent runs, drop zero exponents."""
    flat: list[tuple[GeneratorLetter, int]] = []
    for ltr, exp in letters:
        base, sign = _BASE_OF[ltr]
        exp = exp * sign
        if exp == 0:
            continue
        if flat and flat[-1][0] == base:
            merged = flat[-1][1] + exp
            flat.pop()
            if merged != 0:
                flat.append((base, merged))
        else:
            flat.append((base, exp))
    return Word(tuple(flat))


_WORD_TOKEN_RE = re.compile(r"(P1|P2|-I|H)(?:\^(-?[0-9]+))?")


def parse_word(text: str) -> Word:
    """Parse a word like "P1^-2,H^3,P2". The empty string is the identity."""
    if text == "":
        return Word(())
    letters = []
    for token in text.split(","):
        m = _WORD_TOKEN_RE.fullmatch(token)
        if m is None:
            raise WordParseError(f"malformed word token: {token!r}")
        name, exp_txt = m.groups()
        ltr = {
            "P1": GeneratorLetter.P1,
            "P2": GeneratorLetter.P2,
            "-I": GeneratorLetter.NEG_ID,
            "H": GeneratorLetter.H,
        }[name]
        letters.append((ltr, 1 if exp_txt is None else int(exp_txt)))
    return simplify_word(letters)


def format_word(w: Word) -> str:
    parts = []
    for ltr, exp in w.letters:
        token = _TOKEN_OF[ltr]
        parts.append(token if exp == 1 else f"{token}^{exp}")
    return ",".join(parts)


@dataclass(frozen=True)
class Mat2Q:
    """A 2x2 matrix over exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __matmul__(self, other: "Mat2Q") -> "Mat2Q":
        return Mat2Q(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "Mat2Q":
        det = self.det()
        return Mat2Q(self.d / det, -self.b / det, -self.c / det, self.a / det)

    @staticmethod
    def identity() -> "Mat2Q":
        return Mat2Q(Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def _mat(a, b, c, d) -> Mat2Q:
    return Mat2Q(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


LETTER_MATRIX = {
    GeneratorLetter.P1: _mat(4, -3, 3, -2),
    GeneratorLetter.P2: _mat(4, Fraction(-3, 2), 6, -2),
    GeneratorLetter.NEG_ID: _mat(-1, 0, 0, -1),
    GeneratorLetter.H: _mat(2, 0, 0, Fraction(1, 2)),
}


def word_matrix(w: Word) -> Mat2Q:
    """The exact rational matrix of a word (leftmost letter leftmost in the product)."""
    out = Mat2Q.identity()
    for ltr, exp in w.letters:
        base = LETTER_MATRIX[ltr]
        if exp < 0:
            base = base.inverse()
        for _ in range(abs(exp)):
            out = out @ base
    return out


def _tail_values(prefix, period, count: int) -> list[GroupElem]:
    """The first `count` entries of one side, outward from the origin."""
    out = list(prefix[:count])
    i = 0
    while len(out) < count:
        out.append(period[i % len(period)])
        i += 1
    return out


class _Ctx:
    """Entry and running-sum access for one input vector over a finite window."""

    def __init__(self, h: EpVector, m: int):
        self.h = h
        self.zero = h.group.zero()
        self.right = _tail_values(h.right_prefix, h.right_period, m)
        self.left = _tail_values(h.left_prefix, h.left_period, m)
        sums = [self.zero]
        for j in range(m):
            sums.append(sums[-1] + (self.left[j] - self.right[j]))
        self.sums = sums  # sums[t] = S(t)

    def e(self, k: int) -> GroupElem:
        return self.right[k - 1] if k > 0 else self.left[-k - 1]

    def s(self, t: int) -> GroupElem:
        return self.sums[t]


def _shape(h: EpVector) -> tuple[int, int]:
    """(max prefix length, lcm of period lengths) of a normalized vector."""
    k0 = max(len(h.right_prefix), len(h.left_prefix))
    p = math.lcm(len(h.right_period), len(h.left_period))
    return k0, p


def _drift_order(h: EpVector, k0: int, p: int) -> int:
    """order(2 * delta) where delta is the S-increment over one period window."""
    ctx = _Ctx(h, k0 + 2 * p + 1)
    delta = ctx.s(k0 + 2 * p) - ctx.s(k0 + p)
    return delta.scale(2).order()


def _materialize(group: FinAbGroup, fn, k0: int, period: int) -> EpVector:
    """Build a vector from an entry function, verifying one extra window."""
    m = k0 + 2 * period

    def side(sign: int):
        vals = [fn(sign * k) for k in range(1, m + 1)]
        if vals[k0 + period : k0 + 2 * period] != vals[k0 : k0 + period]:
            raise RuntimeError(
                "internal error: synthesized tail failed its window check"
            )
        return tuple(vals[:k0]), tuple(vals[k0 : k0 + period])

    rpre, rper = side(1)
    lpre, lper = side(-1)
    return normalize(EpVector(group, rpre, rper, lpre, lper))


def act_p1(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    period = p * _drift_order(h, k0, p)
    ctx = _Ctx(h, k0 + 2 + 2 * period + 1)

    def fn(k: int) -> GroupElem:
        if k >= 1:
            return ctx.e(-k) + ctx.s(k - 1).scale(2)
        kk = -k
        return ctx.e(kk) + ctx.s(kk).scale(2)

    return _materialize(h.group, fn, k0 + 2, period)


def act_p1_inv(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    period = p * _drift_order(h, k0, p)
    ctx = _Ctx(h, k0 + 2 + 2 * period + 1)

    def fn(k: int) -> GroupElem:
        if k >= 1:
            return ctx.e(k).scale(2) - ctx.e(-k) + ctx.s(k - 1).scale(-2)
        kk = -k
        return ctx.e(kk) + ctx.s(kk - 1).scale(-2)

    return _materialize(h.group, fn, k0 + 2, period)


def act_p2(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    period = p * _drift_order(h, k0, p)
    ctx = _Ctx(h, k0 + 2 + 2 * period + 2)

    def fn(k: int) -> GroupElem:
        if k >= 1:
            return (
                ctx.e(-1)
                + ctx.e(-k - 1)
                + ctx.e(-k).scale(2)
                + ctx.s(k - 1).scale(2)
            )
        if k == -1:
            return ctx.e(-1)
        kk = -k
        return (
            ctx.e(-1)
            + ctx.e(kk - 1)
            + ctx.e(-kk).scale(2)
            + ctx.s(kk - 1).scale(2)
        )

    return _materialize(h.group, fn, k0 + 2, period)


def act_p2_inv(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    period = p * _drift_order(h, k0, p)
    ctx = _Ctx(h, k0 + 2 + 2 * period + 2)

    def fn(k: int) -> GroupElem:
        if k >= 1:
            return ctx.s(k).scale(-2) - ctx.e(-1) - ctx.e(-k - 1)
        if k == -1:
            return ctx.e(-1)
        kk = -k
        return ctx.s(kk - 1).scale(-2) - ctx.e(kk - 1) - ctx.e(-1)

    return _materialize(h.group, fn, k0 + 2, period)


def act_neg(h: EpVector) -> EpVector:
    mapw = lambda w: tuple(-e for e in w)
    return normalize(
        EpVector(
            h.group,
            mapw(h.right_prefix),
            mapw(h.right_period),
            mapw(h.left_prefix),
            mapw(h.left_period),
        )
    )


def act_h(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    ctx = _Ctx(h, k0 + 3 + 2 * p + 1)

    def fn(k: int) -> GroupElem:
        if k == 1:
            return -ctx.e(-1)
        return ctx.e(k - 1) + ctx.e(-1)

    return _materialize(h.group, fn, k0 + 3, p)


def act_h_inv(h: EpVector) -> EpVector:
    k0, p = _shape(h)
    ctx = _Ctx(h, k0 + 3 + 2 * p + 1)

    def fn(k: int) -> GroupElem:
        if k == -1:
            return -ctx.e(1)
        return ctx.e(k + 1) + ctx.e(1)

    return _materialize(h.group, fn, k0 + 3, p)


def act_h_pow(h: EpVector, n: int) -> EpVector:
    """The n-th power of the hyperbolic letter in one pass (any integer n)."""
    if n == 0:
        return normalize(h)
    if n < 0:
        out = h
        for _ in range(-n):
            out = act_h_inv(out)
        return out
    k0, p = _shape(h)
    ctx = _Ctx(h, k0 + n + 2 + 2 * p + n + 1)
    c = ctx.zero
    for j in range(1, n + 1):
        c = c + ctx.e(-j).scale(2 ** (n - j))

    def fn(k: int) -> GroupElem:
        if 1 <= k <= n:
            acc = c - ctx.e(-n + k - 1).scale(2)
            for j in range(1, n - k + 1):
                acc = acc - ctx.e(-j).scale(3 * 2 ** (n - k - j))
            return acc
        return ctx.e(k - n) + c

    return _materialize(h.group, fn, k0 + n + 2, p)


def act_letter(h: EpVector, letter: GeneratorLetter) -> EpVector:
    return {
        GeneratorLetter.P1: act_p1,
        GeneratorLetter.P1_INV: act_p1_inv,
        GeneratorLetter.P2: act_p2,
        GeneratorLetter.P2_INV: act_p2_inv,
        GeneratorLetter.NEG_ID: act_neg,
        GeneratorLetter.H: act_h,
        GeneratorLetter.H_INV: act_h_inv,
    }[letter](h)


def act_word(h: EpVector, w: Word) -> EpVector:
    """Apply a word to a vector, rightmost letter first."""
    out = normalize(h)
    for ltr, exp in reversed(w.letters):
        if ltr is GeneratorLetter.NEG_ID:
            if exp % 2 == 1:
                out = act_neg(out)
            continue
        if ltr is GeneratorLetter.H:
            out = act_h_pow(out, exp)
            continue
        fwd = act_p1 if ltr is GeneratorLetter.P1 else act_p2
        bwd = act_p1_inv if ltr is GeneratorLetter.P1 else act_p2_inv
        step = fwd if exp > 0 else bwd
        for _ in range(abs(exp)):
            out = step(out)
    return out

"""Exact arithmetic in finite abelian groups given as products of cyclic factors.

A group is a product Z_{n_1} x ... x Z_{n_r} with every n_i >= 2.  Elements
are residue tuples; there is no canonicalization across presentations, so
Z2xZ3 and Z6 are distinct artifacts even though they are isomorphic.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import reduce


class GroupParseError(ValueError):
    """Raised for a malformed group spec string."""


class AutomorphismBoundError(RuntimeError):
    """Raised when a group is too large for automorphism enumeration."""


_GROUP_SPEC_RE = re.compile(r"Z[0-9]+(?:xZ[0-9]+)*")


@dataclass(frozen=True)
class FinAbGroup:
    """A finite abelian group presented as a product of cyclic factors."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli:
            raise GroupParseError("a group needs at least one cyclic factor")
        if any(not isinstance(n, int) or n < 2 for n in self.moduli):
            raise GroupParseError(f"factor moduli must be integers >= 2: {self.moduli}")

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def spec(self) -> str:
        return "x".join(f"Z{n}" for n in self.moduli)

    def zero(self) -> "GroupElem":
        return GroupElem(self, (0,) * len(self.moduli))

    def elem(self, *residues: int) -> "GroupElem":
        """Build an element, reducing each residue mod its factor."""
        if len(residues) == 1 and not isinstance(residues[0], int):
            residues = tuple(residues[0])
        if len(residues) != len(self.moduli):
            raise ValueError(
                f"expected {len(self.moduli)} residues, got {len(residues)}"
            )
        if any(not isinstance(r, int) for r in residues):
            raise ValueError(f"residues must be integers: {residues}")
        return GroupElem(self, tuple(r % n for r, n in zip(residues, self.moduli)))

    def elements(self):
        """All elements, in lexicographic residue order."""
        for residues in itertools.product(*(range(n) for n in self.moduli)):
            yield GroupElem(self, residues)

    def factor_generators(self) -> tuple["GroupElem", ...]:
        gens = []
        for i in range(len(self.moduli)):
            residues = [0] * len(self.moduli)
            residues[i] = 1
            gens.append(GroupElem(self, tuple(residues)))
        return tuple(gens)

    def __str__(self) -> str:
        return self.spec()


@dataclass(frozen=True)
class GroupElem:
    """An element of a FinAbGroup, stored as a reduced residue tuple.

    Arithmetic always produces reduced residues, so validation lives in the
    public constructors (FinAbGroup.elem, parse_elem), keeping the operators
    cheap on hot paths.
    """

    group: FinAbGroup
    residues: tuple[int, ...]

    def __add__(self, other: "GroupElem") -> "GroupElem":
        self._check_same_group(other)
        return GroupElem(
            self.group,
            tuple(
                (a + b) % n
                for a, b, n in zip(self.residues, other.residues, self.group.moduli)
            ),
        )

    def __neg__(self) -> "GroupElem":
        return GroupElem(
            self.group,
            tuple((-a) % n for a, n in zip(self.residues, self.group.moduli)),
        )

    def __sub__(self, other: "GroupElem") -> "GroupElem":
        return self + (-other)

    def scale(self, k: int) -> "GroupElem":
        """k-fold sum of self (k may be any integer)."""
        return GroupElem(
            self.group,
            tuple((k * a) % n for a, n in zip(self.residues, self.group.moduli)),
        )

    def order(self) -> int:
        """Least t >= 1 with t * self = 0."""
        return reduce(
            math.lcm,
            (n // math.gcd(a, n) for a, n in zip(self.residues, self.group.moduli)),
            1,
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.residues)

    def _check_same_group(self, other: "GroupElem") -> None:
        if self.group != other.group:
            raise ValueError("elements live in different groups")

    def __str__(self) -> str:
        return ":".join(str(a) for a in self.residues)


def parse_group(spec: str) -> FinAbGroup:
    """Parse a spec like "Z2" or "Z2xZ4"; whitespace is not allowed."""
    if not _GROUP_SPEC_RE.fullmatch(spec):
        raise GroupParseError(f"malformed group spec: {spec!r}")
    moduli = tuple(int(part[1:]) for part in spec.split("x"))
    if any(n < 2 for n in moduli):
        raise GroupParseError(f"factor moduli must be >= 2: {spec!r}")
    return FinAbGroup(moduli)


def parse_elem(group: FinAbGroup, text: str) -> GroupElem:
    """Parse an element serialized as colon-joined residues, e.g. "1:3"."""
    parts = text.split(":")
    if len(parts) != group.rank:
        raise ValueError(
            f"expected {group.rank} residues for {group}, got {text!r}"
        )
    residues = []
    for part, n in zip(parts, group.moduli):
        if not re.fullmatch(r"[0-9]+", part):
            raise ValueError(f"malformed residue {part!r} in {text!r}")
        r = int(part)
        if r >= n:
            raise ValueError(f"residue {r} out of range for modulus {n}")
        residues.append(r)
    return GroupElem(group, tuple(residues))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its full element set and a generating set."""

    group: FinAbGroup
    elements: frozenset[GroupElem]
    generators: tuple[GroupElem, ...] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.group.order // len(self.elements)

    def __contains__(self, elem: GroupElem) -> bool:
        return elem in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def span(group: FinAbGroup, gens=()) -> Subgroup:
    """The subgroup generated by gens (the trivial subgroup for empty gens)."""
    gens = tuple(gens)
    for g in gens:
        if g.group != group:
            raise ValueError("generator lives in a different group")
    elems = {group.zero()}
    frontier = [group.zero()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a + g
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(group, frozenset(elems), gens)


class Automorphism:
    """An additive bijection of a FinAbGroup, tabulated for fast application."""

    __slots__ = ("group", "images", "_table")

    def __init__(self, group: FinAbGroup, images: tuple[GroupElem, ...]):
        self.group = group
        self.images = images
        table = {}
        for a in group.elements():
            acc = group.zero()
            for r, img in zip(a.residues, images):
                acc = acc + img.scale(r)
            table[a.residues] = acc
        self._table = table

    def __call__(self, a: GroupElem) -> GroupElem:
        return self._table[a.residues]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Automorphism)
            and self.group == other.group
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.group, self.images))

    def __repr__(self) -> str:
        return f"Automorphism({self.group}, {[str(x) for x in self.images]})"


# Automorphism tables are deterministic per moduli tuple, so a shared cache is
# safe to publish once computed.
_AUT_CACHE: dict[tuple[int, ...], tuple[Automorphism, ...]] = {}


def _extend_span(group: FinAbGroup, base: frozenset, g: GroupElem) -> frozenset:
    """Elements of <base u {g}> when base is already a subgroup."""
    out = set()
    step = group.zero()
    for _ in range(g.order()):
        for b in base:
            out.add(b + step)
        step = step + g
    return frozenset(out)


def automorphisms(group: FinAbGroup, max_order: int = 64) -> tuple[Automorphism, ...]:
    """All automorphisms of the group, in a deterministic order.

    Candidates send each factor generator to an element of the same exact
    order; partial choices are pruned unless the chosen images span a subgroup
    of full expected size, which forces injectivity level by level.
    """
    cached = _AUT_CACHE.get(group.moduli)
    if cached is not None:
        return cached
    if group.order > max_order:
        raise AutomorphismBoundError(
            f"group order {group.order} exceeds the automorphism bound {max_order}"
        )
    candidates = []
    for n in group.moduli:
        candidates.append([x for x in group.elements() if x.order() == n])
    found: list[Automorphism] = []
    images: list[GroupElem] = []

    def rec(i: int, spanned: frozenset) -> None:
        if i == len(group.moduli):
            found.append(Automorphism(group, tuple(images)))
            return
        expected = math.prod(group.moduli[: i + 1])
        for x in candidates[i]:
            grown = _extend_span(group, spanned, x)
            if len(grown) != expected:
                continue
            images.append(x)
            rec(i + 1, grown)
            images.pop()

    rec(0, frozenset({group.zero()}))
    result = tuple(found)
    _AUT_CACHE.setdefault(group.moduli, result)
    return result

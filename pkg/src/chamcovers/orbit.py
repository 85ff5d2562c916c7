"""Coset (Schreier) graphs of vector classes under the two parabolic letters.

Vertices are automorphism classes of vectors; vertex 0 is the input class.
Edges record the forward P1 and P2 moves; breadth-first closure also follows
the inverse moves so the vertex set is the full orbit.  The central letter
acts trivially on classes and is omitted.  A cap bounds the number of
vertices: hitting it is a verdict ("did not close within cap"), not an error.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .action import (
    GeneratorLetter,
    Word,
    act_p1,
    act_p1_inv,
    act_p2,
    act_p2_inv,
)
from .finite_index import decide_finite_index
from .vectors import EpVector, VectorClass, canonical_class, format_vector


class GraphType(enum.Enum):
    STRIEZEL = "Striezel"
    KRANZ = "Kranz"
    OTHER = "Other"


@dataclass(frozen=True)
class SchreierGraph:
    """A (possibly truncated) coset graph.

    p1_edges[i] / p2_edges[i] give the forward-move targets of vertex i, or
    None when the vertex was never expanded (only possible after a cap hit).
    """

    vertices: tuple[VectorClass, ...]
    p1_edges: tuple[int | None, ...]
    p2_edges: tuple[int | None, ...]
    complete: bool
    cap_hit: bool

    @property
    def order(self) -> int:
        return len(self.vertices)


def orbit_bfs(h: EpVector, cap: int = 10000) -> SchreierGraph:
    """Breadth-first closure of the class of h under both parabolic moves."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    start = canonical_class(h)
    index: dict[VectorClass, int] = {start: 0}
    vertices: list[VectorClass] = [start]
    p1_map: dict[int, int] = {}
    p2_map: dict[int, int] = {}
    queue: deque[int] = deque([0])
    cap_hit = False
    while queue and not cap_hit:
        i = queue.popleft()
        rep = vertices[i].representative
        images = (
            ("p1", act_p1(rep)),
            ("p1_inv", act_p1_inv(rep)),
            ("p2", act_p2(rep)),
            ("p2_inv", act_p2_inv(rep)),
        )
        for name, img in images:
            cls = canonical_class(img)
            j = index.get(cls)
            if j is None:
                if len(vertices) >= cap:
                    cap_hit = True
                    break
                j = len(vertices)
                index[cls] = j
                vertices.append(cls)
                queue.append(j)
            if name == "p1":
                p1_map[i] = j
            elif name == "p2":
                p2_map[i] = j
    complete = not cap_hit
    return SchreierGraph(
        vertices=tuple(vertices),
        p1_edges=tuple(p1_map.get(i) for i in range(len(vertices))),
        p2_edges=tuple(p2_map.get(i) for i in range(len(vertices))),
        complete=complete,
        cap_hit=cap_hit,
    )


_HARD_CAP = 2**20


def veech_index(h: EpVector) -> int | None:
    """The index of the cover's symmetry group, or None when infinite.

    Finite verdicts come from the relation decision; the orbit is then closed
    with an adaptive cap (doubling from a window-derived start) so the two
    routes cross-check each other.
    """
    verdict = decide_finite_index(h)
    if not verdict.finite:
        return None
    cap = max(16, 4 * h.group.order * verdict.checked_window)
    while True:
        graph = orbit_bfs(h, cap)
        if graph.complete:
            return graph.order
        if cap > _HARD_CAP:
            raise RuntimeError(
                "finite-index verdict but the orbit did not close below "
                f"{_HARD_CAP} vertices; the two decision routes disagree"
            )
        cap *= 2


def projective_rank(h: EpVector) -> int | None:
    """Free rank of the cover's projective symmetry group (index + 1), or None."""
    idx = veech_index(h)
    return None if idx is None else idx + 1


def _inverse_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


def _classify(graph: SchreierGraph) -> tuple[GraphType, str | None]:
    n = graph.order
    p1, p2 = graph.p1_edges, graph.p2_edges
    for perm, name in ((p1, "P1"), (p2, "P2")):
        if sorted(x for x in perm if x is not None) != list(range(n)):
            return GraphType.OTHER, f"{name} edges are not a permutation"
        if any(perm[perm[i]] != i for i in range(n)):
            return GraphType.OTHER, f"{name} edges are not an involution"
    loops = [(i, 0) for i in range(n) if p1[i] == i]
    loops += [(i, 1) for i in range(n) if p2[i] == i]
    perms = (p1, p2)
    if loops:
        # Path shape: exactly two loop-decorated endpoints joined by a simple
        # path whose edges alternate between the two letters.
        if len(loops) != 2:
            return GraphType.OTHER, f"expected 2 loops on a path, found {len(loops)}"
        (v0, l0), (v1, l1) = loops
        if n == 1:
            if v0 == v1 and l0 != l1:
                return GraphType.STRIEZEL, None
            return GraphType.OTHER, "single vertex without both loops"
        if v0 == v1:
            return GraphType.OTHER, "both loops on one vertex of a larger graph"
        seen = {v0}
        cur, letter = v0, 1 - l0
        while True:
            nxt = perms[letter][cur]
            if nxt == cur:
                break
            if nxt in seen:
                return GraphType.OTHER, "path revisits a vertex"
            seen.add(nxt)
            cur, letter = nxt, 1 - letter
        if cur != v1 or letter != l1:
            return GraphType.OTHER, "walk does not end at the second loop"
        if len(seen) != n:
            return GraphType.OTHER, "graph is not connected as a single path"
        return GraphType.STRIEZEL, None
    # Cycle shape: one even cycle alternating between the two letters.
    if n % 2 != 0:
        return GraphType.OTHER, "loopless graph of odd order cannot alternate"
    seen = {0}
    cur, letter = 0, 0
    for _ in range(n - 1):
        nxt = perms[letter][cur]
        if nxt in seen:
            return GraphType.OTHER, "cycle walk revisits a vertex early"
        seen.add(nxt)
        cur, letter = nxt, 1 - letter
    if perms[letter][cur] != 0:
        return GraphType.OTHER, "alternating walk does not close into one cycle"
    return GraphType.KRANZ, None


def classify_type(graph: SchreierGraph) -> GraphType:
    """Striezel (path with two loop ends), Kranz (even alternating cycle), or Other.

    Requires a complete graph over a two-element group.
    """
    if not graph.complete:
        raise ValueError("cannot classify a truncated orbit graph")
    if graph.vertices and graph.vertices[0].group.order != 2:
        raise ValueError("graph classification applies to two-element groups only")
    kind, _ = _classify(graph)
    return kind


def classify_with_reason(graph: SchreierGraph) -> tuple[GraphType, str | None]:
    """Like classify_type but returning the diagnostic for Other verdicts."""
    if not graph.complete:
        raise ValueError("cannot classify a truncated orbit graph")
    kind, reason = _classify(graph)
    return kind, reason


def _free_reduce(letters) -> tuple:
    stack: list[tuple[GeneratorLetter, int]] = []
    for ltr, exp in letters:
        if exp == 0:
            continue
        if stack and stack[-1][0] == ltr:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((ltr, merged))
        else:
            stack.append((ltr, exp))
    return tuple(stack)


def stabilizer_generators(graph: SchreierGraph) -> tuple[Word, ...]:
    """Words generating the stabilizer of vertex 0, from a spanning tree.

    One word per non-tree forward edge; for a complete graph of order n the
    count is n + 1 (the free rank of the stabilizer).
    """
    if not graph.complete:
        raise ValueError("stabilizer generators need a complete orbit graph")
    n = graph.order
    p1, p2 = graph.p1_edges, graph.p2_edges
    moves = (
        (GeneratorLetter.P1, 1, p1),
        (GeneratorLetter.P1, -1, _inverse_perm(p1)),
        (GeneratorLetter.P2, 1, p2),
        (GeneratorLetter.P2, -1, _inverse_perm(p2)),
    )
    transversal: list[tuple | None] = [None] * n
    transversal[0] = ()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for ltr, exp, perm in moves:
            w = perm[v]
            if transversal[w] is None:
                transversal[w] = ((ltr, exp),) + transversal[v]
                queue.append(w)
    gens: list[Word] = []
    for v in range(n):
        for ltr, perm in ((GeneratorLetter.P1, p1), (GeneratorLetter.P2, p2)):
            w = perm[v]
            inverse_tw = tuple((l, -e) for l, e in reversed(transversal[w]))
            reduced = _free_reduce(inverse_tw + ((ltr, 1),) + transversal[v])
            if reduced:
                gens.append(Word(reduced))
    return tuple(gens)


def orbit_report(graph: SchreierGraph) -> dict:
    """A JSON-ready summary: order, vertex serializations, edge arrays, type."""
    if graph.vertices and graph.vertices[0].group.order == 2 and graph.complete:
        kind = classify_type(graph).value
    else:
        kind = None
    return {
        "order": graph.order,
        "vertices": [
            format_vector(c.representative) for c in graph.vertices
        ],
        "p1_edges": list(graph.p1_edges),
        "p2_edges": list(graph.p2_edges),
        "type": kind,
    }


def dot_from_report(report: dict) -> str:
    """Deterministic DOT rendering of an orbit report."""
    lines = ["digraph schreier {", "  rankdir=LR;"]
    for i, label in enumerate(report["vertices"]):
        lines.append(f'  {i} [label="{label}"];')
    for i, j in enumerate(report["p1_edges"]):
        if j is not None:
            lines.append(f'  {i} -> {j} [label="P1"];')
    for i, j in enumerate(report["p2_edges"]):
        if j is not None:
            lines.append(f'  {i} -> {j} [label="P2"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def schreier_dot(graph: SchreierGraph) -> str:
    """DOT text for the graph; byte-stable across runs for the same input."""
    return dot_from_report(orbit_report(graph))

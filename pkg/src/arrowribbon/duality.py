"""Deletion, partial duality, contraction and canonical forms.

Partial duality over ``D`` swaps the roles of attaching arcs and free edge
arcs on every edge of ``D``; arrows stay on the arcs that carry them, so
arrows on the free sides of an edge in ``D`` end up on its attaching arcs and
vice versa.  The new vertices are then the traced boundary circles of
``(V, D)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable

from .ribbon import ArrowRibbonGraph, GraphError, _flip, make_graph

__all__ = [
    "CanonicalForm",
    "CanonicalFormTooLarge",
    "delete",
    "partial_dual",
    "contract",
    "natural_dual",
    "canonical_form",
    "equivalent",
    "is_loop",
    "is_orientable_loop",
    "is_trivial_orientable_loop",
    "is_bridge",
]


class CanonicalFormTooLarge(ValueError):
    """Graph exceeds the configured size bound for canonicalisation."""


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Hashable encoding equal for exactly the equivalent graphs."""

    code: tuple

    def __str__(self) -> str:
        return repr(self.code)


def _edge_set(G: ArrowRibbonGraph, edges: Iterable[Hashable]) -> set[int]:
    out = set()
    for e in edges:
        try:
            out.add(G.edge_index(e))
        except KeyError:
            raise GraphError(f"unknown edge {e!r}") from None
    return out


def partial_dual(G: ArrowRibbonGraph, D: Iterable[Hashable]) -> ArrowRibbonGraph:
    """``G^D``: exchange attaching and free edge arcs on the edges of ``D``."""
    idx = _edge_set(G, D)
    if not idx:
        return G
    attach = list(G.attach)
    free = list(G.free)
    for i in idx:
        for f in range(4 * i, 4 * i + 4):
            attach[f], free[f] = G.free[f], G.attach[f]
    return ArrowRibbonGraph(G.edge_ids, tuple(attach), tuple(free), G.corner,
                            dict(G.arrows), G.lone, G.signs, G.sides)


def natural_dual(G: ArrowRibbonGraph) -> ArrowRibbonGraph:
    return partial_dual(G, G.edge_ids)


def delete(G: ArrowRibbonGraph, e: Hashable) -> ArrowRibbonGraph:
    """``G - e``.

    Attaching-arc arrows of ``e`` are spliced, in order, into the vertex arc
    that replaces the removed segment; free-side arrows of ``e`` disappear.
    A vertex left without edges keeps its boundary word as a lone vertex.
    """
    (i,) = _edge_set(G, [e])
    gone = range(4 * i, 4 * i + 4)

    def new(f: int) -> int:
        return f if f < 4 * i else f - 4

    n = G.n_flags
    attach, free, corner = [], [], []
    arcs = []
    for f in range(n):
        if f in gone:
            continue
        attach.append(new(G.attach[f]))
        free.append(new(G.free[f]))
        if G.attach[f] > f:
            arcs.append(("e", new(f), new(G.attach[f]), G.arc_word("e", f, G.attach[f])))
        if G.free[f] > f:
            arcs.append(("e", new(f), new(G.free[f]), G.arc_word("e", f, G.free[f])))
        word = list(G.arc_word("v", f, G.corner[f]))
        y = G.corner[f]
        while y in gone:
            z = G.attach[y]
            word += G.arc_word("e", y, z)
            word += G.arc_word("v", z, G.corner[z])
            y = G.corner[z]
        corner.append(new(y))
        if y > f:
            arcs.append(("v", new(f), new(y), tuple(word)))
        elif y == f:
            raise AssertionError("vertex arc closed onto itself")
    lone = list(G.lone)
    for cyc in G.vertex_cycles:
        if all(f in gone for f in cyc):
            word: list = []
            for j in range(0, len(cyc), 2):
                a, b = cyc[j], cyc[j + 1]
                word += G.arc_word("e", a, b)
                word += G.arc_word("v", b, cyc[(j + 2) % len(cyc)])
            lone.append(tuple(word))
    ids = G.edge_ids[:i] + G.edge_ids[i + 1:]
    signs = None if G.signs is None else G.signs[:i] + G.signs[i + 1:]
    sides = None if G.sides is None else G.sides[:4 * i] + G.sides[4 * i + 4:]
    return make_graph(ids, attach, free, corner, arcs, lone, signs, sides)


def contract(G: ArrowRibbonGraph, e: Hashable) -> ArrowRibbonGraph:
    """``G/e = G^{e} - e``."""
    return delete(partial_dual(G, [e]), e)


# -- loop predicates ------------------------------------------------------

def is_loop(G: ArrowRibbonGraph, e: Hashable) -> bool:
    f = 4 * G.edge_index(e)
    return G.vertex_of[f] == G.vertex_of[G.free[f]]


def _cycle_parity(G: ArrowRibbonGraph) -> list[int]:
    parity = [0] * G.n_flags
    for cyc in G.vertex_cycles:
        for j, f in enumerate(cyc):
            parity[f] = j & 1
    return parity


def is_orientable_loop(G: ArrowRibbonGraph, e: Hashable) -> bool:
    """Loop whose union with its vertex is an annulus (not a Moebius band)."""
    if not is_loop(G, e):
        return False
    f = 4 * G.edge_index(e)
    parity = _cycle_parity(G)
    return parity[f] != parity[G.free[f]]


def is_trivial_orientable_loop(G: ArrowRibbonGraph, e: Hashable) -> bool:
    """Orientable loop whose contraction splits off a new component.

    This holds when nothing is attached on one of the two sides of the loop
    (in particular when its ends are adjacent in the rotation), which is
    exactly the situation where contraction leaves ``k(G/e) = k(G) + 1``.
    """
    if not is_orientable_loop(G, e):
        return False
    full = (1 << G.n_edges) - 1
    Ge = contract(G, e)
    return Ge.components_count((1 << Ge.n_edges) - 1) == G.components_count(full) + 1


def is_bridge(G: ArrowRibbonGraph, e: Hashable) -> bool:
    i = G.edge_index(e)
    full = (1 << G.n_edges) - 1
    return G.components_count(full & ~(1 << i)) > G.components_count(full)


# -- canonical form -------------------------------------------------------

def _component_code(G: ArrowRibbonGraph, start: int, with_sides: bool,
                    with_signs: bool) -> tuple:
    ops = (G.attach, G.free, G.corner)
    kinds = ("e", "e", "v")
    label = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for op in ops:
            g = op[f]
            if g not in label:
                label[g] = len(order)
                order.append(g)
                queue.append(g)
    code = []
    for f in order:
        row: list = []
        for op, kind in zip(ops, kinds):
            g = op[f]
            row.append(label[g])
            row.append((1,) + G.arc_word(kind, f, g) if label[f] < label[g] else (0,))
        if with_signs:
            row.append(G.signs[f >> 2])
        if with_sides:
            row.append(G.sides[f])
        code.append(tuple(row))
    return tuple(code)


def _lone_code(word: tuple, reflections: bool) -> tuple:
    variants = [word]
    if reflections:
        variants.append(_flip(word))
    best = None
    for w in variants:
        for r in range(max(len(w), 1)):
            rot = w[r:] + w[:r]
            if best is None or rot < best:
                best = rot
    return best


def canonical_form(G: ArrowRibbonGraph, *, reflections: bool = True,
                   signs: bool | None = None, max_edges: int | None = 8) -> CanonicalForm:
    """Relabelling-invariant encoding of ``G``.

    Args:
        reflections: quotient by orientation-reversing homeomorphisms too.
            With ``False`` the counterclockwise sense recorded at
            construction time is part of the form.
        signs: include edge signs; defaults to ``G.is_signed``.
        max_edges: refuse graphs with more edges (``None`` disables).
    """
    if max_edges is not None and G.n_edges > max_edges:
        raise CanonicalFormTooLarge(f"{G.n_edges} edges exceed the bound {max_edges}")
    with_signs = G.is_signed if signs is None else signs and G.is_signed
    with_sides = not reflections and G.sides is not None
    seen = [False] * G.n_flags
    comps = []
    for f0 in range(G.n_flags):
        if seen[f0]:
            continue
        members = []
        stack = [f0]
        seen[f0] = True
        while stack:
            f = stack.pop()
            members.append(f)
            for g in (G.attach[f], G.free[f], G.corner[f]):
                if not seen[g]:
                    seen[g] = True
                    stack.append(g)
        comps.append(min(_component_code(G, s, with_sides, with_signs) for s in members))
    lone = sorted(_lone_code(tuple(w), reflections) for w in G.lone)
    return CanonicalForm((tuple(sorted(comps)), tuple(lone)))


def equivalent(G: ArrowRibbonGraph, H: ArrowRibbonGraph, **kwargs) -> bool:
    return canonical_form(G, **kwargs) == canonical_form(H, **kwargs)

